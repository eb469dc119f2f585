"""Koszul complexes over prime fields and derived symmetric powers.

The weight-n Koszul complex on V = (F_p)^r has terms wedge^a(V) (x)
sym^(n-a)(V); the differential moves one wedge factor into the symmetric
side with alternating sign.  Derived symmetric powers are cokernels of these
differentials, with the top derived functor reducing to a plain wedge power.
A second, generators-and-relations presentation of the same groups is kept
alongside so the two descriptions can be compared dimension by dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import intlinalg as la
from .bases import (
    basis_index,
    basis_size,
    enumerate_basis,
    sym_multiply,
    wedge_delete,
)
from .intlinalg import NotPrimeError, is_prime


class DegreeOutOfRangeError(ValueError):
    """Derived functor degree outside 0 <= i <= n - 1."""


@dataclass(frozen=True)
class KoszulComplexFp:
    """Terms wedge^a (x) sym^(n-a) for 0 <= a <= n with mod-p differentials."""

    p: int
    n: int
    r: int
    diffs: tuple[np.ndarray, ...]  # diffs[a-1]: term a -> term a-1

    def dim(self, a: int) -> int:
        if 0 <= a <= self.n:
            return basis_size("wedge", a, self.r) * basis_size("sym", self.n - a, self.r)
        return 0

    def d(self, a: int) -> np.ndarray:
        if 1 <= a <= self.n:
            return self.diffs[a - 1]
        return la.zeros(self.dim(a - 1), self.dim(a))


def _koszul_diff(a: int, n: int, r: int, p: int) -> np.ndarray:
    """Matrix of the map wedge^a (x) sym^(n-a) -> wedge^(a-1) (x) sym^(n-a+1)."""
    wedges = enumerate_basis("wedge", a, r)
    syms = enumerate_basis("sym", n - a, r)
    wedge_idx = basis_index("wedge", a - 1, r)
    sym_idx = basis_index("sym", n - a + 1, r)
    rows = basis_size("wedge", a - 1, r) * basis_size("sym", n - a + 1, r)
    sym_width = basis_size("sym", n - a + 1, r)
    mat = la.zeros(rows, len(wedges) * len(syms))
    for wi, w in enumerate(wedges):
        for si, m in enumerate(syms):
            col = wi * len(syms) + si
            for pos in range(1, a + 1):
                sign, w2 = wedge_delete(w, pos)
                m2 = sym_multiply(w[pos - 1], m)
                row = wedge_idx[w2] * sym_width + sym_idx[m2]
                mat[row, col] = (mat[row, col] + sign) % p
    return mat


@lru_cache(maxsize=None)
def build_koszul(n: int, r: int, p: int) -> KoszulComplexFp:
    """Weight-n Koszul complex on (F_p)^r; the composite of two differentials
    is checked to vanish mod p."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if n < 1 or r < 0:
        raise ValueError("need n >= 1 and r >= 0")
    diffs = tuple(_koszul_diff(a, n, r, p) for a in range(1, n + 1))
    cpx = KoszulComplexFp(p, n, r, diffs)
    for a in range(2, n + 1):
        if not la.is_zero(la.mat_mul(cpx.d(a - 1), cpx.d(a)) % p):
            raise AssertionError(f"koszul d d != 0 at weight {n}, term {a}")
    return cpx


@dataclass(frozen=True)
class DerivedSpGroup:
    """The i-th derived functor of sym^n on (F_p)^r, as an F_p-vector space.

    Realized as the cokernel of the Koszul differential into
    wedge^(i+1) (x) sym^(n-i-1); representatives are standard basis labels
    completing the image.
    """

    i: int
    n: int
    p: int
    r: int
    dimension: int
    representatives: tuple[tuple, ...]  # (wedge, sym monomial) labels


@lru_cache(maxsize=None)
def derived_sp(i: int, n: int, p: int, r: int) -> DerivedSpGroup:
    """coker of the Koszul map landing in wedge^(i+1) (x) sym^(n-i-1).

    For i = n - 1 the incoming term is zero (negative symmetric degree), so
    the group is the whole wedge^n - the top derived functor is a plain
    wedge power.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not 0 <= i <= n - 1:
        raise DegreeOutOfRangeError(f"need 0 <= i <= {n - 1}, got {i}")
    cpx = build_koszul(n, r, p)
    kappa = cpx.d(i + 2)
    wedges = enumerate_basis("wedge", i + 1, r)
    syms = enumerate_basis("sym", n - i - 1, r)
    labels = tuple((w, m) for w in wedges for m in syms)
    reps = la.fp_cokernel_basis(kappa, p)
    rep_labels = tuple(labels[int(np.nonzero(v)[0][0])] for v in reps)
    return DerivedSpGroup(i, n, p, r, len(reps), rep_labels)


def derived_sp_dimension(i: int, n: int, p: int, r: int) -> int:
    """Dimension, with degrees outside the complex counted as zero."""
    if i < 0 or i > n - 1:
        return 0
    return derived_sp(i, n, p, r).dimension


@dataclass(frozen=True)
class GeneratorPresentation:
    """Generators and relations for a derived symmetric power.

    Generators pair a wedge of length i+1 (the top derived functor of the
    symmetric power of weight i+1) with a symmetric monomial of the
    complementary degree; relations are alternating sums that delete one
    argument from a length-(i+2) tuple and multiply it into the monomial.
    """

    i: int
    n: int
    p: int
    r: int
    generators: tuple[tuple, ...]
    relations: np.ndarray  # over F_p, one column per relation


@lru_cache(maxsize=None)
def generator_presentation(i: int, n: int, p: int, r: int) -> GeneratorPresentation:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not 0 <= i <= n - 1:
        raise DegreeOutOfRangeError(f"need 0 <= i <= {n - 1}, got {i}")
    wedges = enumerate_basis("wedge", i + 1, r)
    syms = enumerate_basis("sym", n - i - 1, r)
    generators = tuple((w, m) for w in wedges for m in syms)
    gen_index = {g: k for k, g in enumerate(generators)}
    wedge_tuples = enumerate_basis("wedge", i + 2, r)
    tail_monomials = enumerate_basis("sym", n - i - 2, r)
    columns = []
    for xs in wedge_tuples:
        for y in tail_monomials:
            col = np.zeros(len(generators), dtype=object)
            for k in range(1, i + 3):
                sign, w2 = wedge_delete(xs, k)
                m2 = sym_multiply(xs[k - 1], y)
                col[gen_index[(w2, m2)]] += sign
            columns.append(col % p)
    relations = (
        np.stack(columns, axis=1) if columns else la.zeros(len(generators), 0)
    )
    return GeneratorPresentation(i, n, p, r, generators, relations)


def presentation_dimension(pres: GeneratorPresentation) -> int:
    """Dimension of the presented F_p-vector space."""
    return len(pres.generators) - la.fp_rank(pres.relations, pres.p)


def presentations_agree(i: int, n: int, p: int, r: int) -> bool:
    """The relations quotient and the Koszul cokernel have equal dimension."""
    return presentation_dimension(generator_presentation(i, n, p, r)) == derived_sp(
        i, n, p, r
    ).dimension

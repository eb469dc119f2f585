"""Monomial bases and structure constants for wedge, symmetric and divided
powers of Z^r.

Basis labels are plain tuples: a wedge is a strictly increasing tuple of
generator indices (1-based), a symmetric or divided monomial is an exponent
vector of length r.  Exponent vectors are enumerated with the first variable
taking the largest exponent first, wedges in combinations order, and tensor
bases lexicographically by (left, right); every matrix built on top is then
reproducible bit for bit.

Vectors over a basis are dicts mapping basis index to an integer coefficient.
"""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from itertools import combinations
from math import comb, prod
from typing import Sequence

import numpy as np

from .numtheory import binomial

WedgeIndex = tuple[int, ...]
Exponents = tuple[int, ...]
Vector = dict[int, int]


class DegreeMismatchError(ValueError):
    """Operands or arguments have incompatible degrees."""


@lru_cache(maxsize=None)
def exponent_vectors(degree: int, rank: int) -> tuple[Exponents, ...]:
    """All length-rank vectors of nonnegative integers summing to degree."""
    if rank == 0:
        return ((),) if degree == 0 else ()
    if rank == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        out.extend((e,) + tail for tail in exponent_vectors(degree - e, rank - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_basis(functor: str, degree: int, rank: int) -> tuple[tuple, ...]:
    """Ordered basis labels of wedge/sym/gamma powers of Z^rank.

    Sizes are C(rank, degree) for 'wedge' and C(rank + degree - 1, degree)
    for 'sym' and 'gamma'.  A negative degree yields the empty basis.
    """
    if degree < 0:
        return ()
    if functor == "wedge":
        return tuple(combinations(range(1, rank + 1), degree))
    if functor in ("sym", "gamma"):
        return exponent_vectors(degree, rank)
    raise ValueError(f"unknown functor {functor!r}")


@lru_cache(maxsize=None)
def basis_index(functor: str, degree: int, rank: int) -> dict[tuple, int]:
    labels = enumerate_basis(functor, degree, rank)
    return {label: i for i, label in enumerate(labels)}


def basis_size(functor: str, degree: int, rank: int) -> int:
    if degree < 0:
        return 0
    if functor == "wedge":
        return comb(rank, degree)
    if degree == 0:
        return 1
    return comb(rank + degree - 1, degree)


# ---------------------------------------------------------------------------
# structure constants


def gamma_product(m1: Exponents, m2: Exponents) -> tuple[int, Exponents]:
    """Product of divided monomials: coefficient prod_k C(e_k + f_k, e_k)."""
    if len(m1) != len(m2):
        raise DegreeMismatchError("monomials of different rank")
    coeff = prod(binomial(e + f, e) for e, f in zip(m1, m2))
    return coeff, tuple(e + f for e, f in zip(m1, m2))


def gamma_module_action(j: int, m: Exponents) -> tuple[int, Exponents]:
    """Multiply a divided monomial by the j-th generator (1-based)."""
    e = m[j - 1]
    out = list(m)
    out[j - 1] = e + 1
    return e + 1, tuple(out)


def sym_multiply(j: int, m: Exponents) -> Exponents:
    """Multiply a symmetric monomial by the j-th generator; coefficient 1."""
    out = list(m)
    out[j - 1] += 1
    return tuple(out)


def wedge_insert(j: int, w: WedgeIndex) -> tuple[int, WedgeIndex | None]:
    """Insert generator j into a sorted wedge.

    Sign is (-1)^(number of factors strictly before the insertion slot);
    returns (0, None) when j already occurs.
    """
    if j in w:
        return 0, None
    pos = bisect_left(w, j)
    return (-1) ** pos, w[:pos] + (j,) + w[pos:]


def wedge_delete(w: WedgeIndex, position: int) -> tuple[int, WedgeIndex]:
    """Delete the factor at 1-based position with sign (-1)^position."""
    return (-1) ** position, w[:position - 1] + w[position:]


def wedge_normalize(indices: Sequence[int]) -> tuple[int, WedgeIndex | None]:
    """Sort a tuple of generator indices into a basis wedge, tracking sign."""
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        k = i
        while k > 0 and idx[k - 1] > idx[k]:
            idx[k - 1], idx[k] = idx[k], idx[k - 1]
            sign = -sign
            k -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return 0, None
    return sign, tuple(idx)


# ---------------------------------------------------------------------------
# vectors over a monomial basis


def vec_add(acc: Vector, key: int, coeff: int) -> None:
    if coeff:
        new = acc.get(key, 0) + coeff
        if new:
            acc[key] = new
        else:
            acc.pop(key, None)


def to_dense(v: Vector, size: int) -> np.ndarray:
    out = np.zeros(size, dtype=object)
    for k, x in v.items():
        out[k] = x
    return out


def gamma_of_vector(vec: Sequence[int], degree: int) -> Vector:
    """Degree-d divided power of an integer vector, expanded in monomials.

    The sum-of-arguments relation makes the coefficient of the exponent
    vector e equal to the product of the vector entries raised to e.
    """
    rank = len(vec)
    index = basis_index("gamma", degree, rank)
    out: Vector = {}
    for e, pos in index.items():
        coeff = 1
        for c, exp in zip(vec, e):
            if exp:
                if c == 0:
                    coeff = 0
                    break
                coeff *= int(c) ** exp
        vec_add(out, pos, coeff)
    return out


def gamma_multiply(v1: Vector, d1: int, v2: Vector, d2: int, rank: int) -> Vector:
    """Bilinear extension of the divided monomial product."""
    labels1 = enumerate_basis("gamma", d1, rank)
    labels2 = enumerate_basis("gamma", d2, rank)
    index = basis_index("gamma", d1 + d2, rank)
    out: Vector = {}
    for k1, c1 in v1.items():
        m1 = labels1[k1]
        for k2, c2 in v2.items():
            coeff, m = gamma_product(m1, labels2[k2])
            vec_add(out, index[m], c1 * c2 * coeff)
    return out


def divided_product(terms: Sequence[tuple[int, Sequence[int]]], rank: int) -> Vector:
    """Expand a product of divided powers of integer vectors.

    terms is a list of (degree, vector) pairs; the result lives in the
    divided power of total degree.  Degree-0 factors are the unit.
    """
    total = 0
    out: Vector = {basis_index("gamma", 0, rank)[(0,) * rank]: 1}
    for degree, vec in terms:
        if len(vec) != rank:
            raise DegreeMismatchError("vector of wrong rank")
        if degree == 0:
            continue
        factor = gamma_of_vector(tuple(int(c) for c in vec), degree)
        out = gamma_multiply(out, total, factor, degree, rank)
        total += degree
    return out


def gamma_induced_matrix(t: np.ndarray, degree: int) -> np.ndarray:
    """Matrix of the divided-power functor applied to t: Z^r -> Z^s.

    The column of a monomial e is the expansion of the product of the
    degree-e_k divided powers of the image columns t[:, k].
    """
    s, r = t.shape
    source = enumerate_basis("gamma", degree, r)
    target_size = basis_size("gamma", degree, s)
    out = np.zeros((target_size, len(source)), dtype=object)
    for j, e in enumerate(source):
        terms = [(int(e_k), tuple(int(x) for x in t[:, k])) for k, e_k in enumerate(e)]
        for pos, coeff in divided_product(terms, s).items():
            out[pos, j] = coeff
    return out


def gamma_power_identity_check(r_max: int = 6, scalar_max: int = 4) -> bool:
    """Sanity identities of divided powers on one generator.

    Multiplying the unit by x r times must produce r! times the r-th
    divided power, and substituting n*x must scale degree r by n^r.
    """
    for r in range(1, r_max + 1):
        coeff, mono = 1, (0,)
        for _ in range(r):
            step, mono = gamma_module_action(1, mono)
            coeff *= step
        factorial = prod(range(1, r + 1))
        if mono != (r,) or coeff != factorial:
            return False
        for n in range(-scalar_max, scalar_max + 1):
            expanded = gamma_of_vector((n,), r)
            expect = {0: n**r} if n else {}
            if expanded != expect:
                return False
    return True

"""Closed-form functor calculus on direct sums of cyclic groups.

A group is a multiset of cyclic summands (0 for Z, m >= 2 for Z/m).  Tensor,
Tor, divided powers and iterated Tor are evaluated summand by summand, which
produces the expected right-hand sides that the matrix pipeline is checked
against.  Canonicalization to a divisor chain happens only when two groups
are compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .intlinalg import GroupInvariants
from .numtheory import OutOfRangeError, gcd_stable, v_p


class DegreeTooSmallError(ValueError):
    """Iterated Tor is only defined from the second power on."""


class OutOfTableError(ValueError):
    """Requested a homology table cell outside the tabulated range."""


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class FgAbelian:
    """Direct sum of cyclic groups; summand 0 means Z, m >= 2 means Z/m."""

    summands: tuple[int, ...] = ()

    def __post_init__(self):
        summands = tuple(sorted(int(m) for m in self.summands))
        if any(m == 1 or m < 0 for m in summands):
            raise ValueError("summands are 0 (infinite) or moduli >= 2")
        object.__setattr__(self, "summands", summands)

    @classmethod
    def free(cls, rank: int) -> "FgAbelian":
        return cls((0,) * rank)

    @classmethod
    def cyclic(cls, m: int) -> "FgAbelian":
        return cls(()) if m == 1 else cls((m,))

    @classmethod
    def elementary(cls, p: int, dim: int) -> "FgAbelian":
        return cls((p,) * dim)

    @property
    def is_trivial(self) -> bool:
        return not self.summands

    def invariants(self) -> GroupInvariants:
        free = sum(1 for m in self.summands if m == 0)
        torsion = tuple(m for m in self.summands if m >= 2)
        return GroupInvariants(free, torsion)

    def plus(self, *others: "FgAbelian") -> "FgAbelian":
        parts = list(self.summands)
        for g in others:
            parts.extend(g.summands)
        return FgAbelian(tuple(parts))

    def __str__(self) -> str:
        free = sum(1 for m in self.summands if m == 0)
        parts = []
        if free == 1:
            parts.append("Z")
        elif free > 1:
            parts.append(f"Z^{free}")
        parts.extend(f"Z/{m}" for m in self.summands if m)
        return " + ".join(parts) if parts else "0"


ZERO_GROUP = FgAbelian(())
Z = FgAbelian((0,))


def direct_sum(groups: Iterable[FgAbelian]) -> FgAbelian:
    return ZERO_GROUP.plus(*groups)


def tensor(a: FgAbelian, b: FgAbelian) -> FgAbelian:
    """Bilinear over summands; Z is the unit and Z/a (x) Z/b = Z/gcd(a,b)."""
    out = []
    for x in a.summands:
        for y in b.summands:
            if x == 0 and y == 0:
                out.append(0)
            else:
                g = math.gcd(x, y) if x and y else max(x, y)
                if g > 1:
                    out.append(g)
    return FgAbelian(tuple(out))


def tor(a: FgAbelian, b: FgAbelian) -> FgAbelian:
    """Torsion product: Tor(Z, -) = 0 and Tor(Z/a, Z/b) = Z/gcd(a,b)."""
    out = []
    for x in a.summands:
        for y in b.summands:
            if x and y:
                g = math.gcd(x, y)
                if g > 1:
                    out.append(g)
    return FgAbelian(tuple(out))


def tor_power(n: int, a: FgAbelian) -> FgAbelian:
    """Iterated torsion product Tor(...Tor(Tor(A, A), A)..., A), n factors."""
    if n < 2:
        raise DegreeTooSmallError("iterated Tor starts at the square")
    out = tor(a, a)
    for _ in range(n - 2):
        out = tor(out, a)
    return out


def gamma_cyclic(r: int, n: int) -> FgAbelian:
    """Degree-r divided power of Z/n: cyclic of order n * (r, n^infinity)."""
    if r < 0 or n < 2:
        raise OutOfRangeError("need degree >= 0 and modulus >= 2")
    if r == 0:
        return Z
    return FgAbelian.cyclic(n * gcd_stable(r, n))


def gamma_grades(a: FgAbelian, top: int) -> list[FgAbelian]:
    """Divided powers of a in every degree 0..top via the exponential law.

    Degree-n divided powers of a direct sum split as the sum over i + j = n
    of (degree-i of the first part) tensor (degree-j of the second).
    """
    acc = [Z] + [ZERO_GROUP] * top  # divided powers of the zero group
    for m in a.summands:
        cyc = [Z] + [
            (Z if m == 0 else gamma_cyclic(i, m)) for i in range(1, top + 1)
        ]
        new = [ZERO_GROUP] * (top + 1)
        for n in range(top + 1):
            new[n] = direct_sum(tensor(acc[i], cyc[n - i]) for i in range(n + 1))
        acc = new
    return acc


def gamma_group(n: int, a: FgAbelian) -> FgAbelian:
    """Degree-n divided power of a finitely generated abelian group."""
    if n < 0:
        raise OutOfRangeError("degree must be nonnegative")
    return gamma_grades(a, n)[n]


def monomial_order_mod_p(exponents: tuple[int, ...], p: int) -> int:
    """Order of a divided monomial of an elementary abelian p-group.

    The monomial with exponent vector e generates a cyclic summand of order
    p^(1 + min valuation of the nonzero exponents).
    """
    nonzero = [e for e in exponents if e]
    if not nonzero:
        raise OutOfRangeError("the empty monomial generates a free summand")
    return p ** (1 + min(v_p(p, e) for e in nonzero))


def expected_h0(n: int, rank: int) -> FgAbelian:
    """Sum over primes p | n of the (n/p)-th divided power of (Z/p)^rank."""
    if n < 2:
        raise OutOfRangeError("degree must be at least 2")
    return direct_sum(
        gamma_group(n // p, FgAbelian.elementary(p, rank)) for p in prime_divisors(n)
    )


def _lie3_dimension(p: int, rank: int) -> int:
    # delegated to the Koszul model: the degree-3 Lie functor is the first
    # derived symmetric cube
    from .koszul import derived_sp

    return derived_sp(1, 3, p, rank).dimension


def expected_table_entry(q: int, i: int, rank: int) -> FgAbelian:
    """Closed-form table cell for the homology of the wedge-times-divided
    complex in weight q at homological degree i, evaluated on Z^rank."""
    if not (2 <= q <= 7 and 0 <= i <= 3 and rank >= 0):
        raise OutOfTableError(f"cell (q={q}, i={i}, rank={rank}) is not tabulated")
    if i == 0:
        return expected_h0(q, rank)

    def wedge(p, deg):
        return FgAbelian.elementary(p, math.comb(rank, deg))

    if q == 4 and i == 1:
        return wedge(2, 2)
    if q == 6 and i == 1:
        return wedge(3, 2).plus(FgAbelian.elementary(2, _lie3_dimension(2, rank)))
    if q == 6 and i == 2:
        return wedge(2, 3)
    return ZERO_GROUP

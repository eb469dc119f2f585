"""p-adic valuations, stabilized gcd, and binomial congruence checks."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intlinalg import NotPrimeError, is_prime


class OutOfRangeError(ValueError):
    """An integer argument violates the documented range."""


def v_p(p: int, x: int) -> int:
    """The p-adic valuation of x != 0."""
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if x == 0:
        raise OutOfRangeError("valuation of 0 is undefined")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def gcd_stable(r: int, n: int) -> int:
    """The limit of gcd(r, n^m) as m grows.

    Equals the largest divisor of r supported on primes dividing n; the
    sequence stabilizes once m exceeds log2(r).
    """
    if r < 1 or n < 1:
        raise OutOfRangeError("arguments must be positive")
    out = 1
    g = math.gcd(r, n)
    while g > 1:
        out *= g
        r //= g
        g = math.gcd(r, g)
    return out


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient for 0 <= k <= n."""
    if k < 0 or k > n:
        raise OutOfRangeError(f"binomial({n}, {k}) out of range")
    return math.comb(n, k)


@dataclass(frozen=True)
class LemmaReport:
    p: int
    n: int
    k: int
    lhs: int
    rhs: int
    modulus: int
    holds: bool


def check_binomial_lemma(p: int, n: int, k: int) -> LemmaReport:
    """Check C(pn, pk) = C(n, k) mod p^r with r = v_p(p*n*k*(n-k)).

    The congruence holds for every prime p and 0 < k < n; the report form
    exists so sweeps can surface a counterexample if one ever appeared.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if not 0 < k < n:
        raise OutOfRangeError("need 0 < k < n")
    r = v_p(p, p * n * k * (n - k))
    modulus = p**r
    lhs = binomial(p * n, p * k)
    rhs = binomial(n, k)
    return LemmaReport(p, n, k, lhs, rhs, modulus, (lhs - rhs) % modulus == 0)


def check_central_divisibility(n: int, k: int) -> bool:
    """n/(n,k) divides C(n, k); exercised as a property suite."""
    if not 1 <= k <= n:
        raise OutOfRangeError("need 1 <= k <= n")
    return binomial(n, k) % (n // math.gcd(n, k)) == 0


def sweep_binomial_lemma(p: int, max_n: int) -> dict:
    """Exhaustive lemma sweep over 1 <= k < n <= max_n for one prime."""
    checked = 0
    failed = 0
    first_failure = None
    for n in range(2, max_n + 1):
        for k in range(1, n):
            report = check_binomial_lemma(p, n, k)
            checked += 1
            if not report.holds:
                failed += 1
                if first_failure is None:
                    first_failure = {"p": p, "n": n, "k": k}
    out = {"p": p, "checked": checked, "failed": failed}
    if first_failure is not None:
        out["first_failure"] = first_failure
    return out

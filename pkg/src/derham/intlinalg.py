"""Exact linear algebra over the integers and over prime fields.

All matrices are 2-dimensional numpy arrays with ``dtype=object`` holding
plain Python ints, so every operation is exact and entries may grow without
bound.  No floating point is used anywhere.

The central primitive is the Smith normal form ``U @ M @ V = D`` with
unimodular ``U``, ``V``; everything else (cokernels, kernels, homology of a
pair of composable differentials, finite group presentations) reduces to it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class CompositionNonzeroError(ValueError):
    """The two differentials handed to a homology routine do not compose to 0."""


class NotInLatticeError(ValueError):
    """A vector has no exact integer coordinates in the given lattice basis."""


class NotWellDefinedError(ValueError):
    """A matrix does not send source relations into the target relation span."""


class InfiniteGroupUnsupportedError(ValueError):
    """Isomorphism testing is only implemented for finite presented groups."""


class NotPrimeError(ValueError):
    """A modulus that must be prime is not."""


# ---------------------------------------------------------------------------
# matrix construction helpers


def intmat(rows: Sequence[Sequence[int]], cols: int | None = None) -> np.ndarray:
    """Build an exact integer matrix from nested sequences.

    ``cols`` is required to disambiguate the empty matrix with zero rows.
    """
    rows = [list(r) for r in rows]
    if rows:
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged rows")
        if cols is not None and cols != width:
            raise ValueError("cols does not match row length")
    else:
        width = 0 if cols is None else cols
    a = np.zeros((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            a[i, j] = int(x)
    return a


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)


def identity(n: int) -> np.ndarray:
    a = zeros(n, n)
    for i in range(n):
        a[i, i] = 1
    return a


def as_intmat(m) -> np.ndarray:
    if isinstance(m, np.ndarray):
        if m.ndim != 2:
            raise ValueError("expected a 2-d array")
        if m.dtype == object:
            return m
        return m.astype(object)
    return intmat(m)


def hstack(blocks: Sequence[np.ndarray]) -> np.ndarray:
    blocks = [as_intmat(b) for b in blocks]
    if not blocks:
        return zeros(0, 0)
    return np.hstack(blocks)


def mat_mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product, accumulated column by column (fast when b is sparse)."""
    a = as_intmat(a)
    b = as_intmat(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} @ {b.shape}")
    out = zeros(a.shape[0], b.shape[1])
    for j in range(b.shape[1]):
        col = b[:, j]
        for k in np.nonzero(col != 0)[0]:
            out[:, j] += col[k] * a[:, k]
    return out


def mat_vec(a: np.ndarray, v: np.ndarray) -> np.ndarray:
    a = as_intmat(a)
    out = np.zeros(a.shape[0], dtype=object)
    for k in np.nonzero(v != 0)[0]:
        out += v[k] * a[:, k]
    return out


def is_zero(a: np.ndarray) -> bool:
    return bool(np.all(a == 0))


def det_exact(a: np.ndarray) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    a = as_intmat(a)
    n, m = a.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    w = a.copy()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if w[k, k] == 0:
            for i in range(k + 1, n):
                if w[i, k] != 0:
                    w[[k, i], :] = w[[i, k], :]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                w[i, j] = (w[i, j] * w[k, k] - w[i, k] * w[k, j]) // prev
            w[i, k] = 0
        prev = w[k, k]
    return sign * int(w[n - 1, n - 1])


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


# ---------------------------------------------------------------------------
# Smith normal form


class SnfResult(NamedTuple):
    U: np.ndarray
    D: np.ndarray
    V: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.D.shape)
        return [int(self.D[i, i]) for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _swap_rows(a: np.ndarray, i: int, j: int) -> None:
    a[[i, j], :] = a[[j, i], :]


def _swap_cols(a: np.ndarray, i: int, j: int) -> None:
    a[:, [i, j]] = a[:, [j, i]]


def _find_pivot(a: np.ndarray, t: int) -> tuple[int, int] | None:
    """Position of a nonzero of minimal absolute value in a[t:, t:]."""
    block = a[t:, t:]
    if block.size == 0:
        return None
    unit = np.argwhere((block == 1) | (block == -1))
    if unit.size:
        i, j = unit[0]
        return t + int(i), t + int(j)
    nz = np.argwhere(block != 0)
    if not nz.size:
        return None
    best = min(nz, key=lambda ij: abs(block[ij[0], ij[1]]))
    return t + int(best[0]), t + int(best[1])


def _snf_inplace(a: np.ndarray, u: np.ndarray | None, v: np.ndarray | None) -> None:
    """Drive a to Smith form by unimodular row/column operations.

    u and v, when given, accumulate the operations so that
    u @ original @ v == final a.
    """
    rows, cols = a.shape
    t = 0
    while t < min(rows, cols):
        piv = _find_pivot(a, t)
        if piv is None:
            break
        pi, pj = piv
        if pi != t:
            _swap_rows(a, t, pi)
            if u is not None:
                _swap_rows(u, t, pi)
        if pj != t:
            _swap_cols(a, t, pj)
            if v is not None:
                _swap_cols(v, t, pj)
        while True:
            # clear column t below the pivot
            i = t + 1
            while i < rows:
                x = a[i, t]
                if x != 0:
                    q = x // a[t, t]
                    if q:
                        a[i, t:] -= q * a[t, t:]
                        if u is not None:
                            u[i, :] -= q * u[t, :]
                    if a[i, t] != 0:
                        # remainder beats the pivot; promote it and restart
                        _swap_rows(a, t, i)
                        if u is not None:
                            _swap_rows(u, t, i)
                        continue
                i += 1
            # clear row t; column swaps may dirty column t again
            dirtied = False
            j = t + 1
            while j < cols:
                x = a[t, j]
                if x != 0:
                    q = x // a[t, t]
                    if q:
                        a[t:, j] -= q * a[t:, t]
                        if v is not None:
                            v[:, j] -= q * v[:, t]
                    if a[t, j] != 0:
                        _swap_cols(a, t, j)
                        if v is not None:
                            _swap_cols(v, t, j)
                        dirtied = True
                        continue
                j += 1
            if not dirtied:
                break
        # make the pivot divide everything that remains
        if a[t, t] != 1 and a[t, t] != -1:
            rem = a[t + 1 :, t + 1 :] % a[t, t]
            bad = np.argwhere(rem != 0)
            if bad.size:
                i = t + 1 + int(bad[0][0])
                a[t, t:] += a[i, t:]
                if u is not None:
                    u[t, :] += u[i, :]
                continue  # re-run elimination at the same t
        if a[t, t] < 0:
            a[t, t:] = -a[t, t:]
            if u is not None:
                u[t, :] = -u[t, :]
        t += 1


def smith_normal_form(m) -> SnfResult:
    """Smith normal form with unimodular transforms: U @ m @ V = D.

    The diagonal of D is nonnegative and each entry divides the next
    nonzero one; D is uniquely determined by m.
    """
    a = as_intmat(m).copy()
    u = identity(a.shape[0])
    v = identity(a.shape[1])
    _snf_inplace(a, u, v)
    return SnfResult(u, a, v)


def snf_diagonal(m) -> list[int]:
    """Just the invariant factors of m (no transforms; faster)."""
    a = as_intmat(m).copy()
    _snf_inplace(a, None, None)
    k = min(a.shape)
    return [int(a[i, i]) for i in range(k)]


def column_lattice_basis(m) -> np.ndarray:
    """A column-echelon basis of the lattice spanned by the columns of m.

    Only column operations are used, so the column span is preserved
    exactly.  Useful to shrink very wide matrices before a Smith reduction.
    """
    a = as_intmat(m)
    rows = a.shape[0]
    basis: list[np.ndarray] = []  # echelon columns, increasing pivot row
    pivot_of: dict[int, int] = {}  # pivot row -> index into basis
    for j in range(a.shape[1]):
        c = a[:, j].copy()
        i = 0
        while i < rows:
            if c[i] == 0:
                i += 1
                continue
            k = pivot_of.get(i)
            if k is None:
                basis.append(c)
                pivot_of[i] = len(basis) - 1
                break
            b = basis[k]
            d = b[i]
            q, r = divmod(c[i], d)
            if q:
                c = c - q * b
            if r:
                g, x, y = xgcd(d, r)
                nb = x * b + y * c
                c = (d // g) * c - (r // g) * b
                basis[k] = nb
            i += 1
    if not basis:
        return zeros(rows, 0)
    order = sorted(range(len(basis)), key=lambda k: int(np.argmax(basis[k] != 0)))
    out = zeros(rows, len(basis))
    for col, k in enumerate(order):
        out[:, col] = basis[k]
    return out


# ---------------------------------------------------------------------------
# finitely generated abelian group invariants


def _divisor_chain(torsion: Iterable[int]) -> tuple[int, ...]:
    """Normalize arbitrary torsion moduli to a divisor chain m1 | m2 | ...

    Repeated pairwise gcd/lcm passes; e.g. [2, 3] -> [6], [4, 6] -> [2, 12].
    """
    mods = [int(m) for m in torsion if int(m) > 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(mods)):
            for j in range(i + 1, len(mods)):
                a, b = mods[i], mods[j]
                if b % a != 0:
                    g = gcd(a, b)
                    mods[i], mods[j] = g, a * b // g
                    changed = True
        mods = [m for m in mods if m > 1]
    return tuple(sorted(mods))


@dataclass(frozen=True)
class GroupInvariants:
    """Isomorphism type of a finitely generated abelian group.

    torsion is the divisor chain m1 | m2 | ... with every mk >= 2, so two
    groups are isomorphic iff their invariants compare equal.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", _divisor_chain(self.torsion))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def order(self) -> int:
        """Group order; 0 encodes infinite."""
        if self.free_rank:
            return 0
        out = 1
        for m in self.torsion:
            out *= m
        return out

    def as_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{m}" for m in self.torsion)
        return " + ".join(parts) if parts else "0"


TRIVIAL_GROUP = GroupInvariants(0, ())


@dataclass(frozen=True)
class PresentedGroup:
    """Z^gens modulo the column span of the relation matrix."""

    gens: int
    relations: np.ndarray  # gens rows, one relation per column

    def __post_init__(self):
        rel = as_intmat(self.relations)
        if rel.shape[0] != self.gens:
            raise ValueError("relation matrix must have one row per generator")
        object.__setattr__(self, "relations", rel)

    def invariants(self) -> GroupInvariants:
        return invariants_of_cokernel(self.relations)


@dataclass(frozen=True)
class LatticeBasis:
    """Columns form a basis (over Q independent) of a sublattice of Z^ambient."""

    ambient_dim: int
    vectors: np.ndarray

    def __post_init__(self):
        vec = as_intmat(self.vectors)
        if vec.shape[0] != self.ambient_dim:
            raise ValueError("basis vectors must live in the ambient space")
        object.__setattr__(self, "vectors", vec)

    @property
    def rank(self) -> int:
        return self.vectors.shape[1]


def invariants_of_cokernel(m) -> GroupInvariants:
    """Invariants of Z^rows / (column span of m)."""
    a = as_intmat(m)
    rows = a.shape[0]
    if a.shape[1] > rows + 8:
        a = column_lattice_basis(a)
    diag = snf_diagonal(a)
    rank = sum(1 for d in diag if d != 0)
    torsion = [d for d in diag if d > 1]
    return GroupInvariants(rows - rank, tuple(torsion))


def _check_composable(d_in: np.ndarray, d_out: np.ndarray) -> None:
    if d_out.shape[1] != d_in.shape[0]:
        raise CompositionNonzeroError(
            f"differentials do not compose: {d_out.shape} after {d_in.shape}"
        )
    if not is_zero(mat_mul(d_out, d_in)):
        raise CompositionNonzeroError("d_out @ d_in != 0")


def homology_invariants(d_in, d_out) -> GroupInvariants:
    """Invariants of ker(d_out) / im(d_in) for composable integer matrices.

    Direct route: the free rank is nullity(d_out) - rank(d_in), and because
    ker(d_out) is a saturated sublattice the torsion of the quotient equals
    the torsion invariant factors of d_in itself.
    """
    d_in = as_intmat(d_in)
    d_out = as_intmat(d_out)
    _check_composable(d_in, d_out)
    diag_in = snf_diagonal(d_in)
    rank_in = sum(1 for d in diag_in if d != 0)
    rank_out = sum(1 for d in snf_diagonal(d_out) if d != 0)
    nullity = d_out.shape[1] - rank_out
    return GroupInvariants(nullity - rank_in, tuple(d for d in diag_in if d > 1))


class LinearSolver:
    """Exact solver for A @ x = v built on one Smith decomposition of A."""

    def __init__(self, a):
        a = as_intmat(a)
        self.a = a
        self.snf = smith_normal_form(a)
        self.diag = self.snf.diagonal
        self.rank = sum(1 for d in self.diag if d != 0)

    def solve(self, v: np.ndarray) -> np.ndarray:
        """Return x with A @ x = v, or raise NotInLatticeError."""
        u, _, vmat = self.snf
        if len(v) != self.a.shape[0]:
            raise ValueError("vector length does not match matrix rows")
        y = mat_vec(u, v)
        coeffs = np.zeros(self.a.shape[1], dtype=object)
        for i in range(self.a.shape[0]):
            if i < self.rank:
                q, r = divmod(int(y[i]), self.diag[i])
                if r:
                    raise NotInLatticeError("no integral solution (divisibility)")
                coeffs[i] = q
            elif y[i] != 0:
                raise NotInLatticeError("no rational solution")
        return mat_vec(vmat, coeffs)

    def contains(self, v: np.ndarray) -> bool:
        try:
            self.solve(v)
            return True
        except NotInLatticeError:
            return False


def kernel_lattice(m) -> LatticeBasis:
    """Basis of ker(m) as a sublattice of the domain Z^cols (saturated)."""
    a = as_intmat(m)
    snf = smith_normal_form(a)
    return LatticeBasis(a.shape[1], snf.V[:, snf.rank :])


def coordinates_in_lattice(v, basis: LatticeBasis) -> np.ndarray:
    """Coordinates c with basis.vectors @ c = v exactly."""
    v = np.asarray(v, dtype=object)
    return LinearSolver(basis.vectors).solve(v)


def homology_presentation(d_in, d_out) -> tuple[PresentedGroup, LatticeBasis]:
    """ker(d_out)/im(d_in) as generators (a kernel basis) and relations.

    The relations are the columns of d_in rewritten in kernel coordinates;
    the invariants of the presentation agree with homology_invariants, which
    computes the same group along an independent route.
    """
    d_in = as_intmat(d_in)
    d_out = as_intmat(d_out)
    _check_composable(d_in, d_out)
    kernel = kernel_lattice(d_out)
    solver = LinearSolver(kernel.vectors)
    rel = zeros(kernel.rank, d_in.shape[1])
    for j in range(d_in.shape[1]):
        try:
            rel[:, j] = solver.solve(d_in[:, j])
        except NotInLatticeError as exc:  # impossible when d_out @ d_in = 0
            raise CompositionNonzeroError("image column outside the kernel") from exc
    return PresentedGroup(kernel.rank, rel), kernel


def presented_map_is_iso(f, source: PresentedGroup, target: PresentedGroup) -> bool:
    """Decide whether f induces an isomorphism of finite presented groups.

    f maps source generators to target generators.  Well-definedness (every
    source relation lands in the target relation span) is a precondition and
    raises NotWellDefinedError when violated.  Both groups must be finite.
    """
    f = as_intmat(f)
    if f.shape != (target.gens, source.gens):
        raise ValueError("map shape does not match the presentations")
    src_inv = source.invariants()
    tgt_inv = target.invariants()
    if src_inv.free_rank or tgt_inv.free_rank:
        raise InfiniteGroupUnsupportedError("both groups must be finite")
    solver = LinearSolver(target.relations)
    mapped = mat_mul(f, source.relations)
    for j in range(mapped.shape[1]):
        if not solver.contains(mapped[:, j]):
            raise NotWellDefinedError(f"source relation {j} is not sent to zero")
    surjective = invariants_of_cokernel(hstack([f, target.relations])).is_trivial
    return surjective and src_inv == tgt_inv


# ---------------------------------------------------------------------------
# linear algebra over F_p


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")


def _fp_column_echelon(m, p: int) -> tuple[np.ndarray, list[int]]:
    """Column echelon form of m mod p; returns (echelon, pivot row list).

    Residues fit comfortably in int64 (products stay below p^2), so the
    elimination runs on machine integers and remains exact.
    """
    a = (as_intmat(m) % p).astype(np.int64)
    rows, cols = a.shape
    pivots: list[int] = []
    c = 0
    for i in range(rows):
        if c >= cols:
            break
        nz = np.nonzero(a[i, c:])[0]
        if nz.size == 0:
            continue
        k = c + int(nz[0])
        if k != c:
            a[:, [c, k]] = a[:, [k, c]]
        inv = pow(int(a[i, c]), -1, p)
        a[:, c] = (a[:, c] * inv) % p
        hit = np.nonzero(a[i, :])[0]
        for j in hit:
            if j != c:
                a[:, j] = (a[:, j] - a[i, j] * a[:, c]) % p
        pivots.append(i)
        c += 1
    return a, pivots


def fp_rank(m, p: int) -> int:
    """Rank of m over F_p."""
    _require_prime(p)
    _, pivots = _fp_column_echelon(m, p)
    return len(pivots)


def fp_cokernel_basis(m, p: int) -> list[np.ndarray]:
    """Standard basis vectors completing im(m mod p) to the full codomain."""
    _require_prime(p)
    a = as_intmat(m)
    _, pivots = _fp_column_echelon(a, p)
    taken = set(pivots)
    out = []
    for i in range(a.shape[0]):
        if i not in taken:
            e = zeros(a.shape[0], 1)[:, 0]
            e[i] = 1
            out.append(e)
    return out


# ---------------------------------------------------------------------------
# matrix exchange format


def mat_to_text(m) -> str:
    a = as_intmat(m)
    lines = [f"{a.shape[0]} {a.shape[1]}"]
    for i in range(a.shape[0]):
        lines.append(" ".join(str(int(x)) for x in a[i, :]))
    return "\n".join(lines) + "\n"


def mat_from_text(text: str) -> np.ndarray:
    tokens = text.split()
    if len(tokens) < 2:
        raise ValueError("matrix text must start with 'rows cols'")
    rows, cols = int(tokens[0]), int(tokens[1])
    data = tokens[2:]
    if len(data) != rows * cols:
        raise ValueError(f"expected {rows * cols} entries, found {len(data)}")
    a = zeros(rows, cols)
    for k, tok in enumerate(data):
        a[k // cols, k % cols] = int(tok)
    return a


def mat_to_json(m) -> str:
    a = as_intmat(m)
    payload = {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "data": [int(x) for x in a.reshape(-1)],
    }
    return json.dumps(payload, sort_keys=True)


def mat_from_json(text: str) -> np.ndarray:
    payload = json.loads(text)
    rows, cols = int(payload["rows"]), int(payload["cols"])
    data = payload["data"]
    if len(data) != rows * cols:
        raise ValueError("data length does not match rows*cols")
    a = zeros(rows, cols)
    for k, x in enumerate(data):
        a[k // cols, k % cols] = int(x)
    return a


def mat_parse(text: str) -> np.ndarray:
    """Parse either exchange form (plain text or JSON)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return mat_from_json(stripped)
    return mat_from_text(text)

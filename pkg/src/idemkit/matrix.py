"""Matrices over a semiring, closures, Bellman solvers, and the max-plus eigenproblem.

Every algorithm here is written once against the ``Semiring`` interface and
works for any instance: max-plus shortest paths, Boolean reachability,
widest paths and real matrix inversion are the same code.
"""

from __future__ import annotations

import itertools
import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import (
    CarrierMismatch,
    ClosureUndefined,
    DimensionMismatch,
    NotIrreducible,
    NotStabilized,
    UnsupportedSemiring,
)
from .semiring import NEG_INF, RMAX, RMIN, Semiring, get_semiring

# default bound for non-idempotent carriers, where the closure is a convergent series at best
SERIES_MAX_STEPS = 64
SERIES_TOLERANCE = 1e-12


class SeriesWarning(UserWarning):
    """The closure of a non-idempotent matrix was summed as a power series."""


class SemiringMatrix:
    """Dense immutable matrix bound to one semiring."""

    __slots__ = ("semiring", "rows", "cols", "entries")

    def __init__(self, semiring: Semiring | str, entries: Sequence[Sequence], *, check: bool = True):
        s = get_semiring(semiring)
        rows = tuple(tuple(r) for r in entries)
        if not rows or not rows[0]:
            raise DimensionMismatch("a matrix needs at least one row and one column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        if check:
            for i, r in enumerate(rows):
                for j, v in enumerate(r):
                    if not s.contains(v):
                        raise CarrierMismatch(f"entry ({i + 1},{j + 1}) = {v!r} is not in the {s.id} carrier")
        object.__setattr__(self, "semiring", s)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SemiringMatrix is immutable")

    @classmethod
    def zeros(cls, semiring, rows: int, cols: int | None = None) -> SemiringMatrix:
        s = get_semiring(semiring)
        cols = rows if cols is None else cols
        return cls(s, [[s.zero] * cols for _ in range(rows)], check=False)

    @classmethod
    def identity(cls, semiring, n: int) -> SemiringMatrix:
        s = get_semiring(semiring)
        return cls(s, [[s.one if i == j else s.zero for j in range(n)] for i in range(n)], check=False)

    @classmethod
    def column(cls, semiring, values: Sequence) -> SemiringMatrix:
        return cls(semiring, [[v] for v in values])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def tolist(self) -> list[list]:
        return [list(r) for r in self.entries]

    def column_values(self, j: int) -> list:
        return [r[j] for r in self.entries]

    def map(self, fn) -> SemiringMatrix:
        return SemiringMatrix(self.semiring, [[fn(v) for v in r] for r in self.entries], check=False)

    def equals(self, other: SemiringMatrix) -> bool:
        """Entrywise equality under the semiring's notion of equality."""
        if self.semiring != other.semiring or self.shape != other.shape:
            return False
        eq = self.semiring.eq
        return all(eq(a, b) for ra, rb in zip(self.entries, other.entries) for a, b in zip(ra, rb))

    def __eq__(self, other):
        return isinstance(other, SemiringMatrix) and self.equals(other)

    def __hash__(self):
        return hash((self.semiring.id, self.entries))

    def __repr__(self):
        return f"SemiringMatrix({self.semiring.id}, {self.tolist()!r})"

    def __add__(self, other):
        return mat_add(self, other)

    def __matmul__(self, other):
        return mat_mul(self, other)


@dataclass(frozen=True)
class EigenPair:
    value: object
    vector: tuple


@dataclass(frozen=True)
class BellmanProblem:
    H: SemiringMatrix
    F: SemiringMatrix

    def __post_init__(self):
        if self.H.semiring != self.F.semiring:
            raise CarrierMismatch(f"H is over {self.H.semiring.id}, F over {self.F.semiring.id}")
        if not self.H.is_square:
            raise DimensionMismatch(f"H must be square, got {self.H.shape}")
        if self.F.rows != self.H.rows:
            raise DimensionMismatch(f"F has {self.F.rows} rows, H has {self.H.rows}")


def _same_semiring(X: SemiringMatrix, Y: SemiringMatrix) -> Semiring:
    if X.semiring != Y.semiring:
        raise CarrierMismatch(f"{X.semiring.id} matrix combined with {Y.semiring.id} matrix")
    return X.semiring


def mat_add(X: SemiringMatrix, Y: SemiringMatrix) -> SemiringMatrix:
    s = _same_semiring(X, Y)
    if X.shape != Y.shape:
        raise DimensionMismatch(f"cannot add {X.shape} and {Y.shape}")
    add = s.add
    return SemiringMatrix(
        s, [[add(a, b) for a, b in zip(rx, ry)] for rx, ry in zip(X.entries, Y.entries)], check=False
    )


def mat_mul(X: SemiringMatrix, Y: SemiringMatrix) -> SemiringMatrix:
    s = _same_semiring(X, Y)
    if X.cols != Y.rows:
        raise DimensionMismatch(f"cannot multiply {X.shape} by {Y.shape}")
    cols = list(zip(*Y.entries))
    total, mul = s.sum, s.mul
    return SemiringMatrix(
        s, [[total(map(mul, row, col)) for col in cols] for row in X.entries], check=False
    )


def mat_power(H: SemiringMatrix, k: int) -> SemiringMatrix:
    if not H.is_square:
        raise DimensionMismatch("only square matrices have powers")
    result = SemiringMatrix.identity(H.semiring, H.rows)
    for _ in range(k):
        result = mat_mul(result, H)
    return result


def scalar_times(s: Semiring, lam, X: SemiringMatrix) -> SemiringMatrix:
    return X.map(lambda v: s.mul(lam, v))


def scalar_product(s: Semiring | str, x: Sequence, y: Sequence):
    """(x, y) = ⨁ᵢ xᵢ ⊙ yᵢ."""
    s = get_semiring(s)
    if len(x) != len(y):
        raise DimensionMismatch(f"vectors of length {len(x)} and {len(y)}")
    for v in itertools.chain(x, y):
        if not s.contains(v):
            raise CarrierMismatch(f"{v!r} is not in the {s.id} carrier")
    return s.sum(map(s.mul, x, y))


def _max_abs_change(X: SemiringMatrix, Y: SemiringMatrix) -> float:
    worst = 0.0
    for ra, rb in zip(X.entries, Y.entries):
        for a, b in zip(ra, rb):
            if a == b:
                continue
            if math.isinf(a) or math.isinf(b):
                return math.inf
            worst = max(worst, abs(a - b))
    return worst


def _settled(prev: SemiringMatrix, cur: SemiringMatrix, tolerance: float) -> bool:
    if tolerance > 0 and prev.semiring.numeric:
        return _max_abs_change(prev, cur) <= tolerance * max(1.0, _max_abs(cur))
    return prev.equals(cur)


def _max_abs(X: SemiringMatrix) -> float:
    return max((abs(v) for r in X.entries for v in r if not math.isinf(v)), default=0.0)


def _default_bounds(s: Semiring, n: int, max_steps, tolerance):
    if s.idempotent:
        steps = n if max_steps is None else max_steps
        tol = s.tolerance if tolerance is None else tolerance
    else:
        steps = SERIES_MAX_STEPS if max_steps is None else max_steps
        tol = max(s.tolerance, SERIES_TOLERANCE) if tolerance is None else tolerance
    return max(steps, 1), tol


def closure_iterative(
    H: SemiringMatrix, max_steps: int | None = None, tolerance: float | None = None
) -> SemiringMatrix:
    """H* as the stabilized partial sum H^(N) = 𝟙 ⊕ H ⊕ … ⊕ H^N.

    Idempotent carriers stabilize within n steps whenever the closure exists
    (longer paths revisit a node). Other carriers are summed as a series and
    stop once successive partial sums agree within ``tolerance``.
    """
    if not H.is_square:
        raise DimensionMismatch(f"closure needs a square matrix, got {H.shape}")
    s = H.semiring
    steps, tol = _default_bounds(s, H.rows, max_steps, tolerance)
    if not s.idempotent:
        warnings.warn(
            f"{s.id} is not idempotent: H* is a power series and is meaningful only when it converges",
            SeriesWarning,
            stacklevel=2,
        )
    ident = SemiringMatrix.identity(s, H.rows)
    acc = ident
    term = ident
    for _ in range(steps):
        term = mat_mul(term, H)
        nxt = mat_add(acc, term)
        if _settled(acc, nxt, tol):
            return acc
        acc = nxt
    raise NotStabilized(steps)


def closure_gauss_jordan(H: SemiringMatrix) -> SemiringMatrix:
    """H* by Floyd–Warshall–Kleene elimination with fixed pivot order.

    For k = 1..n every entry becomes a_ij ⊕ a_ik ⊙ (a_kk)* ⊙ a_kj; the
    result is then joined with the identity. Over the real field this is
    Gauss–Jordan inversion of (I − H).
    """
    if not H.is_square:
        raise DimensionMismatch(f"closure needs a square matrix, got {H.shape}")
    s = H.semiring
    add, mul = s.add, s.mul
    n = H.rows
    a = H.tolist()
    for k in range(n):
        try:
            pivot = s.star(a[k][k])
        except ClosureUndefined as exc:
            raise ClosureUndefined(f"pivot {k + 1}: {exc}", pivot=k) from None
        col = [a[i][k] for i in range(n)]
        row = [mul(pivot, v) for v in a[k]]
        for i in range(n):
            aik = col[i]
            if s.eq(aik, s.zero) and s.exact:
                continue
            ai = a[i]
            for j in range(n):
                ai[j] = add(ai[j], mul(aik, row[j]))
    for i in range(n):
        a[i][i] = add(s.one, a[i][i])
    return SemiringMatrix(s, a, check=False)


def _bellman_check(p: BellmanProblem) -> Semiring:
    if not isinstance(p, BellmanProblem):
        raise TypeError("expected a BellmanProblem")
    return p.H.semiring


def bellman_solve_jacobi(
    p: BellmanProblem, max_steps: int | None = None, tolerance: float | None = None
) -> SemiringMatrix:
    """Solve S = HS ⊕ F by S_{k+1} = H S_k ⊕ F from S_0 = F (Bellman's method)."""
    s = _bellman_check(p)
    steps, tol = _default_bounds(s, p.H.rows + 1, max_steps, tolerance)
    S = p.F
    for _ in range(steps):
        nxt = mat_add(mat_mul(p.H, S), p.F)
        if _settled(S, nxt, tol):
            return nxt if tol == 0 else S
        S = nxt
    raise NotStabilized(steps)


def bellman_solve_gauss_seidel(
    p: BellmanProblem, max_steps: int | None = None, tolerance: float | None = None
) -> SemiringMatrix:
    """Same fixpoint as Jacobi, updating components in index order (Ford's method)."""
    s = _bellman_check(p)
    steps, tol = _default_bounds(s, p.H.rows + 1, max_steps, tolerance)
    add, mul, total = s.add, s.mul, s.sum
    H = p.H.entries
    S = p.F.tolist()
    n, m = p.F.rows, p.F.cols
    for _ in range(steps):
        changed = False
        for c in range(m):
            for i in range(n):
                new = add(total(mul(H[i][j], S[j][c]) for j in range(n)), p.F.entries[i][c])
                old = S[i][c]
                if not _close(s, old, new, tol):
                    changed = True
                S[i][c] = new
        if not changed:
            return SemiringMatrix(s, S, check=False)
    raise NotStabilized(steps)


def _close(s: Semiring, a, b, tol: float) -> bool:
    if tol > 0 and s.numeric and not (math.isinf(a) or math.isinf(b)):
        return abs(a - b) <= tol * max(1.0, abs(a), abs(b))
    return s.eq(a, b)


# -- eigenproblem -----------------------------------------------------------------


def _strongly_connected(adj: list[list[bool]]) -> bool:
    n = len(adj)

    def reach(forward: bool) -> set[int]:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in range(n):
                edge = adj[u][v] if forward else adj[v][u]
                if edge and v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    return len(reach(True)) == n and len(reach(False)) == n


def _exact(v):
    if v == NEG_INF:
        return v
    return Fraction(v)


def _tidy(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def max_cycle_mean(weights: list[list]) -> Fraction:
    """Karp's recursion for the maximum cycle mean of a strongly connected digraph.

    ``weights`` uses −∞ for missing arcs and exact rationals elsewhere.
    """
    n = len(weights)
    D = [[NEG_INF] * n for _ in range(n + 1)]
    D[0][0] = Fraction(0)
    for k in range(1, n + 1):
        prev, cur = D[k - 1], D[k]
        for v in range(n):
            best = NEG_INF
            for u in range(n):
                w = weights[u][v]
                if w == NEG_INF or prev[u] == NEG_INF:
                    continue
                cand = prev[u] + w
                if best == NEG_INF or cand > best:
                    best = cand
            cur[v] = best
    lam = None
    for v in range(n):
        if D[n][v] == NEG_INF:
            continue
        worst = min(
            (D[n][v] - D[k][v]) / (n - k) for k in range(n) if D[k][v] != NEG_INF
        )
        if lam is None or worst > lam:
            lam = worst
    if lam is None:
        raise NotIrreducible("digraph has no cycle")
    return lam


def eigen_irreducible(H: SemiringMatrix) -> EigenPair:
    """Eigenvalue and eigenvector of an irreducible max-plus or min-plus matrix.

    The eigenvalue is the optimal cycle mean (Karp). The eigenvector is the
    column of (λ⁻¹⊙H)* at the first node lying on a critical cycle. All
    arithmetic is done in exact rationals and the pair is verified before
    returning; integral results come back as ``int``, others as ``Fraction``.
    """
    s = H.semiring
    if s not in (RMAX, RMIN):
        raise UnsupportedSemiring(f"eigenproblem is implemented for rmax and rmin, not {s.id}")
    if not H.is_square:
        raise DimensionMismatch(f"eigenproblem needs a square matrix, got {H.shape}")
    n = H.rows
    sign = 1 if s is RMAX else -1
    # work in max-plus: min-plus weights are negated, +∞ becomes −∞
    W = [[NEG_INF if v == s.zero else _exact(sign * v) for v in row] for row in H.entries]
    adj = [[w != NEG_INF for w in row] for row in W]
    if not _strongly_connected(adj):
        raise NotIrreducible("the digraph of H is not strongly connected")
    lam = max_cycle_mean(W)

    # normalized matrix has maximum cycle mean 0, so its closure exists
    A = SemiringMatrix(RMAX, [[w if w == NEG_INF else w - lam for w in row] for row in W], check=False)
    star = closure_gauss_jordan(A)
    plus = mat_mul(A, star)
    critical = next((c for c in range(n) if plus[c, c] == 0), None)
    if critical is None:
        raise NotIrreducible("no critical cycle found")
    v = star.column_values(critical)

    lhs = [RMAX.sum(RMAX.mul(W[i][j], v[j]) for j in range(n)) for i in range(n)]
    rhs = [RMAX.mul(lam, x) for x in v]
    if lhs != rhs:
        raise ArithmeticError("eigenpair verification failed")

    value = _tidy(sign * lam)
    vector = tuple(s.zero if x == NEG_INF else _tidy(sign * x) for x in v)
    return EigenPair(value, vector)


# -- Mat_n(A) as a semiring ---------------------------------------------------------


class MatrixSemiring(Semiring):
    """Mat_n(A): n×n matrices with entrywise ⊕ and matrix ⊙."""

    def __init__(self, base: Semiring, n: int):
        self.base, self.n = base, n
        self.id = f"mat{n}:{base.id}"
        self.idempotent = base.idempotent
        self.commutative = n == 1 and base.commutative
        self.exact = base.exact
        self.tolerance = base.tolerance
        self.zero = SemiringMatrix.zeros(base, n)
        self.one = SemiringMatrix.identity(base, n)

    add = staticmethod(mat_add)
    mul = staticmethod(mat_mul)

    def contains(self, a) -> bool:
        return isinstance(a, SemiringMatrix) and a.semiring == self.base and a.shape == (self.n, self.n)

    def eq(self, a, b) -> bool:
        return a.equals(b)

    def samples(self, rng: random.Random, size: int = 16) -> list:
        pool = self.base.samples(rng)
        out = [self.zero, self.one]
        while len(out) < size:
            out.append(
                SemiringMatrix(self.base, [[rng.choice(pool) for _ in range(self.n)] for _ in range(self.n)])
            )
        return out

"""Weighted digraphs M(X, Γ, h, A) and the algebraic path problem.

Nodes are 0-based here; file formats and messages use 1-based numbering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ArcMissing,
    CarrierMismatch,
    ClosureUndefined,
    IndexOutOfRange,
    InstanceTooLarge,
    NegativeCycle,
    UnsupportedSemiring,
    ValidationError,
)
from .matrix import (
    SemiringMatrix,
    closure_gauss_jordan,
    closure_iterative,
    mat_mul,
    mat_power,
)
from .semiring import RMAX, RMIN, RMIN_BAR, MinMax, Semiring, get_semiring

ORACLE_MAX_NODES = 8


class WeightedDigraph:
    """Nodes 0..n-1 and arcs (i, j, w) with w ≠ 𝟘, at most one per ordered pair.

    Parallel arcs given to the constructor are merged with ⊕.
    """

    def __init__(self, semiring: Semiring | str, n: int, arcs: Iterable[tuple[int, int, object]] = ()):
        s = get_semiring(semiring)
        if n < 1:
            raise ValidationError("a graph needs at least one node")
        merged: dict[tuple[int, int], object] = {}
        for i, j, w in arcs:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexOutOfRange(f"arc ({i + 1},{j + 1}) outside nodes 1..{n}")
            if not s.contains(w):
                raise CarrierMismatch(f"arc ({i + 1},{j + 1}) weight {w!r} is not in the {s.id} carrier")
            if s.eq(w, s.zero):
                raise ValidationError(f"arc ({i + 1},{j + 1}) has weight 𝟘; arcs must carry non-𝟘 weights")
            merged[(i, j)] = s.add(merged[(i, j)], w) if (i, j) in merged else w
        self.semiring = s
        self.n = n
        self._arcs = {k: w for k, w in merged.items() if not s.eq(w, s.zero)}

    @property
    def arcs(self) -> list[tuple[int, int, object]]:
        return [(i, j, w) for (i, j), w in sorted(self._arcs.items())]

    def weight(self, i: int, j: int):
        try:
            return self._arcs[(i, j)]
        except KeyError:
            raise ArcMissing(f"no arc ({i + 1},{j + 1})") from None

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self._arcs

    def successors(self, i: int) -> list[tuple[int, object]]:
        return [(j, w) for (a, j), w in sorted(self._arcs.items()) if a == i]

    def __eq__(self, other):
        return (
            isinstance(other, WeightedDigraph)
            and self.semiring == other.semiring
            and self.n == other.n
            and self._arcs.keys() == other._arcs.keys()
            and all(self.semiring.eq(w, other._arcs[k]) for k, w in self._arcs.items())
        )

    def __repr__(self):
        return f"WeightedDigraph({self.semiring.id}, n={self.n}, arcs={self.arcs!r})"


@dataclass(frozen=True)
class Path:
    """Node sequence y₀..y_k; arc i joins y_{i-1} to y_i. A lone node is the empty path."""

    nodes: tuple[int, ...]

    def __post_init__(self):
        if not self.nodes:
            raise ValidationError("a path has at least its start node")

    @property
    def arcs(self) -> list[tuple[int, int]]:
        return list(zip(self.nodes, self.nodes[1:]))

    def __len__(self) -> int:
        return len(self.nodes) - 1


@dataclass(frozen=True)
class TerminalPrize:
    f: tuple


def graph_to_matrix(g: WeightedDigraph) -> SemiringMatrix:
    s = g.semiring
    rows = [[s.zero] * g.n for _ in range(g.n)]
    for i, j, w in g.arcs:
        rows[i][j] = w
    return SemiringMatrix(s, rows, check=False)


def matrix_to_graph(H: SemiringMatrix) -> WeightedDigraph:
    if not H.is_square:
        raise ValidationError(f"graph matrices are square, got {H.shape}")
    s = H.semiring
    arcs = [
        (i, j, H[i, j])
        for i in range(H.rows)
        for j in range(H.cols)
        if not s.eq(H[i, j], s.zero)
    ]
    return WeightedDigraph(s, H.rows, arcs)


def path_weight(g: WeightedDigraph, p: Path):
    """h(p) = h(a₁) ⊙ … ⊙ h(a_k); the empty path weighs 𝟙."""
    s = g.semiring
    return s.prod(g.weight(i, j) for i, j in p.arcs)


def algebraic_path_solve(g: WeightedDigraph, method: str = "gauss-jordan") -> SemiringMatrix:
    """D = H*, so d_ij aggregates the weights of every path from node i to node j."""
    H = graph_to_matrix(g)
    if method == "gauss-jordan":
        return closure_gauss_jordan(H)
    if method == "iterative":
        return closure_iterative(H)
    raise ValueError(f"unknown closure method {method!r}")


def brute_force_path_oracle(g: WeightedDigraph, max_arcs: int) -> SemiringMatrix:
    """⊕-aggregate the weights of every path with at most ``max_arcs`` arcs.

    Enumerates paths explicitly, node by node; independent of the matrix code.
    """
    if g.n > ORACLE_MAX_NODES:
        raise InstanceTooLarge(f"oracle limited to {ORACLE_MAX_NODES} nodes, got {g.n}")
    s = g.semiring
    succ = [g.successors(i) for i in range(g.n)]
    d = [[s.zero] * g.n for _ in range(g.n)]

    def walk(start: int, node: int, weight, depth: int):
        d[start][node] = s.add(d[start][node], weight)
        if depth == max_arcs:
            return
        for nxt, w in succ[node]:
            walk(start, nxt, s.mul(weight, w), depth + 1)

    for i in range(g.n):
        walk(i, i, s.one, 0)
    return SemiringMatrix(s, d, check=False)


def exact_arc_paths(g: WeightedDigraph, k: int) -> SemiringMatrix:
    """⊕-aggregate over paths with exactly k arcs, by enumeration."""
    if g.n > ORACLE_MAX_NODES:
        raise InstanceTooLarge(f"oracle limited to {ORACLE_MAX_NODES} nodes, got {g.n}")
    s = g.semiring
    succ = [g.successors(i) for i in range(g.n)]
    d = [[s.zero] * g.n for _ in range(g.n)]

    def walk(start, node, weight, depth):
        if depth == k:
            d[start][node] = s.add(d[start][node], weight)
            return
        for nxt, w in succ[node]:
            walk(start, nxt, s.mul(weight, w), depth + 1)

    for i in range(g.n):
        walk(i, i, s.one, 0)
    return SemiringMatrix(s, d, check=False)


def shortest_paths(g: WeightedDigraph) -> SemiringMatrix:
    """All-pairs shortest distances over rmin; rmin-bar reports −∞ instead of failing."""
    if g.semiring not in (RMIN, RMIN_BAR):
        raise UnsupportedSemiring(f"shortest paths need rmin or rmin-bar, not {g.semiring.id}")
    try:
        D = closure_gauss_jordan(graph_to_matrix(g))
    except ClosureUndefined as exc:
        raise NegativeCycle(exc.pivot) from None
    if g.semiring is RMIN:
        for i in range(g.n):
            if D[i, i] < 0:
                raise NegativeCycle(i)
    return D


def widest_paths(g: WeightedDigraph) -> SemiringMatrix:
    """d_ij = max over paths of the narrowest arc on the path."""
    if not isinstance(g.semiring, MinMax):
        raise UnsupportedSemiring(f"widest paths need a minmax semiring, not {g.semiring.id}")
    return closure_gauss_jordan(graph_to_matrix(g))


def real_inverse(H: SemiringMatrix) -> SemiringMatrix:
    """(I − H)⁻¹ through the same elimination used for path problems."""
    if H.semiring.id != "real":
        raise UnsupportedSemiring(f"real_inverse needs the real field, not {H.semiring.id}")
    return closure_gauss_jordan(H)


def dp_optimal_profit(g: WeightedDigraph, f: TerminalPrize | Sequence, k: int | str = "unbounded") -> list:
    """Best total profit (arc profits plus terminal prize) from every start node.

    With an integer k this is Hᵏ ⊙ f; with ``"unbounded"`` it is H* ⊙ f.
    """
    if g.semiring is not RMAX:
        raise UnsupportedSemiring(f"profit problems are posed over rmax, not {g.semiring.id}")
    prize = f.f if isinstance(f, TerminalPrize) else tuple(f)
    if len(prize) != g.n:
        raise ValidationError(f"prize vector has {len(prize)} entries for {g.n} nodes")
    H = graph_to_matrix(g)
    column = SemiringMatrix.column(RMAX, prize)
    if k == "unbounded":
        M = closure_iterative(H)
    else:
        M = mat_power(H, int(k))
    return mat_mul(M, column).column_values(0)


def witness_paths(g: WeightedDigraph) -> list[list[list[int] | None]]:
    """One optimal path per pair (1-based node lists), for selective semirings.

    Works when ⊕ always returns one of its arguments (max/min/or); the walk
    is reconstructed from next-hop pointers kept alongside Floyd–Warshall.
    """
    s = g.semiring
    if not (s.id in ("rmin", "rmax", "boolean", "logic3") or isinstance(s, MinMax)):
        raise UnsupportedSemiring(f"witness paths need a selective semiring, not {s.id}")
    n = g.n
    d = [[s.zero] * n for _ in range(n)]
    nxt: list[list[int | None]] = [[None] * n for _ in range(n)]
    for i, j, w in g.arcs:
        d[i][j] = w
        nxt[i][j] = j
    for k in range(n):
        for i in range(n):
            if d[i][k] == s.zero:
                continue
            for j in range(n):
                cand = s.mul(d[i][k], d[k][j])
                if cand != d[i][j] and s.add(d[i][j], cand) == cand:
                    d[i][j] = cand
                    nxt[i][j] = nxt[i][k]
    out: list[list[list[int] | None]] = []
    for i in range(n):
        row: list[list[int] | None] = []
        for j in range(n):
            if i == j:
                # closure exists only when cycles are ⪯ 𝟙, so the empty path is optimal
                row.append([i + 1])
                continue
            if nxt[i][j] is None:
                row.append(None)
                continue
            path, cur = [i], i
            while cur != j and len(path) <= n:
                cur = nxt[cur][j]
                path.append(cur)
            row.append([v + 1 for v in path] if cur == j else None)
        out.append(row)
    return out

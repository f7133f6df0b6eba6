from __future__ import annotations

import math

import pytest

from idemkit import (
    BOOLEAN,
    REAL,
    RMAX,
    RMIN,
    RMIN_BAR,
    ArcMissing,
    CarrierMismatch,
    InstanceTooLarge,
    NegativeCycle,
    NotStabilized,
    Path,
    SemiringMatrix,
    TerminalPrize,
    UnsupportedSemiring,
    ValidationError,
    WeightedDigraph,
    algebraic_path_solve,
    brute_force_path_oracle,
    dp_optimal_profit,
    get_semiring,
    graph_to_matrix,
    matrix_to_graph,
    path_weight,
    real_inverse,
    shortest_paths,
    widest_paths,
    witness_paths,
)
from oracles import floyd_warshall_min, random_arcs, warshall, widest_oracle

INF = math.inf
MINMAX = get_semiring("minmax:-inf:inf")


@pytest.fixture
def triangle() -> WeightedDigraph:
    # arcs 1→2:1, 2→3:2, 1→3:4 in file numbering
    return WeightedDigraph(RMIN, 3, [(0, 1, 1), (1, 2, 2), (0, 2, 4)])


def test_graph_matrix_round_trip(rng):
    g = WeightedDigraph(RMIN, 2, [(0, 1, 5)])
    assert graph_to_matrix(g).tolist() == [[INF, 5], [INF, INF]]
    assert graph_to_matrix(WeightedDigraph(RMIN, 3)) == SemiringMatrix.zeros(RMIN, 3)
    for _ in range(20):
        n = rng.randint(1, 6)
        g = WeightedDigraph(RMIN, n, random_arcs(rng, n, 0.4, -5, 9))
        assert matrix_to_graph(graph_to_matrix(g)) == g


def test_parallel_arcs_merge_with_oplus():
    g = WeightedDigraph(RMIN, 2, [(0, 1, 5), (0, 1, 3)])
    assert g.arcs == [(0, 1, 3)]


def test_arc_validation():
    with pytest.raises(ValidationError):
        WeightedDigraph(RMIN, 2, [(0, 1, INF)])
    with pytest.raises(CarrierMismatch):
        WeightedDigraph(RMIN, 2, [(0, 1, -INF)])
    with pytest.raises(ValidationError):
        WeightedDigraph(RMIN, 2, [(0, 2, 1)])


def test_path_weight(triangle):
    assert path_weight(triangle, Path((0, 1, 2))) == 3
    assert path_weight(triangle, Path((1,))) == 0
    wide = WeightedDigraph(MINMAX, 3, [(0, 1, 5), (1, 2, 3)])
    assert path_weight(wide, Path((0, 1, 2))) == 3
    with pytest.raises(ArcMissing):
        path_weight(triangle, Path((2, 0)))


def test_brute_force_oracle_examples(triangle):
    assert brute_force_path_oracle(triangle, 2).tolist() == [[0, 1, 3], [INF, 0, 2], [INF, INF, 0]]
    assert brute_force_path_oracle(WeightedDigraph(RMIN, 1), 0).tolist() == [[0]]
    with pytest.raises(InstanceTooLarge):
        brute_force_path_oracle(WeightedDigraph(RMIN, 9), 2)


def test_shortest_paths(triangle):
    D = shortest_paths(triangle)
    assert D[0, 2] == 3 and D[2, 0] == INF and all(D[i, i] == 0 for i in range(3))


def test_shortest_paths_negative_cycle():
    g = WeightedDigraph(RMIN, 3, [(0, 1, 1), (1, 2, -2), (2, 1, 1)])
    with pytest.raises(NegativeCycle) as info:
        shortest_paths(g)
    assert info.value.node in (1, 2)
    assert "node" in str(info.value)
    with pytest.raises(NotStabilized):
        algebraic_path_solve(g, method="iterative")
    bar = WeightedDigraph(RMIN_BAR, 3, [(0, 1, 1), (1, 2, -2), (2, 1, 1)])
    D = shortest_paths(bar)
    assert D[0, 2] == -INF and D[0, 0] == 0


def test_shortest_paths_handle_negative_arcs_without_cycles(rng):
    g = WeightedDigraph(RMIN, 4, [(0, 1, 3), (1, 2, -2), (0, 2, 2), (2, 3, -1)])
    assert shortest_paths(g).tolist()[0] == [0, 3, 1, 0]


def test_shortest_paths_triangle_fixpoint(rng):
    for _ in range(30):
        n = rng.randint(1, 8)
        arcs = random_arcs(rng, n, 0.35, 0, 15)
        D = shortest_paths(WeightedDigraph(RMIN, n, arcs)).tolist()
        assert D == floyd_warshall_min(n, arcs)
        H = graph_to_matrix(WeightedDigraph(RMIN, n, arcs))
        for i in range(n):
            for j in range(n):
                best = min([H[i, j]] + [D[i][k] + D[k][j] for k in range(n)])
                assert D[i][j] == min(best, 0 if i == j else INF)


def test_widest_paths_example():
    g = WeightedDigraph(MINMAX, 3, [(0, 1, 5), (1, 2, 3), (0, 2, 2)])
    D = widest_paths(g)
    assert D[0, 2] == 3 and D[1, 1] == INF and D[2, 0] == -INF
    with pytest.raises(UnsupportedSemiring):
        widest_paths(WeightedDigraph(RMIN, 1))


def test_widest_paths_relabeling(rng):
    for _ in range(20):
        n = rng.randint(1, 6)
        arcs = random_arcs(rng, n, 0.4, 1, 9)
        relabel = lambda w: 2 * w + 1
        D = widest_paths(WeightedDigraph(MINMAX, n, arcs)).tolist()
        D2 = widest_paths(WeightedDigraph(MINMAX, n, [(i, j, relabel(w)) for i, j, w in arcs])).tolist()
        assert D2 == [[v if math.isinf(v) else relabel(v) for v in row] for row in D]
        expected = widest_oracle(n, arcs)
        for i in range(n):
            expected[i][i] = INF
        assert D == expected


def test_boolean_frontend_matches_warshall(rng):
    for _ in range(25):
        n = rng.randint(1, 16)
        pairs = sorted({(i, j) for i in range(n) for j in range(n) if rng.random() < 0.15})
        g = WeightedDigraph(BOOLEAN, n, [(i, j, True) for i, j in pairs])
        assert algebraic_path_solve(g).tolist() == warshall(n, pairs)
        assert algebraic_path_solve(g, "iterative").tolist() == warshall(n, pairs)


def test_real_inverse_examples():
    assert real_inverse(SemiringMatrix.zeros(REAL, 2)) == SemiringMatrix.identity(REAL, 2)
    assert real_inverse(SemiringMatrix(REAL, [[0, 0.5], [0, 0]])).tolist() == [[1, 0.5], [0, 1]]
    with pytest.raises(UnsupportedSemiring):
        real_inverse(SemiringMatrix(RMIN, [[0]]))


def test_profit_examples():
    g = WeightedDigraph(RMAX, 2, [(0, 1, 3)])
    assert dp_optimal_profit(g, TerminalPrize((0, 10)), 1)[0] == 13
    assert dp_optimal_profit(g, TerminalPrize((0, 10)), 0) == [0, 10]
    assert dp_optimal_profit(g, (0, 10)) == [13, 10]
    with pytest.raises(NotStabilized):
        dp_optimal_profit(WeightedDigraph(RMAX, 1, [(0, 0, 1)]), (0,))


def test_profit_unbounded_matches_enumeration_on_dags(rng):
    for _ in range(20):
        n = rng.randint(1, 7)
        arcs = [(i, j, rng.randint(-5, 9)) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        g = WeightedDigraph(RMAX, n, arcs)
        prize = tuple(rng.choice([-INF, rng.randint(0, 20)]) for _ in range(n))
        D = brute_force_path_oracle(g, n)
        expected = [max(D[i, j] + prize[j] for j in range(n)) for i in range(n)]
        assert dp_optimal_profit(g, prize) == expected


def test_profit_monotone_with_zero_loops(rng):
    n = 5
    arcs = random_arcs(rng, n, 0.4, -3, 3)
    arcs = [(i, j, w) for i, j, w in arcs if i != j] + [(i, i, 0) for i in range(n)]
    g = WeightedDigraph(RMAX, n, arcs)
    prize = tuple(rng.randint(0, 9) for _ in range(n))
    prev = None
    for k in range(6):
        cur = dp_optimal_profit(g, prize, k)
        if prev is not None:
            assert all(a <= b for a, b in zip(prev, cur))
        prev = cur


def test_witness_paths_are_optimal(rng):
    for _ in range(20):
        n = rng.randint(1, 6)
        g = WeightedDigraph(RMIN, n, random_arcs(rng, n, 0.4, 0, 9))
        D = shortest_paths(g)
        W = witness_paths(g)
        for i in range(n):
            for j in range(n):
                if D[i, j] == INF:
                    assert W[i][j] is None
                else:
                    nodes = tuple(v - 1 for v in W[i][j])
                    assert nodes[0] == i and nodes[-1] == j
                    assert path_weight(g, Path(nodes)) == D[i, j]
    with pytest.raises(UnsupportedSemiring):
        witness_paths(WeightedDigraph(REAL, 1))

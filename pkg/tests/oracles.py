"""Reference implementations used as test oracles.

Everything here works on plain Python numbers and lists and shares no code
with idemkit, so agreement with the library is evidence rather than echo.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import numpy as np

INF = math.inf


def random_arcs(rng: random.Random, n: int, density: float, lo: int, hi: int) -> list[tuple[int, int, int]]:
    """Integer-weighted arcs with 0-based endpoints; self-loops allowed."""
    return [
        (i, j, rng.randint(lo, hi))
        for i in range(n)
        for j in range(n)
        if rng.random() < density
    ]


def floyd_warshall_min(n: int, arcs) -> list[list[float]]:
    """Textbook all-pairs shortest paths with d_ii = 0 (nonnegative weights)."""
    d = [[0 if i == j else INF for j in range(n)] for i in range(n)]
    for i, j, w in arcs:
        if i != j:
            d[i][j] = min(d[i][j], w)
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


def warshall(n: int, pairs) -> list[list[bool]]:
    """Reflexive-transitive closure of a relation."""
    r = [[i == j for j in range(n)] for i in range(n)]
    for i, j in pairs:
        r[i][j] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    r[i][j] = r[i][j] or r[k][j]
    return r


def simple_paths(n: int, succ: dict[int, list[int]], i: int, j: int):
    """All simple paths from i to j as node lists (i == j gives only [i])."""
    if i == j:
        yield [i]
        return
    stack = [(i, [i])]
    while stack:
        node, path = stack.pop()
        for nxt in succ.get(node, ()):
            if nxt == j:
                yield path + [j]
            elif nxt not in path:
                stack.append((nxt, path + [nxt]))


def widest_oracle(n: int, arcs) -> list[list[float]]:
    """Max over simple paths of the narrowest arc; +inf on the diagonal, -inf if unreachable."""
    w = {}
    for i, j, c in arcs:
        w[(i, j)] = max(w.get((i, j), -INF), c)
    succ: dict[int, list[int]] = {}
    for i, j in w:
        succ.setdefault(i, []).append(j)
    out = [[-INF] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for p in simple_paths(n, succ, i, j):
                width = min((w[a] for a in zip(p, p[1:])), default=INF)
                out[i][j] = max(out[i][j], width)
    return out


def classical_inverse(H: list[list[float]]) -> np.ndarray:
    """(I - H)^-1 by LAPACK."""
    A = np.eye(len(H)) - np.asarray(H, dtype=float)
    return np.linalg.inv(A)


def simple_cycles(n: int, adj: list[list[bool]]):
    """Every elementary cycle once, as a node tuple starting at its smallest node."""
    for size in range(1, n + 1):
        for nodes in itertools.combinations(range(n), size):
            first, rest = nodes[0], nodes[1:]
            for perm in itertools.permutations(rest):
                cyc = (first,) + perm
                if all(adj[a][b] for a, b in zip(cyc, cyc[1:] + (first,))):
                    yield cyc


def max_cycle_mean_bruteforce(W: list[list[float]]) -> Fraction:
    """Largest mean weight over all elementary cycles (-inf entries are absent arcs)."""
    n = len(W)
    adj = [[W[i][j] != -INF for j in range(n)] for i in range(n)]
    best = None
    for cyc in simple_cycles(n, adj):
        total = sum(Fraction(W[a][b]) for a, b in zip(cyc, cyc[1:] + (cyc[0],)))
        mean = total / len(cyc)
        best = mean if best is None or mean > best else best
    return best


def strongly_connected_maxplus(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> list[list[float]]:
    """Random max-plus matrix whose graph contains a Hamiltonian cycle."""
    W = [[-INF] * n for _ in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    for a, b in zip(order, order[1:] + order[:1]):
        W[a][b] = rng.randint(lo, hi)
    for i in range(n):
        for j in range(n):
            if W[i][j] == -INF and rng.random() < 0.4:
                W[i][j] = rng.randint(lo, hi)
    return W


def legendre_bruteforce(points, values, xi) -> list[float]:
    return [max(k * x + v for x, v in zip(points, values)) for k in xi]

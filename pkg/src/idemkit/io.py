"""JSON file formats and deterministic result encoding.

Value literals: numbers, ``"inf"``/``"-inf"``, ``true``/``false`` for the
Boolean semiring, ``"O"``/``"a"``/``"I"`` for three-valued logic, vertex
arrays for polygons and two-element arrays for products. Node indices in
graph files are 1-based.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path
from typing import Any

from .analysis import CyclicGroup, GridFunction, Kernel, RealGrid
from .dequant import CauchyProblem, Quadratic, SampledHamiltonian
from .errors import IdemkitError, ParseError, UnsupportedFormat, ValidationError
from .matrix import BellmanProblem, EigenPair, SemiringMatrix
from .paths import WeightedDigraph
from .semiring import Semiring, get_semiring, number_to_literal


def load_json(path: str | Path) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    return loads(text)


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.lineno, exc.msg) from None


def _require(obj: dict, key: str, kind: str):
    if not isinstance(obj, dict):
        raise ValidationError(f"{kind} must be a JSON object")
    if key not in obj:
        raise ValidationError(f"{kind} is missing {key!r}")
    return obj[key]


def resolve_semiring(obj: dict, override: str | None = None) -> Semiring:
    declared = obj.get("semiring") if isinstance(obj, dict) else None
    if override is not None:
        s = get_semiring(override)
        if declared is not None and get_semiring(declared) != s:
            raise ValidationError(f"file declares semiring {declared!r} but {override!r} was requested")
        return s
    if declared is None:
        raise ValidationError("no semiring given in the file or on the command line")
    return get_semiring(declared)


# -- matrices ----------------------------------------------------------------------


def parse_matrix(obj: dict, semiring: str | None = None) -> SemiringMatrix:
    s = resolve_semiring(obj, semiring)
    entries = _require(obj, "entries", "matrix")
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise ValidationError("matrix entries must be a list of rows")
    rows = obj.get("rows", len(entries))
    cols = obj.get("cols", len(entries[0]) if entries else 0)
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValidationError(f"entries do not form a {rows}×{cols} matrix")
    return SemiringMatrix(s, [[s.from_literal(v) for v in r] for r in entries])


def dump_matrix(M: SemiringMatrix) -> dict:
    s = M.semiring
    return {
        "semiring": s.id,
        "rows": M.rows,
        "cols": M.cols,
        "entries": [[s.to_literal(v) for v in r] for r in M.entries],
    }


def parse_bellman(h_obj: dict, f_obj: dict, semiring: str | None = None) -> BellmanProblem:
    try:
        return BellmanProblem(parse_matrix(h_obj, semiring), parse_matrix(f_obj, semiring))
    except IdemkitError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(str(exc)) from None


def dump_eigen(s: Semiring, pair: EigenPair) -> dict:
    return {
        "semiring": s.id,
        "lambda": s.to_literal(pair.value),
        "vector": [s.to_literal(v) for v in pair.vector],
    }


# -- graphs ------------------------------------------------------------------------


def parse_graph(obj: dict, semiring: str | None = None) -> WeightedDigraph:
    s = resolve_semiring(obj, semiring)
    n = _require(obj, "nodes", "graph")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValidationError("graph 'nodes' must be a positive integer")
    arcs = []
    for k, arc in enumerate(obj.get("arcs", [])):
        try:
            i, j, w = arc["from"], arc["to"], arc["w"]
        except (TypeError, KeyError):
            raise ValidationError(f"arc #{k + 1} needs 'from', 'to' and 'w'") from None
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in (i, j)):
            raise ValidationError(f"arc #{k + 1}: node indices must be integers")
        arcs.append((i - 1, j - 1, s.from_literal(w)))
    return WeightedDigraph(s, n, arcs)


def dump_graph(g: WeightedDigraph) -> dict:
    s = g.semiring
    return {
        "semiring": s.id,
        "nodes": g.n,
        "arcs": [{"from": i + 1, "to": j + 1, "w": s.to_literal(w)} for i, j, w in g.arcs],
    }


# -- grid functions and kernels --------------------------------------------------------


def parse_grid(obj: dict):
    kind = _require(obj, "kind", "grid")
    if kind == "real":
        points = _require(obj, "points", "grid")
        if not isinstance(points, list) or not all(
            isinstance(p, (int, float)) and not isinstance(p, bool) and math.isfinite(p) for p in points
        ):
            raise ValidationError("real grid points must be finite numbers")
        return RealGrid(tuple(points))
    if kind == "cyclic":
        n = _require(obj, "n", "grid")
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValidationError("cyclic grid order must be an integer")
        return CyclicGroup(n)
    raise ValidationError(f"unknown grid kind {kind!r}")


def dump_grid(domain) -> dict:
    if isinstance(domain, CyclicGroup):
        return {"kind": "cyclic", "n": domain.n}
    return {"kind": "real", "points": [number_to_literal(p) for p in domain.points]}


def parse_gridfunction(obj: dict, semiring: str | None = None) -> GridFunction:
    s = resolve_semiring(obj, semiring)
    grid = parse_grid(_require(obj, "grid", "grid function"))
    values = _require(obj, "values", "grid function")
    if not isinstance(values, list):
        raise ValidationError("grid function values must be a list")
    return GridFunction(s, grid, [s.from_literal(v) for v in values])


def dump_gridfunction(f: GridFunction) -> dict:
    s = f.semiring
    return {"semiring": s.id, "grid": dump_grid(f.domain), "values": [s.to_literal(v) for v in f.values]}


def parse_kernel(obj: dict, semiring: str | None = None) -> Kernel:
    s = resolve_semiring(obj, semiring)
    xg = parse_grid(_require(obj, "xgrid", "kernel"))
    yg = parse_grid(_require(obj, "ygrid", "kernel"))
    values = _require(obj, "values", "kernel")
    if not isinstance(values, list) or not all(isinstance(r, list) for r in values):
        raise ValidationError("kernel values must be a list of rows")
    return Kernel(s, xg, yg, [[s.from_literal(v) for v in r] for r in values])


def dump_kernel(K: Kernel) -> dict:
    s = K.semiring
    return {
        "semiring": s.id,
        "xgrid": dump_grid(K.xdomain),
        "ygrid": dump_grid(K.ydomain),
        "values": [[s.to_literal(v) for v in r] for r in K.values],
    }


# -- Hamilton–Jacobi inputs ----------------------------------------------------------------


def parse_cauchy(obj: dict) -> CauchyProblem:
    S0 = parse_gridfunction(_require(obj, "S0", "Cauchy problem"), "rmin")
    ham_obj = _require(obj, "H", "Cauchy problem")
    kind = _require(ham_obj, "kind", "Hamiltonian")
    if kind == "quadratic":
        ham = Quadratic()
    elif kind == "sampled":
        f = _require(ham_obj, "f", "sampled Hamiltonian")
        if isinstance(f, dict) and "semiring" not in f:
            f = dict(f, semiring="real")
        ham = SampledHamiltonian(parse_gridfunction(f))
    else:
        raise ValidationError(f"unknown Hamiltonian kind {kind!r}")
    t = _require(obj, "t", "Cauchy problem")
    if isinstance(t, bool) or not isinstance(t, (int, float)):
        raise ValidationError("t must be a number")
    return CauchyProblem(S0, ham, t)


def parse_residual_data(obj: dict):
    x = _require(obj, "x", "residual data")
    t = _require(obj, "t", "residual data")
    w = _require(obj, "w", "residual data")
    if not (isinstance(w, list) and len(w) == len(t) and all(isinstance(r, list) and len(r) == len(x) for r in w)):
        raise ValidationError("w must hold one row of len(x) values per time level")
    return x, t, w


# -- encoding ---------------------------------------------------------------------------


def _plain(obj):
    if isinstance(obj, float) or isinstance(obj, Fraction):
        return number_to_literal(obj)
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def emit_json(obj: Any) -> bytes:
    """Compact JSON with insertion-ordered fields and shortest round-trip floats."""
    return (json.dumps(_plain(obj), ensure_ascii=False, separators=(",", ":"), allow_nan=False) + "\n").encode()


def _tsv_token(v) -> str:
    lit = number_to_literal(v)
    return lit if isinstance(lit, str) else repr(lit)


def emit_tsv(obj: Any) -> bytes:
    """Tab-separated rows for numeric matrices, with ``inf``/``-inf`` tokens."""
    if isinstance(obj, SemiringMatrix):
        if not obj.semiring.numeric:
            raise UnsupportedFormat(f"TSV needs a numeric matrix, not {obj.semiring.id}")
        rows = obj.entries
    elif isinstance(obj, dict) and "entries" in obj:
        s = get_semiring(obj["semiring"])
        if not s.numeric:
            raise UnsupportedFormat(f"TSV needs a numeric matrix, not {s.id}")
        rows = [[s.from_literal(v) for v in r] for r in obj["entries"]]
    else:
        raise UnsupportedFormat("TSV output is available for matrices only")
    return "".join("\t".join(_tsv_token(v) for v in r) + "\n" for r in rows).encode()


def emit_result(obj: Any, fmt: str = "json") -> bytes:
    if fmt == "json":
        if isinstance(obj, SemiringMatrix):
            obj = dump_matrix(obj)
        elif isinstance(obj, GridFunction):
            obj = dump_gridfunction(obj)
        elif isinstance(obj, Kernel):
            obj = dump_kernel(obj)
        elif isinstance(obj, WeightedDigraph):
            obj = dump_graph(obj)
        return emit_json(obj)
    if fmt == "tsv":
        return emit_tsv(obj)
    raise UnsupportedFormat(f"unknown output format {fmt!r}")

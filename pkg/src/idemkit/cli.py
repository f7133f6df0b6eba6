"""Command-line front end: ``idemkit <command> [options]``.

Exit codes: 0 success, 2 closure undefined / no stabilization / negative
cycle, 3 invalid input, 1 anything else.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import io
from .analysis import (
    AMeasure,
    RealGrid,
    idempotent_convolution,
    idempotent_integral,
    integral_wrt_measure,
    legendre_transform,
)
from .dequant import burgers_residual, hopf_lax_evolve
from .errors import (
    AlgebraicFailure,
    ClosureUndefined,
    IdemkitError,
    NegativeCycle,
    NotStabilized,
    ValidationError,
)
from .matrix import (
    bellman_solve_gauss_seidel,
    bellman_solve_jacobi,
    closure_gauss_jordan,
    closure_iterative,
    eigen_irreducible,
)
from .paths import (
    TerminalPrize,
    algebraic_path_solve,
    dp_optimal_profit,
    shortest_paths,
    widest_paths,
    witness_paths,
)
from .semiring import RMIN, axioms_report, get_semiring

COMMANDS = (
    "closure",
    "bellman",
    "path",
    "eigen",
    "integrate",
    "convolve",
    "legendre",
    "hopflax",
    "residual",
    "axioms",
)

EXIT_OK, EXIT_OTHER, EXIT_ALGEBRA, EXIT_INPUT = 0, 1, 2, 3

REQUIRED_INPUTS = {
    "closure": (1, 1),
    "bellman": (2, 2),
    "path": (1, 1),
    "eigen": (1, 1),
    "integrate": (1, 2),
    "convolve": (2, 2),
    "legendre": (1, 1),
    "hopflax": (1, 1),
    "residual": (1, 1),
    "axioms": (0, 0),
}


@dataclass
class JobSpec:
    command: str
    semiring: str | None = None
    inputs: list[str] = field(default_factory=list)
    method: str | None = None
    max_steps: int | None = None
    tolerance: float | None = None
    witness: bool = False
    output: str | None = None
    format: str = "json"
    seed: int = 0
    problem: str = "closure"
    steps: str = "unbounded"
    xi: str | None = None
    xgrid: str | None = None
    h: float | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}")
        lo, hi = REQUIRED_INPUTS[self.command]
        if not lo <= len(self.inputs) <= hi:
            want = str(lo) if lo == hi else f"{lo}-{hi}"
            raise ValidationError(f"{self.command} takes {want} input file(s), got {len(self.inputs)}")
        if self.command == "axioms" and not self.semiring:
            raise ValidationError("axioms needs --semiring")
        if self.command == "residual" and self.h is None:
            raise ValidationError("residual needs --h")


def _points(text: str) -> RealGrid:
    try:
        return RealGrid(tuple(float(v) if "." in v or "e" in v.lower() else int(v) for v in text.split(",")))
    except ValueError as exc:
        raise ValidationError(f"bad grid {text!r}: {exc}") from None


def parse_inputs(job: JobSpec) -> dict:
    """Load and validate every input the command needs."""
    docs = [io.load_json(p) for p in job.inputs]
    c = job.command
    if c in ("closure", "eigen"):
        return {"H": io.parse_matrix(docs[0], job.semiring)}
    if c == "bellman":
        return {"problem": io.parse_bellman(docs[0], docs[1], job.semiring)}
    if c == "path":
        g = io.parse_graph(docs[0], job.semiring)
        out = {"graph": g}
        if job.problem == "profit":
            prize = docs[0].get("prize")
            if not isinstance(prize, list):
                raise ValidationError("profit problems need a 'prize' array in the graph file")
            out["prize"] = TerminalPrize(tuple(g.semiring.from_literal(v) for v in prize))
        return out
    if c == "integrate":
        out = {"f": io.parse_gridfunction(docs[0], job.semiring)}
        if len(docs) > 1:
            out["measure"] = AMeasure(io.parse_gridfunction(docs[1], job.semiring))
        return out
    if c == "convolve":
        return {"f": io.parse_gridfunction(docs[0], job.semiring), "g": io.parse_gridfunction(docs[1], job.semiring)}
    if c == "legendre":
        f = io.parse_gridfunction(docs[0], job.semiring)
        xi = _points(job.xi) if job.xi else f.domain
        return {"f": f, "xi": xi}
    if c == "hopflax":
        problem = io.parse_cauchy(docs[0])
        xgrid = _points(job.xgrid) if job.xgrid else None
        return {"problem": problem, "xgrid": xgrid}
    if c == "residual":
        x, t, w = io.parse_residual_data(docs[0])
        return {"x": x, "t": t, "w": w}
    return {}


def _closure(H, method: str | None, job: JobSpec):
    method = method or "gauss-jordan"
    try:
        if method == "gauss-jordan":
            return closure_gauss_jordan(H)
        if method == "iterative":
            return closure_iterative(H, job.max_steps, job.tolerance)
    except ClosureUndefined as exc:
        if H.semiring is RMIN:
            raise NegativeCycle(exc.pivot) from None
        raise
    except NotStabilized:
        if H.semiring is RMIN:
            try:
                closure_gauss_jordan(H)
            except ClosureUndefined as exc:
                raise NegativeCycle(exc.pivot, job.max_steps or H.rows) from None
        raise
    raise ValidationError(f"unknown closure method {method!r}")


def compute(job: JobSpec, inputs: dict):
    c = job.command
    if c == "closure":
        return _closure(inputs["H"], job.method, job)
    if c == "bellman":
        method = job.method or "jacobi"
        if method == "jacobi":
            return bellman_solve_jacobi(inputs["problem"], job.max_steps, job.tolerance)
        if method == "gauss-seidel":
            return bellman_solve_gauss_seidel(inputs["problem"], job.max_steps, job.tolerance)
        raise ValidationError(f"unknown Bellman method {method!r}")
    if c == "path":
        g = inputs["graph"]
        if job.problem == "shortest":
            D = shortest_paths(g)
        elif job.problem == "widest":
            D = widest_paths(g)
        elif job.problem == "closure":
            D = algebraic_path_solve(g, job.method or "gauss-jordan")
        elif job.problem == "profit":
            steps = job.steps if job.steps == "unbounded" else int(job.steps)
            values = dp_optimal_profit(g, inputs["prize"], steps)
            s = g.semiring
            return {"semiring": s.id, "profit": [s.to_literal(v) for v in values]}
        else:
            raise ValidationError(f"unknown path problem {job.problem!r}")
        if job.witness:
            doc = io.dump_matrix(D)
            doc["witness"] = witness_paths(g)
            return doc
        return D
    if c == "eigen":
        H = inputs["H"]
        return io.dump_eigen(H.semiring, eigen_irreducible(H))
    if c == "integrate":
        f = inputs["f"]
        s = f.semiring
        if "measure" in inputs:
            value = integral_wrt_measure(f, inputs["measure"])
        else:
            value = idempotent_integral(f)
        return {"semiring": s.id, "value": s.to_literal(value)}
    if c == "convolve":
        return idempotent_convolution(inputs["f"], inputs["g"])
    if c == "legendre":
        return legendre_transform(inputs["f"], inputs["xi"])
    if c == "hopflax":
        return hopf_lax_evolve(inputs["problem"], inputs["xgrid"])
    if c == "residual":
        return {"h": job.h, "residual": burgers_residual(inputs["w"], inputs["x"], inputs["t"], job.h)}
    if c == "axioms":
        report = axioms_report(get_semiring(job.semiring), seed=job.seed)
        s = get_semiring(job.semiring)
        return {
            "semiring": report.semiring,
            "samples": report.sample_count,
            "exhaustive": report.exhaustive,
            "ok": report.ok,
            "checks": [
                {
                    "axiom": chk.name,
                    "statement": chk.label,
                    "holds": chk.passed,
                    "expected": chk.expected,
                    "witness": None if chk.witness is None else [s.to_literal(v) for v in chk.witness],
                }
                for chk in report.checks
            ],
        }
    raise ValidationError(f"unknown command {c!r}")


def run(job: JobSpec, stdout=None, stderr=None) -> int:
    """Execute a job; returns the process exit code."""
    stdout = stdout if stdout is not None else sys.stdout.buffer
    stderr = stderr if stderr is not None else sys.stderr
    try:
        inputs = parse_inputs(job)
        result = compute(job, inputs)
        data = io.emit_result(result, job.format)
    except AlgebraicFailure as exc:
        print(f"idemkit: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_ALGEBRA
    except ValidationError as exc:
        print(f"idemkit: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_INPUT
    except (IdemkitError, OSError, ValueError) as exc:
        print(f"idemkit: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_OTHER
    if job.output:
        Path(job.output).write_bytes(data)
    else:
        stdout.write(data)
        stdout.flush()
    if job.command == "axioms" and not result["ok"]:
        return EXIT_OTHER
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="idemkit", description="Batch solver for idempotent-semiring problems.")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("-s", "--semiring", help="semiring id, e.g. rmin, minmax:-inf:inf, product:rmax:boolean")
    parser.add_argument("-i", "--input", dest="inputs", action="append", default=[], help="input JSON file (repeatable)")
    parser.add_argument("-o", "--output", help="write the result here instead of standard output")
    parser.add_argument("--format", choices=("json", "tsv"), default="json")
    parser.add_argument("--method", choices=("iterative", "gauss-jordan", "jacobi", "gauss-seidel"))
    parser.add_argument("--max-steps", type=int)
    parser.add_argument("--tolerance", type=float)
    parser.add_argument("--witness", action="store_true", help="add one optimal path per pair")
    parser.add_argument("--problem", choices=("closure", "shortest", "widest", "profit"), default="closure")
    parser.add_argument("--steps", default="unbounded", help="profit horizon k, or 'unbounded'")
    parser.add_argument("--xi", help="comma-separated dual grid for legendre (default: the primal grid)")
    parser.add_argument("--xgrid", help="comma-separated output grid for hopflax (default: the S0 grid)")
    parser.add_argument("--h", type=float, help="deformation parameter for residual")
    parser.add_argument("--seed", type=int, default=None, help="sample seed for axioms (default $IDEMKIT_SEED or 0)")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse usage errors are input errors
        return EXIT_INPUT if exc.code else EXIT_OK
    seed = args.seed if args.seed is not None else int(os.environ.get("IDEMKIT_SEED", "0"))
    try:
        job = JobSpec(
            command=args.command,
            semiring=args.semiring,
            inputs=args.inputs,
            method=args.method,
            max_steps=args.max_steps,
            tolerance=args.tolerance,
            witness=args.witness,
            output=args.output,
            format=args.format,
            seed=seed,
            problem=args.problem,
            steps=args.steps,
            xi=args.xi,
            xgrid=args.xgrid,
            h=args.h,
        )
    except ValidationError as exc:
        print(f"idemkit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(job)


if __name__ == "__main__":
    sys.exit(main())

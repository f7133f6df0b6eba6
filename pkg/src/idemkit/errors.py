"""Exception hierarchy for idemkit.

Errors are grouped by how the CLI reports them: algebraic failures
(closure does not exist, iteration does not stabilize) map to exit code 2,
input validation failures to exit code 3, everything else to exit code 1.
"""

from __future__ import annotations


class IdemkitError(Exception):
    """Base class for every error raised by this package."""


# -- algebraic failures (exit code 2) ---------------------------------------


class AlgebraicFailure(IdemkitError):
    """A requested closure or fixpoint does not exist."""


class ClosureUndefined(AlgebraicFailure):
    def __init__(self, message: str = "closure undefined", pivot: int | None = None):
        super().__init__(message)
        self.pivot = pivot


class NotStabilized(AlgebraicFailure):
    def __init__(self, max_steps: int, message: str | None = None):
        super().__init__(message or f"sequence did not stabilize within {max_steps} steps")
        self.max_steps = max_steps


class NegativeCycle(NotStabilized):
    def __init__(self, node: int, max_steps: int = 0):
        # node is 0-based; messages use the 1-based numbering of input files
        super().__init__(max_steps, f"negative cycle through node {node + 1}")
        self.node = node


# -- input / validation failures (exit code 3) ------------------------------


class ValidationError(IdemkitError, ValueError):
    """An input violates an invariant of its target type."""


class ParseError(ValidationError):
    def __init__(self, line: int | None, reason: str):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{reason}")
        self.line = line
        self.reason = reason


class CarrierMismatch(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class GridMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError, IndexError):
    pass


class NegativeInput(ValidationError):
    pass


class NonNegativeInput(ValidationError):
    pass


class NonPositiveH(ValidationError):
    pass


class NonConvexHamiltonian(ValidationError):
    pass


class GridTooSmall(ValidationError):
    pass


class ArcMissing(ValidationError):
    pass


# -- other failures (exit code 1) -------------------------------------------


class OrderUndefined(IdemkitError):
    pass


class RootUndefined(IdemkitError):
    pass


class UnsupportedSemiring(IdemkitError):
    pass


class UnsupportedDomain(IdemkitError):
    pass


class NotIrreducible(IdemkitError):
    pass


class InstanceTooLarge(IdemkitError):
    pass


class UnsupportedFormat(IdemkitError):
    pass

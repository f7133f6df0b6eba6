"""Idempotent analysis on finite sample grids.

Functions live on a ``RealGrid`` (strictly increasing sample points) or a
``CyclicGroup`` (elements 0..n-1 under addition mod n) and take values in a
semiring. Integrals are ⊕-folds, integral operators are kernel–vector
products, and the Legendre transform is the max-plus Fourier transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import (
    CarrierMismatch,
    GridMismatch,
    IndexOutOfRange,
    UnsupportedDomain,
    UnsupportedSemiring,
    ValidationError,
)
from .matrix import scalar_product
from .semiring import RMAX, RMIN, Semiring, get_semiring


@dataclass(frozen=True)
class RealGrid:
    points: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        if any(b <= a for a, b in zip(pts, pts[1:])):
            raise ValidationError("grid points must be strictly increasing")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def is_integral(self) -> bool:
        return all(float(p).is_integer() for p in self.points)


@dataclass(frozen=True)
class CyclicGroup:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("cyclic group order must be positive")

    def __len__(self) -> int:
        return self.n

    @property
    def points(self) -> tuple:
        return tuple(range(self.n))


Domain = Union[RealGrid, CyclicGroup]
DualGrid = RealGrid


class GridFunction:
    """Semiring-valued samples on a grid; immutable."""

    __slots__ = ("semiring", "domain", "values")

    def __init__(self, semiring: Semiring | str, domain: Domain, values: Sequence, *, check: bool = True):
        s = get_semiring(semiring)
        vals = tuple(values)
        if len(vals) != len(domain):
            raise ValidationError(f"{len(vals)} values for a domain of size {len(domain)}")
        if check:
            for v in vals:
                if not s.contains(v):
                    raise CarrierMismatch(f"{v!r} is not in the {s.id} carrier")
        object.__setattr__(self, "semiring", s)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "values", vals)

    def __setattr__(self, name, value):
        raise AttributeError("GridFunction is immutable")

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        return (
            isinstance(other, GridFunction)
            and self.semiring == other.semiring
            and self.domain == other.domain
            and all(self.semiring.eq(a, b) for a, b in zip(self.values, other.values))
        )

    def __repr__(self):
        return f"GridFunction({self.semiring.id}, {self.domain!r}, {list(self.values)!r})"

    def scaled(self, lam) -> GridFunction:
        """λ ⊙ f."""
        mul = self.semiring.mul
        return GridFunction(self.semiring, self.domain, [mul(lam, v) for v in self.values], check=False)

    def plus(self, other: GridFunction) -> GridFunction:
        """f ⊕ g pointwise."""
        _shared(self, other)
        add = self.semiring.add
        return GridFunction(
            self.semiring, self.domain, [add(a, b) for a, b in zip(self.values, other.values)], check=False
        )


@dataclass(frozen=True)
class AMeasure:
    density: GridFunction


class Kernel:
    """K(x, y) on xdomain × ydomain, stored row-major (one row per x)."""

    __slots__ = ("semiring", "xdomain", "ydomain", "values")

    def __init__(self, semiring, xdomain: Domain, ydomain: Domain, values: Sequence[Sequence], *, check: bool = True):
        s = get_semiring(semiring)
        rows = tuple(tuple(r) for r in values)
        if len(rows) != len(xdomain) or any(len(r) != len(ydomain) for r in rows):
            raise ValidationError(f"kernel values must be {len(xdomain)}×{len(ydomain)}")
        if check:
            for r in rows:
                for v in r:
                    if not s.contains(v):
                        raise CarrierMismatch(f"{v!r} is not in the {s.id} carrier")
        object.__setattr__(self, "semiring", s)
        object.__setattr__(self, "xdomain", xdomain)
        object.__setattr__(self, "ydomain", ydomain)
        object.__setattr__(self, "values", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Kernel is immutable")

    @classmethod
    def identity(cls, semiring, domain: Domain) -> Kernel:
        s = get_semiring(semiring)
        n = len(domain)
        return cls(s, domain, domain, [[s.one if i == j else s.zero for j in range(n)] for i in range(n)], check=False)

    @classmethod
    def from_function(cls, semiring, xdomain: Domain, ydomain: Domain, fn) -> Kernel:
        return cls(semiring, xdomain, ydomain, [[fn(x, y) for y in ydomain.points] for x in xdomain.points])

    def __eq__(self, other):
        return (
            isinstance(other, Kernel)
            and self.semiring == other.semiring
            and self.xdomain == other.xdomain
            and self.ydomain == other.ydomain
            and all(self.semiring.eq(a, b) for ra, rb in zip(self.values, other.values) for a, b in zip(ra, rb))
        )

    def __repr__(self):
        return f"Kernel({self.semiring.id}, {len(self.xdomain)}×{len(self.ydomain)})"


def _shared(f: GridFunction, g: GridFunction) -> Semiring:
    if f.semiring != g.semiring:
        raise GridMismatch(f"functions over {f.semiring.id} and {g.semiring.id}")
    if f.domain != g.domain:
        raise GridMismatch("functions live on different domains")
    return f.semiring


def _require_idempotent(s: Semiring) -> None:
    if not s.idempotent:
        raise UnsupportedSemiring(f"idempotent integration needs an idempotent semiring, not {s.id}")


def idempotent_integral(f: GridFunction):
    """∫⊕ f = ⊕ of all samples (the supremum in the natural order)."""
    _require_idempotent(f.semiring)
    return f.semiring.sum(f.values)


def measure_of(m: AMeasure, subset: Iterable[int]):
    """m_φ(B) = ⊕_{x∈B} φ(x); the empty set has measure 𝟘."""
    density = m.density
    _require_idempotent(density.semiring)
    idx = list(subset)
    for i in idx:
        if not 0 <= i < len(density):
            raise IndexOutOfRange(f"index {i} outside a domain of size {len(density)}")
    return density.semiring.sum(density.values[i] for i in idx)


def integral_wrt_measure(psi: GridFunction, m: AMeasure):
    """∫⊕ ψ dm_φ = ⊕_x ψ(x) ⊙ φ(x)."""
    s = _shared(psi, m.density)
    _require_idempotent(s)
    return s.sum(map(s.mul, psi.values, m.density.values))


def idempotent_scalar_product(f: GridFunction, g: GridFunction):
    """(f, g) = ⊕_x f(x) ⊙ g(x)."""
    s = _shared(f, g)
    return scalar_product(s, f.values, g.values)


def idempotent_convolution(f: GridFunction, g: GridFunction) -> GridFunction:
    """(f ⊛ g)(z) = ⊕_x f(x) ⊙ g(z − x).

    On a cyclic group the difference is taken mod n. On an integer-valued
    real grid, pairs whose difference falls off the grid contribute nothing.
    """
    s = _shared(f, g)
    dom = f.domain
    n = len(dom)
    out = []
    if isinstance(dom, CyclicGroup):
        for z in range(n):
            out.append(s.sum(s.mul(f.values[x], g.values[(z - x) % n]) for x in range(n)))
    elif isinstance(dom, RealGrid):
        if not dom.is_integral:
            raise UnsupportedDomain("convolution on a real grid needs integer sample points")
        index = {int(p): i for i, p in enumerate(dom.points)}
        pts = [int(p) for p in dom.points]
        for z in pts:
            terms = []
            for i, x in enumerate(pts):
                k = index.get(z - x)
                if k is not None:
                    terms.append(s.mul(f.values[i], g.values[k]))
            out.append(s.sum(terms))
    else:
        raise UnsupportedDomain(f"cannot convolve on {dom!r}")
    return GridFunction(s, dom, out, check=False)


def delta(semiring, domain: Domain, at=0) -> GridFunction:
    """𝟙 at ``at``, 𝟘 elsewhere: the unit of ⊛."""
    s = get_semiring(semiring)
    return GridFunction(s, domain, [s.one if p == at else s.zero for p in domain.points], check=False)


def _legendre_max(points: Sequence, values: Sequence, xi: Sequence) -> list:
    live = [(x, v) for x, v in zip(points, values) if v != RMAX.zero]
    return [max((k * x + v for x, v in live), default=RMAX.zero) for k in xi]


def legendre_transform(f: GridFunction, xi: DualGrid | Sequence) -> GridFunction:
    """f̃(ξ) = ⊕_x ξ·x ⊙ f(x) on the dual grid.

    Over rmax this is sup_x(ξx + f(x)); over rmin it is inf_x(ξx + f(x)),
    computed by negating into rmax and back.
    """
    dual = xi if isinstance(xi, RealGrid) else RealGrid(tuple(xi))
    if not isinstance(f.domain, RealGrid):
        raise UnsupportedDomain("the Legendre transform needs a real grid")
    pts = f.domain.points
    if f.semiring is RMAX:
        vals = _legendre_max(pts, f.values, dual.points)
    elif f.semiring is RMIN:
        neg = [-v for v in f.values]
        vals = [-v for v in _legendre_max(pts, neg, [-k for k in dual.points])]
    else:
        raise UnsupportedSemiring(f"Legendre transform over rmax or rmin, not {f.semiring.id}")
    return GridFunction(f.semiring, dual, vals, check=False)


def integral_operator_apply(K: Kernel, f: GridFunction) -> GridFunction:
    """(Kf)(x) = ⊕_y K(x, y) ⊙ f(y)."""
    if K.semiring != f.semiring:
        raise GridMismatch(f"kernel over {K.semiring.id}, function over {f.semiring.id}")
    if K.ydomain != f.domain:
        raise GridMismatch("kernel y-domain differs from the function's domain")
    s = K.semiring
    total, mul, fv = s.sum, s.mul, f.values
    return GridFunction(s, K.xdomain, [total(map(mul, row, fv)) for row in K.values], check=False)


def kernel_compose(K1: Kernel, K2: Kernel) -> Kernel:
    """(K1∘K2)(x, z) = ⊕_y K1(x, y) ⊙ K2(y, z)."""
    if K1.semiring != K2.semiring:
        raise GridMismatch(f"kernels over {K1.semiring.id} and {K2.semiring.id}")
    if K1.ydomain != K2.xdomain:
        raise GridMismatch("inner domains of the composed kernels differ")
    s = K1.semiring
    total, mul = s.sum, s.mul
    cols = list(zip(*K2.values))
    rows = [[total(map(mul, row, col)) for col in cols] for row in K1.values]
    return Kernel(s, K1.xdomain, K2.ydomain, rows, check=False)

"""Triangular and trapezoidal fuzzy numbers, centroids and lattice ranking.

Two ranking families live here: a crisp mapping through the centroid
abscissa, and a dominance relation built from the fuzzy lattice MIN/MAX
operators together with an inclusion index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.integrate import simpson

DEFAULT_GRID = 1001
SAMPLE_EQ_TOL = 1e-9
TNORMS = ("minimum", "product")


class EmptyAntecedentError(ValueError):
    """Raised when the inclusion index is asked about an all-zero set."""

    def __init__(self) -> None:
        super().__init__("empty-antecedent")


@dataclass(frozen=True)
class TriangularFuzzyNumber:
    """Fuzzy number with linear legs on ``[a, b]`` and ``[b, c]`` and peak 1 at ``b``."""

    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f"triangular bound {name}={value} is not finite")
            object.__setattr__(self, name, value)
        if not self.a <= self.b <= self.c:
            raise ValueError(
                f"triangular bounds must satisfy a <= b <= c, got ({self.a}, {self.b}, {self.c})"
            )

    @classmethod
    def crisp(cls, value: float) -> TriangularFuzzyNumber:
        return cls(value, value, value)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.a, self.b, self.c)

    def membership(self, x: float) -> float:
        return membership(self, x)

    def __add__(self, other: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
        if not isinstance(other, TriangularFuzzyNumber):
            return NotImplemented
        return add(self, other)

    def __mul__(self, k: float) -> TriangularFuzzyNumber:
        return scale(self, k)

    __rmul__ = __mul__


@dataclass(frozen=True)
class GeneralizedFuzzyNumber:
    """Trapezoid ``(a, b, c, d)`` with plateau height ``height`` on ``[b, c]``.

    Only the piecewise-linear shape family is supported, so the inverse
    leg functions used by the vertical centroid are exact.
    """

    a: float
    b: float
    c: float
    d: float
    height: float = 1.0

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d", "height"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not self.a <= self.b <= self.c <= self.d:
            raise ValueError(
                "generalized bounds must satisfy a <= b <= c <= d, got "
                f"({self.a}, {self.b}, {self.c}, {self.d})"
            )
        if not 0.0 < self.height <= 1.0:
            raise ValueError(f"height must lie in (0, 1], got {self.height}")

    @classmethod
    def from_triangular(cls, fn: TriangularFuzzyNumber) -> GeneralizedFuzzyNumber:
        return cls(fn.a, fn.b, fn.b, fn.c, 1.0)

    def membership(self, x: float) -> float:
        if self.b <= x <= self.c:
            return self.height
        if self.a < x < self.b:
            return self.height * (x - self.a) / (self.b - self.a)
        if self.c < x < self.d:
            return self.height * (self.d - x) / (self.d - self.c)
        return 0.0

    def left_inverse(self, y):
        """Inverse of the rising leg, ``[0, height] -> [a, b]``."""
        return self.a + (self.b - self.a) * np.asarray(y) / self.height

    def right_inverse(self, y):
        """Inverse of the falling leg, ``[0, height] -> [c, d]``."""
        return self.d - (self.d - self.c) * np.asarray(y) / self.height


@dataclass(frozen=True)
class Centroid:
    x0: float
    y0: float


@dataclass(frozen=True)
class SampledMembership:
    """Membership degrees of a fuzzy set sampled on a uniform grid."""

    grid: np.ndarray
    degrees: np.ndarray

    def __post_init__(self) -> None:
        grid = np.asarray(self.grid, dtype=float)
        degrees = np.asarray(self.degrees, dtype=float)
        if grid.ndim != 1 or grid.size < 2:
            raise ValueError("grid needs at least two points")
        if grid.shape != degrees.shape:
            raise ValueError("grid and degrees differ in length")
        if np.any(np.diff(grid) <= 0):
            raise ValueError("grid must be strictly increasing")
        if np.any(degrees < 0.0) or np.any(degrees > 1.0):
            raise ValueError("membership degrees must lie in [0, 1]")
        grid.flags.writeable = False
        degrees.flags.writeable = False
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def of(cls, fn: TriangularFuzzyNumber, grid: np.ndarray) -> SampledMembership:
        return cls(grid, membership_array(fn, grid))

    def max_difference(self, other: SampledMembership) -> float:
        _require_shared_grid(self, other)
        return float(np.max(np.abs(self.degrees - other.degrees)))

    def equals(self, other: SampledMembership, tol: float = SAMPLE_EQ_TOL) -> bool:
        return self.max_difference(other) <= tol


class Relation(enum.Enum):
    """Outcome of the lattice/inclusion-index ranking of ``A`` against ``B``."""

    PRECEDES = "precedes"  # A is the smaller one
    SUCCEEDS = "succeeds"
    EQUIVALENT = "equivalent"


def membership(fn: TriangularFuzzyNumber, x: float) -> float:
    """Degree of ``x`` in ``fn``; a collapsed leg still peaks at 1 on ``b``."""
    if x == fn.b:
        return 1.0
    if fn.a < x < fn.b:
        return (x - fn.a) / (fn.b - fn.a)
    if fn.b < x < fn.c:
        return (x - fn.c) / (fn.b - fn.c)
    return 0.0


def membership_array(fn: TriangularFuzzyNumber, xs) -> np.ndarray:
    """Vectorised :func:`membership`."""
    xs = np.asarray(xs, dtype=float)
    out = np.zeros_like(xs)
    if fn.b > fn.a:
        rising = (xs > fn.a) & (xs < fn.b)
        out[rising] = (xs[rising] - fn.a) / (fn.b - fn.a)
    if fn.c > fn.b:
        falling = (xs > fn.b) & (xs < fn.c)
        out[falling] = (xs[falling] - fn.c) / (fn.b - fn.c)
    out[xs == fn.b] = 1.0
    return out


def scale(fn: TriangularFuzzyNumber, k: float) -> TriangularFuzzyNumber:
    if k < 0:
        raise ValueError(f"scale factor must be nonnegative, got {k}")
    return TriangularFuzzyNumber(k * fn.a, k * fn.b, k * fn.c)


def add(p: TriangularFuzzyNumber, q: TriangularFuzzyNumber) -> TriangularFuzzyNumber:
    return TriangularFuzzyNumber(p.a + q.a, p.b + q.b, p.c + q.c)


def centroid_triangular(fn: TriangularFuzzyNumber) -> Centroid:
    return Centroid((fn.a + fn.b + fn.c) / 3.0, 1.0 / 3.0)


def centroid_generalized(fn: GeneralizedFuzzyNumber, quadrature_points: int = 10_000) -> Centroid:
    """Centroid of a trapezoidal fuzzy number by numerical quadrature.

    The horizontal coordinate integrates ``x f(x)`` leg by leg so that
    every kink is a quadrature node; the vertical coordinate integrates
    over membership levels using the exact leg inverses.  Both run on the
    support rescaled to [0, 1], so very narrow supports stay resolvable.
    A collapsed number (``a == d``) is treated as a crisp point at height/2.
    """
    if quadrature_points < 2:
        raise ValueError("need at least two quadrature points")
    if fn.a == fn.d:
        return Centroid(fn.a, fn.height / 2.0)
    width = fn.d - fn.a
    unit = GeneralizedFuzzyNumber(0.0, (fn.b - fn.a) / width, (fn.c - fn.a) / width, 1.0, fn.height)
    c = _unit_centroid(unit, quadrature_points)
    return Centroid(fn.a + width * c.x0, c.y0)


def _unit_centroid(fn: GeneralizedFuzzyNumber, quadrature_points: int) -> Centroid:

    moment = 0.0
    area = 0.0
    for lo, hi in ((fn.a, fn.b), (fn.b, fn.c), (fn.c, fn.d)):
        if hi <= lo:
            continue
        xs = np.linspace(lo, hi, quadrature_points)
        fx = _trapezoid_membership(fn, xs)
        moment += simpson(xs * fx, x=xs)
        area += simpson(fx, x=xs)

    ys = np.linspace(0.0, fn.height, quadrature_points)
    spread = fn.right_inverse(ys) - fn.left_inverse(ys)
    y_moment = simpson(ys * spread, x=ys)
    y_area = simpson(spread, x=ys)
    return Centroid(float(moment / area), float(y_moment / y_area))


def _trapezoid_membership(fn: GeneralizedFuzzyNumber, xs: np.ndarray) -> np.ndarray:
    out = np.full_like(xs, fn.height)
    if fn.b > fn.a:
        left = xs < fn.b
        out[left] = fn.height * (xs[left] - fn.a) / (fn.b - fn.a)
    if fn.d > fn.c:
        right = xs > fn.c
        out[right] = fn.height * (fn.d - xs[right]) / (fn.d - fn.c)
    return np.clip(out, 0.0, fn.height)


def support_grid(
    fuzzy_numbers: Sequence[TriangularFuzzyNumber], resolution: int = DEFAULT_GRID
) -> np.ndarray:
    """Uniform grid spanning the union of the supports."""
    if resolution < 2:
        raise ValueError("grid resolution must be at least 2")
    lo = min(fn.a for fn in fuzzy_numbers)
    hi = max(fn.c for fn in fuzzy_numbers)
    grid = np.linspace(lo, hi, resolution)
    if np.any(np.diff(grid) <= 0):
        # span too narrow for distinct float points, crisp numbers included
        grid = np.linspace(lo - 0.5, hi + 0.5, resolution)
    return grid


def _crossing_split(
    A: TriangularFuzzyNumber, B: TriangularFuzzyNumber, grid: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (left-mode degrees, right-mode degrees, mask of grid >= x_m).

    ``x_m`` is the smallest grid point between the two modes where the
    left-mode number no longer exceeds the right-mode one.  Both legs are
    monotone there, so this is the exact crossing snapped to the grid.
    """
    left, right = (A, B) if A.b <= B.b else (B, A)
    mu_l = membership_array(left, grid)
    mu_r = membership_array(right, grid)
    between = (grid >= left.b) & (grid <= right.b)
    crossed = np.flatnonzero(between & (mu_l <= mu_r))
    x_m = grid[crossed[0]] if crossed.size else right.b
    return mu_l, mu_r, grid >= x_m


def lattice_min(
    A: TriangularFuzzyNumber, B: TriangularFuzzyNumber, grid: int | np.ndarray = DEFAULT_GRID
) -> SampledMembership:
    """Fuzzy lattice MIN: union below the crossing point, intersection from it on."""
    xs = support_grid((A, B), grid) if np.isscalar(grid) else np.asarray(grid, dtype=float)
    mu_l, mu_r, upper = _crossing_split(A, B, xs)
    degrees = np.where(upper, np.minimum(mu_l, mu_r), np.maximum(mu_l, mu_r))
    return SampledMembership(xs, degrees)


def lattice_max(
    A: TriangularFuzzyNumber, B: TriangularFuzzyNumber, grid: int | np.ndarray = DEFAULT_GRID
) -> SampledMembership:
    """Fuzzy lattice MAX: intersection below the crossing point, union from it on."""
    xs = support_grid((A, B), grid) if np.isscalar(grid) else np.asarray(grid, dtype=float)
    mu_l, mu_r, upper = _crossing_split(A, B, xs)
    degrees = np.where(upper, np.maximum(mu_l, mu_r), np.minimum(mu_l, mu_r))
    return SampledMembership(xs, degrees)


def _require_shared_grid(E: SampledMembership, F: SampledMembership) -> None:
    if E.grid.shape != F.grid.shape or not np.array_equal(E.grid, F.grid):
        raise ValueError("sampled memberships must share a grid")


def inclusion_index(E: SampledMembership, F: SampledMembership, tnorm: str = "minimum") -> float:
    """Degree to which ``E`` is contained in ``F`` on their common grid."""
    _require_shared_grid(E, F)
    denominator = float(np.sum(E.degrees))
    if denominator <= 0.0:
        raise EmptyAntecedentError()
    if tnorm == "minimum":
        overlap = np.minimum(E.degrees, F.degrees)
    elif tnorm == "product":
        overlap = E.degrees * F.degrees
    else:
        raise ValueError(f"unknown t-norm {tnorm!r}; expected one of {TNORMS}")
    return min(1.0, float(np.sum(overlap)) / denominator)


def rank_lattice_ini(
    A: TriangularFuzzyNumber,
    B: TriangularFuzzyNumber,
    grid: int = DEFAULT_GRID,
    tnorm: str = "minimum",
) -> Relation:
    xs = support_grid((A, B), grid)
    low = lattice_min(A, B, xs)
    sampled_a = SampledMembership.of(A, xs)
    sampled_b = SampledMembership.of(B, xs)
    is_a = low.equals(sampled_a)
    is_b = low.equals(sampled_b)
    if is_a and is_b:
        return Relation.EQUIVALENT
    if is_a:
        return Relation.PRECEDES
    if is_b:
        return Relation.SUCCEEDS
    in_a = inclusion_index(low, sampled_a, tnorm)
    in_b = inclusion_index(low, sampled_b, tnorm)
    if in_a > in_b:
        return Relation.PRECEDES
    if in_a < in_b:
        return Relation.SUCCEEDS
    return Relation.EQUIVALENT


def rank_centroid(items: Sequence[TriangularFuzzyNumber]) -> list[int]:
    """Indices of ``items`` from largest to smallest centroid abscissa.

    Ties fall back to the mode, then the left bound (both descending),
    then the original position.
    """
    if not items:
        raise ValueError("nothing to rank")

    def key(i: int):
        fn = items[i]
        return (-_tie_round(centroid_triangular(fn).x0), -_tie_round(fn.b), -_tie_round(fn.a), i)

    return sorted(range(len(items)), key=key)


def _tie_round(value: float) -> float:
    # absorbs last-bit noise so that arithmetically equal keys tie
    return round(value, 12)

"""Knowledge about a criterion satisfaction, realised as monotone set measures.

Scale grades are numbered from 1 (the most satisfactory grade) to ``n``;
``H_j`` is the prefix ``{1, ..., j}``.  Every kind of knowledge is reduced
to its cumulative vector ``(mu(H_1), ..., mu(H_n))``, which is what the
dominance machinery compares.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .fuzzy_numbers import TriangularFuzzyNumber, centroid_triangular

MASS_TOL = 1e-9
MONOTONE_TOL = 1e-12


class ValidationError(ValueError):
    """Invalid input; ``diagnostics`` lists every violated condition."""

    def __init__(self, diagnostics: Sequence[str]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(self.diagnostics))


@dataclass(frozen=True)
class LinguisticScale:
    labels: tuple[str, ...]
    values: tuple[TriangularFuzzyNumber, ...]

    def __post_init__(self) -> None:
        labels = tuple(str(label) for label in self.labels)
        values = tuple(
            v if isinstance(v, TriangularFuzzyNumber) else TriangularFuzzyNumber(*v) for v in self.values
        )
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "values", values)
        if len(labels) != len(values):
            raise ValidationError([f"scale has {len(labels)} labels but {len(values)} values"])
        if len(labels) < 2:
            raise ValidationError(["scale needs at least two grades"])
        if len(set(labels)) != len(labels):
            raise ValidationError(["scale labels must be unique"])
        centroids = [centroid_triangular(v).x0 for v in values]
        for j in range(1, len(values)):
            if not centroids[j] < centroids[j - 1]:
                raise ValidationError(
                    [
                        f"scale grade {j + 1} ({labels[j]}) is not strictly below grade {j} "
                        f"({labels[j - 1]}); grades must be listed best first"
                    ]
                )

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, grade: int) -> TriangularFuzzyNumber:
        """Fuzzy value of ``grade`` (1-based)."""
        if not 1 <= grade <= len(self.values):
            raise IndexError(f"grade {grade} outside 1..{len(self.values)}")
        return self.values[grade - 1]

    def grade_of(self, label: str) -> int:
        return self.labels.index(label) + 1


@dataclass(frozen=True)
class Probability:
    masses: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "masses", tuple(float(p) for p in self.masses))


@dataclass(frozen=True)
class Possibility:
    degrees: tuple[float, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "degrees", tuple(float(t) for t in self.degrees))


@dataclass(frozen=True)
class Interval:
    """Satisfaction known to be one of grades ``lo..hi`` (1-based, inclusive)."""

    lo: int
    hi: int


@dataclass(frozen=True)
class Certain:
    grade: int


UncertainSatisfaction = Union[Probability, Possibility, Interval, Certain]


@dataclass(frozen=True)
class CumulativeMeasure:
    """``(mu(H_1), ..., mu(H_n))`` for a monotone measure on the scale."""

    values: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", values)
        problems = cumulative_problems(values)
        if problems:
            raise ValidationError(problems)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, j: int) -> float:
        return self.values[j]


def cumulative_problems(values: Sequence[float]) -> list[str]:
    problems = []
    if not values:
        return ["cumulative measure is empty"]
    for j, v in enumerate(values, start=1):
        if not (-MONOTONE_TOL <= v <= 1.0 + MASS_TOL):
            problems.append(f"mu(H{j})={v:g} outside [0,1]")
        if j > 1 and v < values[j - 2] - MONOTONE_TOL:
            problems.append(f"mu(H{j})={v:g} decreases from mu(H{j - 1})={values[j - 2]:g}")
    if abs(values[-1] - 1.0) > MASS_TOL:
        problems.append(f"mu(H{len(values)})={values[-1]:g} ≠ 1")
    return problems


def validate(sat: UncertainSatisfaction, n: int | None = None) -> list[str]:
    """Diagnostics for ``sat`` on a scale of ``n`` grades; empty when valid."""
    out: list[str] = []
    if isinstance(sat, Probability):
        if n is not None and len(sat.masses) != n:
            out.append(f"probability has {len(sat.masses)} entries, scale has {n}")
        for j, p in enumerate(sat.masses, start=1):
            if not 0.0 <= p <= 1.0:
                out.append(f"probability p{j}={p:g} outside [0,1]")
        mass = math.fsum(sat.masses)
        if abs(mass - 1.0) > MASS_TOL:
            out.append(f"probability mass {mass:g} ≠ 1")
    elif isinstance(sat, Possibility):
        if n is not None and len(sat.degrees) != n:
            out.append(f"possibility has {len(sat.degrees)} entries, scale has {n}")
        for j, t in enumerate(sat.degrees, start=1):
            if not 0.0 <= t <= 1.0:
                out.append(f"possibility tau{j}={t:g} outside [0,1]")
        top = max(sat.degrees, default=0.0)
        if top != 1.0:
            out.append(f"possibility max {top:g} ≠ 1")
    elif isinstance(sat, Interval):
        upper = n if n is not None else sat.hi
        if not 1 <= sat.lo <= sat.hi <= upper:
            out.append(f"interval [{sat.lo}, {sat.hi}] must satisfy 1 <= lo <= hi <= {upper}")
    elif isinstance(sat, Certain):
        upper = n if n is not None else sat.grade
        if not 1 <= sat.grade <= upper:
            out.append(f"certain grade {sat.grade} outside 1..{upper}")
    else:
        out.append(f"unsupported satisfaction type {type(sat).__name__}")
    return out


def size_of(sat: UncertainSatisfaction) -> int | None:
    """Scale size implied by a distribution, ``None`` for index-based knowledge."""
    if isinstance(sat, Probability):
        return len(sat.masses)
    if isinstance(sat, Possibility):
        return len(sat.degrees)
    return None


def _check(sat: UncertainSatisfaction, n: int | None) -> int:
    if n is None:
        n = size_of(sat)
        if n is None:
            raise ValueError(f"scale size required for {type(sat).__name__}")
    problems = validate(sat, n)
    if problems:
        raise ValidationError(problems)
    return n


def measure_of_subset(sat: UncertainSatisfaction, subset: Iterable[int], n: int | None = None) -> float:
    """Measure of a set of grades (1-based) under ``sat``."""
    n = _check(sat, n)
    grades = set(subset)
    bad = sorted(g for g in grades if not 1 <= g <= n)
    if bad:
        raise IndexError(f"grades {bad} outside 1..{n}")
    if not grades:
        return 0.0
    if isinstance(sat, Probability):
        return math.fsum(sat.masses[g - 1] for g in sorted(grades))
    if isinstance(sat, Possibility):
        return max(sat.degrees[g - 1] for g in grades)
    if isinstance(sat, Interval):
        return 1.0 if any(sat.lo <= g <= sat.hi for g in grades) else 0.0
    return 1.0 if sat.grade in grades else 0.0


def cumulative(sat: UncertainSatisfaction, n: int | None = None) -> CumulativeMeasure:
    """Cumulative vector ``mu(H_j)`` for ``j = 1..n``."""
    n = _check(sat, n)
    if isinstance(sat, Probability):
        values = [math.fsum(sat.masses[:j]) for j in range(1, n + 1)]
    elif isinstance(sat, Possibility):
        values = []
        running = 0.0
        for t in sat.degrees:
            running = max(running, t)
            values.append(running)
    elif isinstance(sat, Interval):
        values = [1.0 if j >= sat.lo else 0.0 for j in range(1, n + 1)]
    else:
        values = [1.0 if j >= sat.grade else 0.0 for j in range(1, n + 1)]
    return CumulativeMeasure(tuple(values))


def interval_from_bounds(scale: LinguisticScale, low: float, high: float) -> Interval:
    """Interval of the grades whose modes fall inside ``[low, high]``."""
    if low > high:
        raise ValueError(f"interval bounds reversed: [{low}, {high}]")
    inside = [j for j, v in enumerate(scale.values, start=1) if low <= v.b <= high]
    if not inside:
        raise ValueError(f"no scale grade has its mode inside [{low}, {high}]")
    return Interval(min(inside), max(inside))


def possibility_of_interval(sat: Interval, n: int) -> Possibility:
    """The 0/1 possibility distribution an interval stands for."""
    return Possibility(tuple(1.0 if sat.lo <= j <= sat.hi else 0.0 for j in range(1, n + 1)))

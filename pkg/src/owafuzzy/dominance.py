"""Measure-based dominance, the Choquet surrogate, and measure aggregation."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

from .fuzzy_numbers import (
    DEFAULT_GRID,
    Relation,
    TriangularFuzzyNumber,
    add,
    rank_centroid,
    rank_lattice_ini,
    scale,
)
from .measures import CumulativeMeasure, LinguisticScale
from .owa import WeightVector

EQUAL_TOL = 1e-12
RANKINGS = ("centroid", "lattice_ini")


class Dominance(enum.Enum):
    FIRST_DOMINATES = "first_dominates"
    SECOND_DOMINATES = "second_dominates"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class CriterionOrdering:
    """Permutation of criterion positions (0-based), most satisfied first."""

    order: tuple[int, ...]
    method: str  # "dominance" or "surrogate"
    surrogates: tuple[TriangularFuzzyNumber, ...] | None = None

    def __post_init__(self) -> None:
        if sorted(self.order) != list(range(len(self.order))):
            raise ValueError(f"{self.order} is not a permutation")
        if self.method not in ("dominance", "surrogate"):
            raise ValueError(f"unknown ordering method {self.method!r}")
        if (self.surrogates is not None) != (self.method == "surrogate"):
            raise ValueError("surrogates accompany the surrogate method only")


def dominates(mu_a: CumulativeMeasure, mu_b: CumulativeMeasure) -> Dominance:
    if len(mu_a) != len(mu_b):
        raise ValueError(f"measures of length {len(mu_a)} and {len(mu_b)} are not comparable")
    diffs = [a - b for a, b in zip(mu_a, mu_b)]
    at_least = all(d >= -EQUAL_TOL for d in diffs)
    at_most = all(d <= EQUAL_TOL for d in diffs)
    if at_least and at_most:
        return Dominance.EQUAL
    if at_least:
        return Dominance.FIRST_DOMINATES
    if at_most:
        return Dominance.SECOND_DOMINATES
    return Dominance.INCOMPARABLE


def delta_weights(mu: CumulativeMeasure) -> tuple[float, ...]:
    """Increments ``mu(H_j) - mu(H_{j-1})`` with ``mu(H_0) = 0``."""
    previous = 0.0
    out = []
    for value in mu:
        out.append(max(value - previous, 0.0))
        previous = value
    return tuple(out)


def surrogate(mu: CumulativeMeasure, scale_: LinguisticScale) -> TriangularFuzzyNumber:
    """Fuzzy stand-in ``sum_j V_j * y_j`` for the measure ``mu``."""
    if len(mu) != len(scale_):
        raise ValueError(f"measure has {len(mu)} entries, scale has {len(scale_)}")
    total = TriangularFuzzyNumber(0.0, 0.0, 0.0)
    for v, y in zip(delta_weights(mu), scale_.values):
        total = add(total, scale(y, v))
    return total


def dominance_order(measures: Sequence[CumulativeMeasure]) -> tuple[int, ...] | None:
    """Total order by dominance, or ``None`` if some pair is incomparable.

    Equal measures keep their original relative order.
    """
    beaten_by = [0] * len(measures)
    for i in range(len(measures)):
        for k in range(i + 1, len(measures)):
            rel = dominates(measures[i], measures[k])
            if rel is Dominance.INCOMPARABLE:
                return None
            if rel is Dominance.FIRST_DOMINATES:
                beaten_by[k] += 1
            elif rel is Dominance.SECOND_DOMINATES:
                beaten_by[i] += 1
    return tuple(sorted(range(len(measures)), key=lambda i: (beaten_by[i], i)))


def rank_fuzzy(
    items: Sequence[TriangularFuzzyNumber],
    ranking: str = "centroid",
    grid: int = DEFAULT_GRID,
    tnorm: str = "minimum",
) -> tuple[int, ...]:
    """Order fuzzy numbers largest first with the chosen ranking strategy.

    ``lattice_ini`` is a pairwise relation that need not be transitive, so
    items are ordered by net pairwise wins, ties by centroid order.
    """
    if ranking == "centroid":
        return tuple(rank_centroid(items))
    if ranking != "lattice_ini":
        raise ValueError(f"unknown ranking {ranking!r}; expected one of {RANKINGS}")
    net = [0] * len(items)
    for i in range(len(items)):
        for k in range(i + 1, len(items)):
            rel = rank_lattice_ini(items[i], items[k], grid, tnorm)
            if rel is Relation.SUCCEEDS:
                net[i] += 1
                net[k] -= 1
            elif rel is Relation.PRECEDES:
                net[i] -= 1
                net[k] += 1
    position = {idx: pos for pos, idx in enumerate(rank_centroid(items))}
    return tuple(sorted(range(len(items)), key=lambda i: (-net[i], position[i])))


def order_criteria(
    measures: Sequence[CumulativeMeasure],
    scale_: LinguisticScale,
    ranking: str = "centroid",
    grid: int = DEFAULT_GRID,
    tnorm: str = "minimum",
) -> CriterionOrdering:
    if not measures:
        raise ValueError("no criteria to order")
    order = dominance_order(measures)
    if order is not None:
        return CriterionOrdering(order, "dominance")
    surrogates = tuple(surrogate(mu, scale_) for mu in measures)
    return CriterionOrdering(rank_fuzzy(surrogates, ranking, grid, tnorm), "surrogate", surrogates)


def aggregate_measure(
    measures_in_rank_order: Sequence[CumulativeMeasure], weights: WeightVector | Sequence[float]
) -> CumulativeMeasure:
    """Position-weighted convex combination of the ordered measures, prefix by prefix."""
    if not isinstance(weights, WeightVector):
        weights = WeightVector(tuple(weights))
    if len(measures_in_rank_order) != len(weights):
        raise ValueError(f"{len(measures_in_rank_order)} measures but {len(weights)} weights")
    sizes = {len(mu) for mu in measures_in_rank_order}
    if len(sizes) != 1:
        raise ValueError(f"measures have differing lengths {sorted(sizes)}")
    (n,) = sizes
    return CumulativeMeasure(
        tuple(
            math.fsum(w * mu[j] for w, mu in zip(weights, measures_in_rank_order)) for j in range(n)
        )
    )

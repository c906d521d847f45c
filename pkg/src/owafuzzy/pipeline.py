"""End-to-end scoring of alternatives and their final ranking.

Per alternative: cumulative measures per criterion, criterion ordering
(dominance, else surrogate), quantifier weights, aggregated measure.
Across alternatives: the same dominance-then-surrogate comparison applied
to the aggregated measures.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from .dominance import (
    RANKINGS,
    CriterionOrdering,
    aggregate_measure,
    delta_weights,
    dominance_order,
    order_criteria,
    rank_fuzzy,
    surrogate,
)
from .fuzzy_numbers import DEFAULT_GRID, TNORMS, TriangularFuzzyNumber, centroid_triangular
from .measures import (
    CumulativeMeasure,
    LinguisticScale,
    UncertainSatisfaction,
    ValidationError,
    cumulative,
    cumulative_problems,
    validate,
)
from .owa import Quantifier, WeightVector, importance_weights, quantifier_weights

REFERENCE_TOL = 5e-4


@dataclass(frozen=True)
class DecisionProblem:
    scale: LinguisticScale
    criteria: tuple[str, ...]
    quantifier: Quantifier
    alternatives: Mapping[str, Mapping[str, UncertainSatisfaction]]
    importances: tuple[float, ...] | None = None  # aligned with ``criteria``
    ranking: str = "centroid"
    grid: int = DEFAULT_GRID
    tnorm: str = "minimum"
    # expected aggregates to cross-check, keyed by alternative
    reference: Mapping[str, tuple[float, ...]] = field(default_factory=dict)
    reference_tol: float = REFERENCE_TOL
    notes: tuple[str, ...] = ()

    def diagnostics(self) -> list[str]:
        out = []
        n = len(self.scale)
        if not self.criteria:
            out.append("no criteria declared")
        if len(set(self.criteria)) != len(self.criteria):
            out.append("criterion names must be unique")
        if not self.alternatives:
            out.append("no alternatives declared")
        if self.importances is not None:
            if len(self.importances) != len(self.criteria):
                out.append(f"{len(self.importances)} importances for {len(self.criteria)} criteria")
            elif any(lam < 0 for lam in self.importances) or sum(self.importances) <= 0:
                out.append("importances must be nonnegative with a positive sum")
        if self.ranking not in RANKINGS:
            out.append(f"unknown ranking {self.ranking!r}; expected one of {', '.join(RANKINGS)}")
        if self.tnorm not in TNORMS:
            out.append(f"unknown t-norm {self.tnorm!r}; expected one of {', '.join(TNORMS)}")
        if self.grid < 2:
            out.append("grid must have at least 2 points")
        for name, sats in self.alternatives.items():
            missing = [c for c in self.criteria if c not in sats]
            extra = [c for c in sats if c not in self.criteria]
            if missing:
                out.append(f"alternatives.{name}: missing criteria {missing}")
            if extra:
                out.append(f"alternatives.{name}: undeclared criteria {extra}")
            for crit in self.criteria:
                if crit in sats:
                    out.extend(f"alternatives.{name}.{crit}: {msg}" for msg in validate(sats[crit], n))
        for name, values in self.reference.items():
            if name not in self.alternatives:
                out.append(f"reference.{name}: unknown alternative")
            elif len(values) != n:
                out.append(f"reference.{name}: {len(values)} values for a scale of {n}")
        return out

    def check(self) -> None:
        problems = self.diagnostics()
        if problems:
            raise ValidationError(problems)


@dataclass(frozen=True)
class AlternativeScore:
    name: str
    aggregate: CumulativeMeasure
    surrogate: TriangularFuzzyNumber
    centroid: float
    criterion_ordering: CriterionOrdering
    weights: WeightVector
    criteria: tuple[str, ...]
    cumulative_rows: tuple[CumulativeMeasure, ...]  # declaration order
    delta_rows: tuple[tuple[float, ...], ...]
    criterion_surrogates: tuple[TriangularFuzzyNumber, ...]

    @property
    def ordered_criteria(self) -> tuple[str, ...]:
        return tuple(self.criteria[i] for i in self.criterion_ordering.order)

    def to_dict(self) -> dict[str, Any]:
        ordering = self.criterion_ordering
        return {
            "name": self.name,
            "aggregate": list(self.aggregate.values),
            "aggregate_delta": list(delta_weights(self.aggregate)),
            "surrogate": list(self.surrogate.as_tuple()),
            "centroid": self.centroid,
            "criterion_order": list(self.ordered_criteria),
            "criterion_method": ordering.method,
            "weights": list(self.weights),
            "trace": {
                "criteria": list(self.criteria),
                "cumulative": {c: list(row.values) for c, row in zip(self.criteria, self.cumulative_rows)},
                "delta": {c: list(row) for c, row in zip(self.criteria, self.delta_rows)},
                "criterion_surrogates": {
                    c: list(s.as_tuple()) for c, s in zip(self.criteria, self.criterion_surrogates)
                },
            },
        }


@dataclass(frozen=True)
class RankingReport:
    ranking: tuple[AlternativeScore, ...]  # best first
    comparison_method: str
    warnings: tuple[str, ...] = ()
    ranking_strategy: str = "centroid"
    scale_labels: tuple[str, ...] = ()

    @property
    def best(self) -> AlternativeScore:
        return self.ranking[0]

    def to_dict(self) -> dict[str, Any]:
        return {
            "comparison_method": self.comparison_method,
            "ranking_strategy": self.ranking_strategy,
            "scale": list(self.scale_labels),
            "order": [s.name for s in self.ranking],
            "alternatives": [s.to_dict() for s in self.ranking],
            "warnings": list(self.warnings),
        }


def score_alternative(problem: DecisionProblem, alternative: str) -> AlternativeScore:
    if alternative not in problem.alternatives:
        raise KeyError(f"unknown alternative {alternative!r}")
    problem.check()
    n = len(problem.scale)
    sats = problem.alternatives[alternative]
    rows = tuple(cumulative(sats[c], n) for c in problem.criteria)

    # canonical pre-order so ties never depend on declaration order
    canon = sorted(range(len(rows)), key=lambda i: (tuple(-v for v in rows[i]), i))
    inner = order_criteria(
        [rows[i] for i in canon], problem.scale, problem.ranking, problem.grid, problem.tnorm
    )
    surrogates = None
    if inner.surrogates is not None:
        surrogates = [None] * len(rows)
        for pos, i in enumerate(canon):
            surrogates[i] = inner.surrogates[pos]
        surrogates = tuple(surrogates)
    ordering = CriterionOrdering(tuple(canon[i] for i in inner.order), inner.method, surrogates)

    if problem.importances is None:
        weights = quantifier_weights(problem.quantifier, len(rows))
    else:
        weights = importance_weights(
            problem.quantifier, [problem.importances[i] for i in ordering.order]
        )
    aggregate = aggregate_measure([rows[i] for i in ordering.order], weights)
    fuzzy = surrogate(aggregate, problem.scale)
    return AlternativeScore(
        name=alternative,
        aggregate=aggregate,
        surrogate=fuzzy,
        centroid=centroid_triangular(fuzzy).x0,
        criterion_ordering=ordering,
        weights=weights,
        criteria=tuple(problem.criteria),
        cumulative_rows=rows,
        delta_rows=tuple(delta_weights(r) for r in rows),
        criterion_surrogates=surrogates or tuple(surrogate(r, problem.scale) for r in rows),
    )


def rank_alternatives(problem: DecisionProblem) -> RankingReport:
    """Rank all alternatives, best first.

    Dominance decides when every pair of aggregated measures is comparable;
    otherwise every alternative is ordered through its surrogate.  Ties go
    to the alphabetically first name.
    """
    if not problem.alternatives:
        raise ValidationError(["no alternatives declared"])
    problem.check()
    names = sorted(problem.alternatives)
    scores = [score_alternative(problem, name) for name in names]
    order = dominance_order([s.aggregate for s in scores])
    method = "dominance"
    if order is None:
        method = "surrogate"
        order = rank_fuzzy([s.surrogate for s in scores], problem.ranking, problem.grid, problem.tnorm)
    return RankingReport(
        ranking=tuple(scores[i] for i in order),
        comparison_method=method,
        warnings=tuple(reference_warnings(problem, scores)),
        ranking_strategy=problem.ranking,
        scale_labels=problem.scale.labels,
    )


def reference_warnings(problem: DecisionProblem, scores: Sequence[AlternativeScore]) -> list[str]:
    """Flag supplied reference aggregates that disagree with the computation."""
    out = []
    by_name = {s.name: s for s in scores}
    for name, ref in problem.reference.items():
        if name not in by_name:
            continue
        computed = by_name[name].aggregate.values
        off = [j for j, (r, c) in enumerate(zip(ref, computed), start=1) if abs(r - c) > problem.reference_tol]
        if not off:
            continue
        msg = (
            f"alternative {name!r}: reference aggregate ({_fmt(ref)}) disagrees with the computed "
            f"aggregate ({_fmt(computed)}) at " + ", ".join(f"H{j}" for j in off)
        )
        problems = cumulative_problems(ref)
        if problems:
            msg += "; the reference is not a valid cumulative measure: " + "; ".join(problems)
        out.append(msg)
    return out


def _fmt(values: Sequence[float]) -> str:
    return ", ".join(f"{v:.6g}" for v in values)

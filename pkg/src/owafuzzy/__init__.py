"""OWA aggregation of multi-criteria decisions with mixed uncertain fuzzy satisfactions."""

from .dominance import (
    CriterionOrdering,
    Dominance,
    aggregate_measure,
    delta_weights,
    dominates,
    order_criteria,
    surrogate,
)
from .fuzzy_numbers import (
    Centroid,
    GeneralizedFuzzyNumber,
    Relation,
    SampledMembership,
    TriangularFuzzyNumber,
    centroid_generalized,
    centroid_triangular,
    inclusion_index,
    lattice_max,
    lattice_min,
    rank_centroid,
    rank_lattice_ini,
)
from .measures import (
    Certain,
    CumulativeMeasure,
    Interval,
    LinguisticScale,
    Possibility,
    Probability,
    ValidationError,
    cumulative,
    measure_of_subset,
    validate,
)
from .owa import PiecewiseLinear, Power, WeightVector, importance_weights, owa_aggregate, quantifier_weights
from .pipeline import AlternativeScore, DecisionProblem, RankingReport, rank_alternatives, score_alternative
from .specfile import SpecError, dump_spec, parse_spec

__version__ = "0.1.0"

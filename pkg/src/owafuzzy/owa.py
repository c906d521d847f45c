"""OWA aggregation and quantifier-guided weight generation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

WEIGHT_TOL = 1e-9


@dataclass(frozen=True)
class WeightVector:
    """Position weights: ``weights[0]`` multiplies the largest argument."""

    weights: tuple[float, ...]

    def __post_init__(self) -> None:
        weights = tuple(float(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValueError("weight vector is empty")
        for j, w in enumerate(weights, start=1):
            if not 0.0 <= w <= 1.0:
                raise ValueError(f"weight w{j}={w:g} outside [0,1]")
        total = math.fsum(weights)
        if abs(total - 1.0) > WEIGHT_TOL:
            raise ValueError(f"weights sum to {total:g}, not 1")

    def __len__(self) -> int:
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __getitem__(self, j: int) -> float:
        return self.weights[j]


@dataclass(frozen=True)
class Power:
    """Regular quantifier ``Q(z) = z ** exponent``; exponent 2 reads as "most"."""

    exponent: float

    def __post_init__(self) -> None:
        if not self.exponent > 0:
            raise ValueError(f"power quantifier exponent must be positive, got {self.exponent}")

    def __call__(self, z: float) -> float:
        return float(z) ** self.exponent

    def exact(self, z: Fraction) -> Fraction | None:
        if float(self.exponent).is_integer():
            return z ** int(self.exponent)
        return None

    def describe(self) -> str:
        return f"power:{self.exponent:g}"


@dataclass(frozen=True)
class PiecewiseLinear:
    """Quantifier interpolated linearly between ``(z, Q(z))`` knots."""

    knots: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        knots = tuple((float(z), float(q)) for z, q in self.knots)
        object.__setattr__(self, "knots", knots)
        problems = []
        if len(knots) < 2:
            problems.append("need at least two knots")
        else:
            if knots[0] != (0.0, 0.0):
                problems.append(f"first knot must be (0, 0), got {knots[0]}")
            if knots[-1] != (1.0, 1.0):
                problems.append(f"last knot must be (1, 1), got {knots[-1]}")
            for (z0, q0), (z1, q1) in zip(knots, knots[1:]):
                if not z1 > z0:
                    problems.append(f"knot abscissae must increase strictly ({z0:g} then {z1:g})")
                if q1 < q0:
                    problems.append(f"quantifier decreases between z={z0:g} and z={z1:g}")
        if problems:
            raise ValueError("; ".join(problems))

    def __call__(self, z: float) -> float:
        return float(self.exact(Fraction(z)))

    def exact(self, z: Fraction) -> Fraction:
        knots = [(Fraction(a), Fraction(b)) for a, b in self.knots]
        z = min(max(z, Fraction(0)), Fraction(1))
        for (z0, q0), (z1, q1) in zip(knots, knots[1:]):
            if z <= z1:
                return q0 + (q1 - q0) * (z - z0) / (z1 - z0)
        return Fraction(1)

    def describe(self) -> str:
        return "knots:" + ";".join(f"{z:g},{q:g}" for z, q in self.knots)


Quantifier = Union[Power, PiecewiseLinear]


def parse_quantifier(text: str) -> Quantifier:
    """Parse ``power:<alpha>`` or ``knots:z,q;z,q;...``."""
    kind, _, body = text.partition(":")
    kind = kind.strip().lower()
    if kind == "power":
        try:
            return Power(float(body))
        except ValueError as exc:
            raise ValueError(f"bad power quantifier {text!r}: {exc}") from None
    if kind == "knots":
        try:
            pairs = [tuple(float(v) for v in item.split(",")) for item in body.split(";") if item.strip()]
        except ValueError:
            raise ValueError(f"bad knot list {text!r}") from None
        if any(len(p) != 2 for p in pairs):
            raise ValueError(f"each knot needs exactly two numbers: {text!r}")
        return PiecewiseLinear(tuple(pairs))
    raise ValueError(f"unknown quantifier {text!r}; use power:<alpha> or knots:z,q;...")


def _q_at(Q: Quantifier, z: Fraction) -> Fraction | float:
    exact = Q.exact(z)
    return exact if exact is not None else Q(float(z))


def _differences(Q: Quantifier, points: Sequence[Fraction]) -> WeightVector:
    values = [_q_at(Q, z) for z in points]
    weights = [float(hi - lo) for lo, hi in zip(values, values[1:])]
    # float quantifiers can wobble below zero by an ulp
    return WeightVector(tuple(max(w, 0.0) for w in weights))


def quantifier_weights(Q: Quantifier, q: int) -> WeightVector:
    """``w_j = Q(j/q) - Q((j-1)/q)`` for ``j = 1..q``."""
    if q < 1:
        raise ValueError("argument count must be at least 1")
    return _differences(Q, [Fraction(j, q) for j in range(q + 1)])


def importance_weights(Q: Quantifier, lambdas_in_rank_order: Sequence[float]) -> WeightVector:
    """Weights from importances already permuted into argument rank order.

    ``w_j = Q(S_j) - Q(S_{j-1})`` where ``S_j`` is the normalised running
    sum of the first ``j`` importances.
    """
    lambdas = [Fraction(lam) for lam in lambdas_in_rank_order]
    if not lambdas:
        raise ValueError("no importances given")
    if any(lam < 0 for lam in lambdas):
        raise ValueError("importances must be nonnegative")
    total = sum(lambdas)
    if total <= 0:
        raise ValueError("importances are all zero")
    prefix = [Fraction(0)]
    for lam in lambdas:
        prefix.append(prefix[-1] + lam / total)
    return _differences(Q, prefix)


def owa_aggregate(values: Sequence[float], weights: WeightVector | Sequence[float]) -> float:
    if not isinstance(weights, WeightVector):
        weights = WeightVector(tuple(weights))
    if len(values) != len(weights):
        raise ValueError(f"{len(values)} values but {len(weights)} weights")
    ordered = sorted(values, reverse=True)
    return math.fsum(w * b for w, b in zip(weights, ordered))

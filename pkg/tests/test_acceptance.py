"""Exit criteria for the build, one test per criterion.

Run ``pytest tests/test_acceptance.py`` for a PASS/FAIL line per criterion
in the terminal summary.
"""

import io
import json
import time
from fractions import Fraction

import numpy as np
import pytest

from conftest import C1, C2, C3
from owafuzzy.cli import example_path, main
from owafuzzy.dominance import (
    Dominance,
    aggregate_measure,
    delta_weights,
    dominates,
    order_criteria,
    surrogate,
)
from owafuzzy.fuzzy_numbers import (
    SampledMembership,
    TriangularFuzzyNumber as T,
    centroid_triangular,
    inclusion_index,
    lattice_max,
    lattice_min,
    membership,
    support_grid,
)
from owafuzzy.measures import (
    Certain,
    CumulativeMeasure,
    Interval,
    LinguisticScale,
    Possibility,
    Probability,
    cumulative,
)
from owafuzzy.owa import Power, WeightVector, owa_aggregate, quantifier_weights

TABLE_1 = {
    "mu1": (0.0, 0.2, 0.7, 0.9, 1.0),
    "mu2": (0.4, 0.4, 0.6, 0.8, 1.0),
    "mu3": (0.0, 0.0, 0.0, 1.0, 1.0),
}
TABLE_2 = {
    "mu1": (0.0, 0.2, 0.5, 0.2, 0.1),
    "mu2": (0.4, 0.0, 0.2, 0.2, 0.2),
    "mu3": (0.0, 0.0, 0.0, 1.0, 0.0),
}
CASES = 1000


def _report(criterion, detail):
    print(f"criterion {criterion}: {detail}")


def test_criterion_1_quantifier_weights():
    timings = []
    for _ in range(5):
        start = time.perf_counter()
        w = quantifier_weights(Power(2), 3)
        timings.append(time.perf_counter() - start)
    assert tuple(w) == (1 / 9, 3 / 9, 5 / 9)
    assert tuple(w) == pytest.approx((0.11, 0.33, 0.56), abs=0.005)
    assert min(timings) < 1e-3
    _report(1, f"weights {tuple(w)} in {min(timings) * 1e6:.0f} us")


def test_criterion_2_cumulative_measures():
    got = {"mu1": cumulative(C1, 5), "mu2": cumulative(C2, 5), "mu3": cumulative(C3, 5)}
    for key, expected in TABLE_1.items():
        assert np.max(np.abs(np.array(got[key].values) - expected)) <= 1e-12
    _report(2, "cumulative rows match to 1e-12")


def test_criterion_3_delta_weights():
    for key, expected in TABLE_2.items():
        got = delta_weights(CumulativeMeasure(TABLE_1[key]))
        assert np.max(np.abs(np.array(got) - expected)) <= 1e-12
    _report(3, "increment rows match to 1e-12")


def test_criterion_4_surrogates(worked_scale):
    expected = {
        "mu1": ((0.225, 0.45, 0.7), 0.458),
        "mu2": ((0.35, 0.55, 0.7), 0.533),
        "mu3": ((0.0, 0.25, 0.5), 0.25),
    }
    centroids = {}
    for key, (triple, x0) in expected.items():
        m = surrogate(CumulativeMeasure(TABLE_1[key]), worked_scale)
        assert np.max(np.abs(np.array(m.as_tuple()) - triple)) <= 1e-12
        centroids[key] = centroid_triangular(m).x0
        assert abs(centroids[key] - x0) <= 1e-3
    assert centroids["mu2"] > centroids["mu1"] > centroids["mu3"]
    ordering = order_criteria([CumulativeMeasure(TABLE_1[k]) for k in ("mu1", "mu2", "mu3")], worked_scale)
    assert ordering.order == (1, 0, 2) and ordering.method == "surrogate"
    _report(4, f"centroids {centroids}")


def test_criterion_5_aggregate_measure():
    # independent oracle: exact rational convex combination, rank order (mu2, mu1, mu3)
    w = [Fraction(1, 9), Fraction(3, 9), Fraction(5, 9)]
    rows = [[Fraction(str(v)) for v in TABLE_1[k]] for k in ("mu2", "mu1", "mu3")]
    oracle = [float(sum(wi * row[j] for wi, row in zip(w, rows))) for j in range(5)]
    assert oracle == pytest.approx([0.0444, 0.1111, 0.3000, 0.9444, 1.0], abs=1e-4)

    got = aggregate_measure([CumulativeMeasure(TABLE_1[k]) for k in ("mu2", "mu1", "mu3")], quantifier_weights(Power(2), 3))
    assert np.max(np.abs(np.array(got.values) - oracle)) <= 1e-4
    assert np.max(np.abs(np.array(got.values) - [0.0444, 0.1111, 0.3000, 0.9444, 1.0])) <= 1e-4
    _report(5, f"aggregate {got.values}")


# --- criterion 6 helpers ---------------------------------------------------------


def _random_weights(rng, q):
    w = rng.random(q)
    w /= w.sum()
    w[-1] = max(0.0, 1.0 - w[:-1].sum())
    return WeightVector(tuple(w))


def _random_measure(rng, n):
    return CumulativeMeasure((*np.sort(rng.random(n - 1)), 1.0))


def _random_satisfaction(rng, n):
    kind = rng.integers(4)
    if kind == 0:
        p = rng.random(n)
        p /= p.sum()
        return Probability(tuple(p))
    if kind == 1:
        t = rng.random(n)
        t[rng.integers(n)] = 1.0
        return Possibility(tuple(t))
    if kind == 2:
        lo = int(rng.integers(1, n + 1))
        return Interval(lo, int(rng.integers(lo, n + 1)))
    return Certain(int(rng.integers(1, n + 1)))


def _random_scale(rng, n):
    modes = np.sort(rng.uniform(0.05, 0.95, n))[::-1]
    if np.any(-np.diff(modes) < 1e-6):
        modes = np.linspace(0.95, 0.05, n)
    # symmetric legs keep centroids on the modes, hence strictly ordered
    legs = rng.uniform(0, 0.05, n)
    values = [(m - leg, m, m + leg) for m, leg in zip(modes, legs)]
    return LinguisticScale(tuple(f"g{j}" for j in range(n)), tuple(values))


def _random_triangle(rng):
    return T(*np.sort(rng.random(3)))


def _is_measure(mu):
    v = np.array(mu.values)
    return np.all(np.diff(v) >= -1e-12) and abs(v[-1] - 1.0) <= 1e-9 and np.all((v >= -1e-12) & (v <= 1 + 1e-9))


def _owa_properties(rng):
    for _ in range(CASES):
        q = int(rng.integers(1, 9))
        w = _random_weights(rng, q)
        a = rng.random(q)
        b = np.minimum(1.0, a + rng.random(q) * rng.integers(0, 2, q))
        assert owa_aggregate(a, w) <= owa_aggregate(b, w) + 1e-12  # monotonicity
        assert owa_aggregate(rng.permutation(a), w) == pytest.approx(owa_aggregate(a, w), abs=1e-15)
        assert a.min() - 1e-12 <= owa_aggregate(a, w) <= a.max() + 1e-12
        const = float(rng.random())
        assert owa_aggregate([const] * q, w) == pytest.approx(const, abs=1e-12)
        top = [1.0] + [0.0] * (q - 1)
        assert owa_aggregate(a, top) == a.max()
        assert owa_aggregate(a, top[::-1]) == a.min()
        assert owa_aggregate(a, [1 / q] * q) == pytest.approx(a.mean(), abs=1e-12)


def _measure_closure(rng):
    for _ in range(CASES):
        n = int(rng.integers(2, 9))
        rows = [cumulative(_random_satisfaction(rng, n), n) for _ in range(int(rng.integers(1, 6)))]
        assert all(_is_measure(r) for r in rows)
        assert _is_measure(aggregate_measure(rows, _random_weights(rng, len(rows))))


def _surrogate_properties(rng):
    for _ in range(CASES):
        n = int(rng.integers(2, 8))
        sc = _random_scale(rng, n)
        k = int(rng.integers(1, n + 1))
        assert surrogate(cumulative(Certain(k), n), sc) == sc[k]
        b = _random_measure(rng, n)
        a = CumulativeMeasure(tuple(np.maximum(b.values, _random_measure(rng, n).values)))
        if dominates(a, b) is Dominance.FIRST_DOMINATES:
            assert centroid_triangular(surrogate(a, sc)).x0 >= centroid_triangular(surrogate(b, sc)).x0 - 1e-12


def _dominance_properties(rng):
    flip = {
        Dominance.FIRST_DOMINATES: Dominance.SECOND_DOMINATES,
        Dominance.SECOND_DOMINATES: Dominance.FIRST_DOMINATES,
        Dominance.EQUAL: Dominance.EQUAL,
        Dominance.INCOMPARABLE: Dominance.INCOMPARABLE,
    }
    for _ in range(CASES):
        n = int(rng.integers(2, 7))
        c = _random_measure(rng, n)
        b = CumulativeMeasure(tuple(np.maximum(c.values, _random_measure(rng, n).values)))
        a = CumulativeMeasure(tuple(np.maximum(b.values, _random_measure(rng, n).values)))
        for x, y in ((a, b), (b, c), (a, c), (c, _random_measure(rng, n))):
            assert dominates(y, x) is flip[dominates(x, y)]
        if dominates(a, b) is Dominance.FIRST_DOMINATES and dominates(b, c) is Dominance.FIRST_DOMINATES:
            assert dominates(a, c) is Dominance.FIRST_DOMINATES


def _lattice_properties(rng):
    for _ in range(CASES):
        A, B = _random_triangle(rng), _random_triangle(rng)
        xs = support_grid((A, B))
        assert lattice_min(A, A, xs).equals(SampledMembership.of(A, xs))
        assert lattice_max(A, A, xs).equals(SampledMembership.of(A, xs))
        assert lattice_min(A, B, xs).equals(lattice_min(B, A, xs))
        assert lattice_max(A, B, xs).equals(lattice_max(B, A, xs))
        lo, gap = sorted(rng.random(2) * 0.5)
        left = T(*np.sort(rng.uniform(0, lo, 3)))
        right = T(*np.sort(rng.uniform(lo + gap, 1.0, 3)))
        xs = support_grid((left, right))
        assert np.array_equal(lattice_min(left, right, xs).degrees, SampledMembership.of(left, xs).degrees)
        assert np.array_equal(lattice_max(right, left, xs).degrees, SampledMembership.of(right, xs).degrees)


def _inclusion_properties(rng):
    xs = np.linspace(0, 1, 1001)
    for _ in range(CASES):
        e = SampledMembership.of(_random_triangle(rng), xs)
        f = SampledMembership.of(_random_triangle(rng), xs)
        if not e.degrees.any():
            continue
        assert inclusion_index(e, e) == 1.0
        assert 0.0 <= inclusion_index(e, f) <= 1.0
        assert 0.0 <= inclusion_index(e, f, "product") <= 1.0


def test_criterion_6_property_suites():
    rng = np.random.default_rng(20180601)
    start = time.perf_counter()
    suites = [
        _owa_properties,
        _measure_closure,
        _surrogate_properties,
        _dominance_properties,
        _lattice_properties,
        _inclusion_properties,
    ]
    for suite in suites:
        suite(rng)
    elapsed = time.perf_counter() - start
    assert elapsed < 60
    _report(6, f"{len(suites)} suites x {CASES} cases in {elapsed:.1f} s")


def _max_slope(*fns):
    slopes = [1.0 / w for fn in fns for w in (fn.b - fn.a, fn.c - fn.b) if w > 0]
    return max(slopes, default=np.inf)


def _supmin(A, B, xs, op):
    mu_a = np.array([membership(A, x) for x in xs])
    mu_b = np.array([membership(B, y) for y in xs])
    idx = np.arange(xs.size)
    z = np.minimum.outer(idx, idx) if op == "min" else np.maximum.outer(idx, idx)
    out = np.zeros(xs.size)
    np.maximum.at(out, z.ravel(), np.minimum.outer(mu_a, mu_b).ravel())
    return out


def test_criterion_7_lattice_oracle_equivalence():
    rng = np.random.default_rng(7)
    worst = 0.0
    for _ in range(100):
        A, B = _random_triangle(rng), _random_triangle(rng)
        xs = support_grid((A, B), 1001)
        tol = 2 * (xs[1] - xs[0]) * _max_slope(A, B)
        for op, fn in (("min", lattice_min), ("max", lattice_max)):
            err = np.max(np.abs(fn(A, B, xs).degrees - _supmin(A, B, xs, op)))
            assert err <= tol
            worst = max(worst, err / tol)
    _report(7, f"worst error / tolerance = {worst:.3f}")


def test_criterion_8_end_to_end():
    out, err = io.StringIO(), io.StringIO()
    start = time.perf_counter()
    code = main(["rank", example_path(), "--format", "json"], out=out, err=err)
    elapsed = time.perf_counter() - start
    assert code == 0, err.getvalue()
    report = json.loads(out.getvalue())
    (alt,) = report["alternatives"]
    assert alt["criterion_order"] == ["C2", "C1", "C3"]
    assert alt["criterion_method"] == "surrogate"
    assert any("reference aggregate" in w and "not a valid cumulative measure" in w for w in report["warnings"])
    assert elapsed < 0.1

    text = io.StringIO()
    assert main(["rank", example_path()], out=text, err=io.StringIO()) == 0
    assert "C2 > C1 > C3 (surrogate)" in text.getvalue()
    _report(8, f"rank in {elapsed * 1e3:.1f} ms")

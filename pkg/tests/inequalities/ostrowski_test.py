import math
from typing import Iterator, Tuple

import numpy as np
import pytest

from fracostrowski.errors import DegenerateIntervalError, DomainError, UnknownTheoremError
from fracostrowski.functions.catalog import (
    FixtureNames,
    FunctionNames,
    catalog,
    get_test_function
)
from fracostrowski.functions.convexity import is_harmonically_s_convex
from fracostrowski.inequalities.ostrowski import (
    BoundIds,
    DerivMagnitudes,
    Interval,
    Params,
    applicable_bound_ids,
    bound_thm22,
    bound_thm23,
    bound_thm24,
    bound_thm25,
    bound_thm26,
    corollary_bound,
    evaluate_all_bounds,
    get_bound_function,
    hh_fractional_check,
    identity_residual,
    s_f,
    s_f_rhs
)
from fracostrowski.numerics.coefficients import moment_ts


IDENTITY_TOLERANCE = 1e-8

ALL_BOUNDS = [bound_thm22, bound_thm23, bound_thm24, bound_thm25, bound_thm26]


def _random_interval(rng: np.random.Generator, margin: float = 0.05) -> Interval:
    a = rng.uniform(0.5, 5)
    b = a + rng.uniform(0.5, 10 - a)
    x = a + (b - a) * rng.uniform(margin, 1 - margin)
    return Interval(a=float(a), b=float(b), x=float(x))


def _random_params(rng: np.random.Generator) -> Params:
    q = 1.0 if rng.uniform() < 0.25 else rng.uniform(1.2, 4)
    return Params(
        alpha=float(rng.uniform(0.1, 3)),
        s=float(1 - rng.uniform(0, 1)),
        q=float(q)
    )


def _random_conjugate_params(rng: np.random.Generator) -> Params:
    return Params(
        alpha=float(rng.uniform(0.1, 3)),
        s=float(1 - rng.uniform(0, 1)),
        q=float(rng.uniform(1.2, 4))
    )


def _random_cases(seed: int, count: int) -> Iterator[Tuple[Interval, Params]]:
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield _random_interval(rng), _random_params(rng)


class TestInterval:
    def test_should_reject_degenerate_interval(self):
        with pytest.raises(DegenerateIntervalError):
            Interval(a=1, b=1, x=1)

    @pytest.mark.parametrize('a, b, x', [(0, 1, 0.5), (1, 2, 2.5), (1, 2, 0.5), (2, 1, 1.5)])
    def test_should_reject_inadmissible_interval(self, a, b, x):
        with pytest.raises(DomainError):
            Interval(a=a, b=b, x=x)

    def test_should_accept_end_points(self):
        assert not Interval(a=1, b=2, x=1).has_left_side
        assert not Interval(a=1, b=2, x=2).has_right_side


class TestParams:
    def test_should_compute_hoelder_conjugate(self):
        assert Params(alpha=1, s=1, q=2).p == 2
        assert Params(alpha=1, s=1, q=3).p == pytest.approx(1.5)

    def test_should_not_define_conjugate_for_q_one(self):
        assert Params(alpha=1, s=1, q=1).p is None

    def test_should_reject_mismatched_conjugate(self):
        with pytest.raises(DomainError):
            Params(alpha=1, s=1, q=2, p=3)

    @pytest.mark.parametrize('alpha, s, q', [(0, 1, 1), (1, 0, 1), (1, 1.5, 1), (1, 1, 0.5)])
    def test_should_reject_invalid_params(self, alpha, s, q):
        with pytest.raises(DomainError):
            Params(alpha=alpha, s=s, q=q)


class TestDerivMagnitudes:
    def test_should_evaluate_absolute_derivative(self):
        d = DerivMagnitudes.from_function(
            get_test_function(FunctionNames.NEG_LOG), Interval(a=1, b=4, x=2)
        )
        assert d == DerivMagnitudes(at_a=1, at_b=0.25, at_x=0.5)

    def test_should_reject_negative_values(self):
        with pytest.raises(DomainError):
            DerivMagnitudes(at_a=-1, at_b=0, at_x=0)


class TestSF:
    @pytest.mark.parametrize('alpha', [0.1, 0.5, 1, 2.5])
    def test_should_vanish_for_constant_function(self, alpha):
        fn = get_test_function(FixtureNames.CONSTANT)
        assert s_f(fn, Interval(a=1, b=3, x=1.7), alpha) == pytest.approx(0, abs=1e-12)

    def test_should_match_classical_closed_form_for_order_one(self):
        fn = get_test_function(FunctionNames.IDENTITY)
        assert s_f(fn, Interval(a=1, b=2, x=1.5), 1) == pytest.approx(
            0.5 * (1.5 - 2 * math.log(2)), rel=1e-10
        )

    def test_should_match_integral_side_for_identity(self):
        fn = get_test_function(FunctionNames.IDENTITY)
        iv = Interval(a=1, b=2, x=1.5)
        assert s_f(fn, iv, 0.5) == pytest.approx(s_f_rhs(fn, iv, 0.5), rel=1e-8)

    def test_should_reject_non_positive_order(self):
        with pytest.raises(DomainError):
            s_f(get_test_function(FunctionNames.IDENTITY), Interval(a=1, b=2, x=1.5), 0)


class TestSFRhs:
    def test_should_vanish_for_zero_derivative(self):
        fn = get_test_function(FixtureNames.CONSTANT)
        assert s_f_rhs(fn, Interval(a=1, b=3, x=2), 0.7) == 0.0

    def test_should_keep_only_right_side_at_left_end_point(self):
        fn = get_test_function(FunctionNames.QUADRATIC)
        iv = Interval(a=1, b=3, x=1)
        assert s_f_rhs(fn, iv, 0.8) == pytest.approx(s_f(fn, iv, 0.8), rel=1e-8)

    def test_should_match_functional_for_quadratic(self):
        fn = get_test_function(FunctionNames.QUADRATIC)
        iv = Interval(a=1, b=3, x=2)
        assert s_f_rhs(fn, iv, 1.25) == pytest.approx(s_f(fn, iv, 1.25), rel=1e-8)


class TestIdentityResidual:
    def test_should_vanish_for_constant_function(self):
        fn = get_test_function(FixtureNames.CONSTANT)
        assert identity_residual(fn, Interval(a=0.5, b=4, x=1), 1.3) <= 1e-12

    def test_should_detect_corrupted_derivative(self):
        fn = get_test_function(FixtureNames.CORRUPTED_DERIVATIVE)
        assert identity_residual(fn, Interval(a=1, b=3, x=2), 0.5) > IDENTITY_TOLERANCE

    @pytest.mark.parametrize('fn', catalog(), ids=str)
    def test_should_hold_for_order_one(self, fn):
        assert identity_residual(fn, Interval(a=0.8, b=5, x=2.2), 1) <= 1e-9

    @pytest.mark.slow
    @pytest.mark.parametrize('fn', catalog(), ids=str)
    def test_should_hold_for_random_cases(self, fn):
        rng = np.random.default_rng(2022)
        for _ in range(100):
            iv = _random_interval(rng)
            alpha = float(rng.uniform(0.1, 3))
            assert identity_residual(fn, iv, alpha) <= IDENTITY_TOLERANCE, (iv, alpha)


class TestBounds:
    @pytest.mark.parametrize('bound', ALL_BOUNDS)
    def test_should_vanish_for_zero_derivative(self, bound):
        iv, pr = Interval(a=1, b=3, x=2), Params(alpha=0.7, s=0.5, q=2)
        assert bound(DerivMagnitudes.uniform(0), iv, pr) == 0.0

    @pytest.mark.parametrize('bound', ALL_BOUNDS)
    def test_should_drop_left_side_at_left_end_point(self, bound):
        iv, pr = Interval(a=1, b=3, x=1), Params(alpha=0.7, s=0.5, q=2)
        small = DerivMagnitudes(at_a=0.1, at_b=1, at_x=1)
        large = DerivMagnitudes(at_a=100, at_b=1, at_x=1)
        assert bound(small, iv, pr) == bound(large, iv, pr)
        assert bound(small, iv, pr) > 0

    @pytest.mark.parametrize('bound', ALL_BOUNDS)
    def test_should_drop_right_side_at_right_end_point(self, bound):
        iv, pr = Interval(a=1, b=3, x=3), Params(alpha=1.4, s=1, q=3)
        small = DerivMagnitudes(at_a=1, at_b=0.1, at_x=1)
        large = DerivMagnitudes(at_a=1, at_b=100, at_x=1)
        assert bound(small, iv, pr) == bound(large, iv, pr)

    @pytest.mark.parametrize('bound', [bound_thm25, bound_thm26])
    def test_should_require_conjugate(self, bound):
        with pytest.raises(DomainError):
            bound(DerivMagnitudes.uniform(1), Interval(a=1, b=2, x=1.5), Params(1, 1, 1))

    def test_should_coincide_for_q_one(self):
        d = DerivMagnitudes(at_a=0.3, at_b=2, at_x=1.1)
        for iv, pr in _random_cases(seed=7, count=20):
            pr = Params(alpha=pr.alpha, s=pr.s, q=1)
            b22 = bound_thm22(d, iv, pr)
            assert bound_thm23(d, iv, pr) == pytest.approx(b22, rel=1e-12)
            assert bound_thm24(d, iv, pr) == pytest.approx(b22, rel=1e-12)

    def test_should_match_hoelder_factor_quadrature(self):
        iv, pr = Interval(a=1, b=3, x=1.8), Params(alpha=0.6, s=1, q=2.5)
        p = pr.p
        left = (iv.x - iv.a) ** (pr.alpha + 1) / (iv.a * iv.x) ** (pr.alpha - 1)
        right = (iv.b - iv.x) ** (pr.alpha + 1) / (iv.b * iv.x) ** (pr.alpha - 1)
        expected = (
            left * moment_ts(iv.a, iv.x, 0, p, pr.alpha * p) ** (1 / p)
            + right * moment_ts(iv.b, iv.x, 0, p, pr.alpha * p) ** (1 / p)
        )
        assert bound_thm26(DerivMagnitudes.uniform(1), iv, pr) == pytest.approx(
            expected, rel=1e-9
        )


class TestCorollaryBound:
    @pytest.mark.parametrize('theorem_id', BoundIds.ALL)
    def test_should_vanish_for_zero_m(self, theorem_id):
        assert corollary_bound(
            theorem_id, 0, Interval(a=1, b=2, x=1.5), Params(alpha=0.5, s=1, q=2)
        ) == 0.0

    @pytest.mark.parametrize('theorem_id', BoundIds.ALL)
    def test_should_equal_theorem_bound_with_uniform_derivative(self, theorem_id):
        rng = np.random.default_rng(11)
        for _ in range(25):
            iv, pr = _random_interval(rng), _random_conjugate_params(rng)
            m = float(rng.uniform(0.1, 5))
            assert corollary_bound(theorem_id, m, iv, pr) == pytest.approx(
                get_bound_function(theorem_id)(DerivMagnitudes.uniform(m), iv, pr),
                rel=1e-12
            )

    def test_should_raise_unknown_theorem_error(self):
        with pytest.raises(UnknownTheoremError):
            corollary_bound('b27', 1, Interval(a=1, b=2, x=1.5), Params(alpha=1, s=1, q=2))

    def test_should_reject_negative_m(self):
        with pytest.raises(DomainError):
            corollary_bound(
                BoundIds.B22, -1, Interval(a=1, b=2, x=1.5), Params(alpha=1, s=1, q=2)
            )


class TestEvaluateAllBounds:
    def test_should_report_no_violation_for_constant_function(self):
        report = evaluate_all_bounds(
            get_test_function(FixtureNames.CONSTANT),
            Interval(a=1, b=2, x=1.5), Params(alpha=0.5, s=1, q=2)
        )
        assert report.abs_sf == pytest.approx(0, abs=1e-12)
        assert all(bound >= 0 for bound in report.bounds.values())
        assert report.violations == ()

    def test_should_report_no_violation_for_neg_log(self):
        report = evaluate_all_bounds(
            get_test_function(FunctionNames.NEG_LOG),
            Interval(a=1, b=2, x=1.5), Params(alpha=0.5, s=1, q=2)
        )
        assert report.violations == ()
        assert set(report.bounds.keys()) == set(BoundIds.ALL)
        assert report.tightest == min(report.bounds, key=report.bounds.get)

    def test_should_omit_hoelder_bounds_for_q_one(self):
        report = evaluate_all_bounds(
            get_test_function(FunctionNames.NEG_LOG),
            Interval(a=1, b=2, x=1.5), Params(alpha=0.5, s=1, q=1)
        )
        assert list(report.bounds.keys()) == [BoundIds.B22, BoundIds.B23, BoundIds.B24]
        assert report.b25 is None
        assert report.b26 is None
        assert applicable_bound_ids(Params(alpha=0.5, s=1, q=1)) == tuple(report.bounds)

    def test_should_resolve_ties_to_lowest_theorem(self):
        # the first three bounds coincide at q = 1
        report = evaluate_all_bounds(
            get_test_function(FunctionNames.IDENTITY),
            Interval(a=1, b=2, x=1.5), Params(alpha=0.5, s=1, q=1)
        )
        assert report.tightest == BoundIds.B22

    def test_should_report_violation_for_corrupted_derivative(self):
        report = evaluate_all_bounds(
            get_test_function(FixtureNames.CORRUPTED_DERIVATIVE),
            Interval(a=1, b=3, x=1.2), Params(alpha=1, s=1, q=1)
        )
        assert report.has_violations

    @pytest.mark.slow
    @pytest.mark.parametrize('fn', catalog(), ids=str)
    def test_should_not_violate_bounds_for_certified_corpus(self, fn):
        for iv, pr in _random_cases(seed=sum(map(ord, fn.name)), count=200):
            report = evaluate_all_bounds(fn, iv, pr)
            assert report.violations == (), (iv, pr, report)


class TestHermiteHadamardCheck:
    def test_should_collapse_for_constant_function(self):
        triple = hh_fractional_check(get_test_function(FixtureNames.CONSTANT), 1, 3, 0.6)
        assert triple.left == 1
        assert triple.middle == pytest.approx(1, rel=1e-12)
        assert triple.right == 1

    def test_should_match_closed_form_for_order_one(self):
        triple = hh_fractional_check(get_test_function(FunctionNames.IDENTITY), 1, 2, 1)
        assert triple.left == pytest.approx(4 / 3)
        assert triple.middle == pytest.approx(2 * math.log(2), rel=1e-10)
        assert triple.right == 1.5
        assert triple.is_ordered()

    def test_should_reject_reversed_interval(self):
        with pytest.raises(DomainError):
            hh_fractional_check(get_test_function(FunctionNames.IDENTITY), 2, 1, 1)

    @pytest.mark.slow
    def test_should_order_harmonically_convex_corpus(self):
        rng = np.random.default_rng(5)
        checked = 0
        for _ in range(200):
            a = float(rng.uniform(0.5, 5))
            b = float(a + rng.uniform(0.1, 10 - a))
            alpha = float(rng.uniform(0.1, 3))
            for fn in catalog():
                if not is_harmonically_s_convex(fn.f, a, b, 1, grid_density=32).passed:
                    continue
                triple = hh_fractional_check(fn, a, b, alpha)
                assert triple.is_ordered(slack=1e-10 * max(1, abs(triple.right))), (
                    fn, a, b, alpha, triple
                )
                checked += 1
        assert checked >= 600

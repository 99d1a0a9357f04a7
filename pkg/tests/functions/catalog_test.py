import numpy as np
import pytest

from fracostrowski.errors import UnknownFunctionError
from fracostrowski.functions.catalog import (
    FixtureNames,
    FunctionNames,
    catalog,
    get_function_names,
    get_test_function
)


DERIVATIVE_CHECK_POINTS = np.linspace(0.5, 10, 20)


class TestCatalog:
    def test_should_contain_named_functions(self):
        assert get_function_names() == [
            FunctionNames.IDENTITY,
            FunctionNames.NEG_LOG,
            FunctionNames.QUADRATIC,
            FunctionNames.RECIPROCAL,
            FunctionNames.EXPONENTIAL
        ]

    def test_should_not_contain_fixtures(self):
        assert FixtureNames.NEG_IDENTITY not in get_function_names()
        assert FixtureNames.NEG_IDENTITY in get_function_names(include_fixtures=True)

    @pytest.mark.parametrize('fn', catalog(), ids=str)
    def test_should_have_consistent_derivative(self, fn):
        assert fn.has_consistent_derivative(DERIVATIVE_CHECK_POINTS)

    @pytest.mark.parametrize('fn', catalog(), ids=str)
    def test_should_carry_analytic_certificate(self, fn):
        assert fn.analytic_certificate

    @pytest.mark.parametrize('fn', catalog(), ids=str)
    def test_should_evaluate_arrays(self, fn):
        values = fn.fprime(DERIVATIVE_CHECK_POINTS)
        assert np.shape(values) == DERIVATIVE_CHECK_POINTS.shape


class TestFixtures:
    def test_should_detect_corrupted_derivative(self):
        fn = get_test_function(FixtureNames.CORRUPTED_DERIVATIVE)
        assert not fn.has_consistent_derivative([1.0, 2.0])

    def test_should_have_zero_derivative_for_constant(self):
        fn = get_test_function(FixtureNames.CONSTANT)
        assert fn.fprime(2.0) == 0.0
        assert fn.has_consistent_derivative(DERIVATIVE_CHECK_POINTS)

    def test_should_use_certification_target_for_neg_identity(self):
        fn = get_test_function(FixtureNames.NEG_IDENTITY)
        assert fn.derivative_power(2)(np.asarray([1.5])).tolist() == [-1.5]


class TestGetTestFunction:
    def test_should_resolve_by_name(self):
        assert get_test_function(FunctionNames.NEG_LOG).name == FunctionNames.NEG_LOG

    def test_should_raise_unknown_function_error(self):
        with pytest.raises(UnknownFunctionError) as exc_info:
            get_test_function('unknown')
        assert exc_info.value.function_name == 'unknown'
        assert FunctionNames.IDENTITY in exc_info.value.available

    def test_should_not_resolve_fixtures_if_excluded(self):
        with pytest.raises(UnknownFunctionError):
            get_test_function(FixtureNames.NEG_IDENTITY, include_fixtures=False)

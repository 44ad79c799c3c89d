import random

import pytest

from conftest import random_monomial_ideal, squarefree_veronese
from hdx.crosscheck import max_nonnegative_power
from hdx.depth import hdepth_from_series, hdepth_squarefree
from hdx.intpoly import IntPolynomial, series_div
from hdx.lexify import HilbertFunctionView, ideal_view

P = IntPolynomial


def test_fixture_values():
    assert max_nonnegative_power(HilbertFunctionView(P([0, 0, 5, -5, 0, 1]), 3)) == 2
    assert max_nonnegative_power(HilbertFunctionView(P([0, 1]), 1)) == 1
    assert max_nonnegative_power(HilbertFunctionView(P([0, 5, -10, 10, -5, 1]), 5)) == 3


def test_monotonicity_below_answer():
    rng = random.Random(83)
    for _ in range(25):
        n = rng.randint(1, 6)
        ideal = random_monomial_ideal(rng, n, 4, 4)
        view = ideal_view(ideal)
        p = max_nonnegative_power(view)
        trunc = view.numerator.degree + n + 1
        for smaller in range(p + 1):
            expansion = series_div(view.numerator, n - smaller, trunc)
            assert all(c >= 0 for c in expansion.coeffs)


def test_agreement_with_depth_routes():
    rng = random.Random(89)
    for _ in range(25):
        n = rng.randint(1, 6)
        ideal = random_monomial_ideal(rng, n, 4, 4)
        view = ideal_view(ideal)
        assert max_nonnegative_power(view) == hdepth_from_series(view).hdepth
    for n in range(2, 9):
        for d in range(1, n + 1):
            ideal = squarefree_veronese(n, d)
            view = ideal_view(ideal)
            assert max_nonnegative_power(view) == hdepth_squarefree(ideal).hdepth


def test_zero_series():
    assert max_nonnegative_power(HilbertFunctionView(P(), 4)) == 4


def test_trunc_extra_validation():
    view = HilbertFunctionView(P([0, 1]), 1)
    with pytest.raises(ValueError):
        max_nonnegative_power(view, trunc_extra=0)
    assert max_nonnegative_power(view, trunc_extra=3) == 1

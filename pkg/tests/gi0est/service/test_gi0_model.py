import math

import numpy as np
import pytest
from scipy import stats

from gi0est.domain.gi0_params import Gi0Params
from gi0est.domain.integration_spec import IntegrationSpec
from gi0est.misc.domain_error import DomainError
from gi0est.service.gi0_model import (INFINITE, digamma_fn, gi0_cdf, gi0_log_pdf, gi0_moment, gi0_pdf,
                                      gi0_pdf_function, gi0_quantile, log_gamma_fn, tail_diagnostics, unit_mean_params,
                                      unit_mean_scale)
from gi0est.service.stochastic_distance import integrate_adaptive

ALPHAS = [-1.5, -3.0, -5.0]
LOOKS = [1.0, 3.0, 8.0]


def betaprime_oracle(params):
    # L Z / gamma follows a beta prime law with shapes (L, -alpha)
    return stats.betaprime(params.looks, -params.alpha, scale=params.gamma / params.looks)


@pytest.mark.parametrize("x,expected", [
    (1.0, 0.0),
    (2.0, 0.0),
    (0.5, math.log(math.sqrt(math.pi))),
    (10.0, math.log(362880.0)),
])
def test_log_gamma_fn(x, expected):
    assert log_gamma_fn(x) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("x,expected", [
    (1.0, -0.5772156649015329),
    (3.0, 0.9227843350984671),
])
def test_digamma_fn(x, expected):
    assert digamma_fn(x) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("function", [log_gamma_fn, digamma_fn])
@pytest.mark.parametrize("x", [0.0, -1.0])
def test_special_functions_reject_nonpositive(function, x):
    with pytest.raises(DomainError):
        function(x)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("looks", LOOKS)
def test_gi0_pdf_matches_beta_prime(alpha, looks):
    params = unit_mean_params(alpha, looks)
    z = np.array([0.01, 0.3, 1.0, 2.5, 40.0])
    np.testing.assert_allclose(gi0_pdf(z, params), betaprime_oracle(params).pdf(z), rtol=1e-9)
    np.testing.assert_allclose(gi0_cdf(z, params), betaprime_oracle(params).cdf(z), rtol=1e-9)


def test_gi0_pdf_example_value():
    # L=1, alpha=-3, gamma=2: f(1) = 3 * 2^3 / (2 + 1)^4
    assert gi0_pdf(1.0, Gi0Params(-3.0, 2.0, 1.0)) == pytest.approx(24.0 / 81.0, rel=1e-12)


def test_gi0_log_pdf_stays_finite_far_in_the_tail():
    params = unit_mean_params(-5.0, 8.0)
    log_density = gi0_log_pdf(np.array([1e-300, 1e300]), params)
    assert np.all(np.isfinite(log_density))


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("looks", LOOKS)
def test_gi0_pdf_integrates_to_one(alpha, looks):
    params = unit_mean_params(alpha, looks)
    density = gi0_pdf_function(params)
    breakpoints = [gi0_quantile(u, params) for u in (0.001, 0.01, 0.5, 0.99, 0.9999)]
    spec = IntegrationSpec(0.0, math.inf, breakpoints=breakpoints)
    value, _ = integrate_adaptive(density, spec)
    assert value == pytest.approx(1.0, abs=1e-6)


def test_gi0_pdf_function_agrees_with_gi0_pdf():
    params = unit_mean_params(-3.0, 3.0)
    density = gi0_pdf_function(params)
    for z in [0.001, 0.5, 1.0, 7.0]:
        assert density(z) == pytest.approx(float(gi0_pdf(z, params)), rel=1e-12)
    assert density(0.0) == 0.0
    assert density(-1.0) == 0.0


@pytest.mark.parametrize("u", [1e-6, 0.1, 0.5, 0.9, 1 - 1e-7])
def test_gi0_quantile_inverts_cdf(u):
    params = unit_mean_params(-3.0, 3.0)
    assert float(gi0_cdf(gi0_quantile(u, params), params)) == pytest.approx(u, rel=1e-8, abs=1e-12)


@pytest.mark.parametrize("u", [0.0, 1.0, -0.5])
def test_gi0_quantile_rejects_probabilities_outside_unit_interval(u):
    with pytest.raises(DomainError):
        gi0_quantile(u, unit_mean_params(-3.0, 1.0))


def test_gi0_cdf_is_monotone():
    params = unit_mean_params(-1.5, 1.0)
    cdf = gi0_cdf(np.logspace(-6, 6, 200), params)
    assert np.all(np.diff(cdf) >= 0)
    assert 0 <= cdf[0] and cdf[-1] <= 1


@pytest.mark.parametrize("r,params,expected", [
    (1, Gi0Params(-3.0, 2.0, 3.0), 1.0),
    (2, Gi0Params(-3.0, 2.0, 3.0), 8.0 / 3.0),
    (0.5, Gi0Params(-3.0, 2.0, 1.0), 3.0 * math.pi * math.sqrt(2.0) / 16.0),
    (3, Gi0Params(-3.0, 2.0, 3.0), INFINITE),
    (2, Gi0Params(-1.5, 0.5, 1.0), INFINITE),
])
def test_gi0_moment(r, params, expected):
    moment = gi0_moment(r, params)
    if math.isinf(expected):
        assert math.isinf(moment)
    else:
        assert moment == pytest.approx(expected, rel=1e-6)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("looks", LOOKS)
def test_unit_mean_convention_gives_mean_one(alpha, looks):
    assert gi0_moment(1, unit_mean_params(alpha, looks)) == pytest.approx(1.0, rel=1e-12)


@pytest.mark.parametrize("alpha,expected", [(-3.0, 2.0), (-1.5, 0.5), (-20.0, 19.0)])
def test_unit_mean_scale(alpha, expected):
    assert unit_mean_scale(alpha) == expected


@pytest.mark.parametrize("alpha", [-1.0, -0.5, 0.0])
def test_unit_mean_scale_rejects_alpha_above_minus_one(alpha):
    with pytest.raises(DomainError):
        unit_mean_scale(alpha)


@pytest.mark.parametrize("params", [
    Gi0Params(0.5, 1.0, 1.0),
    Gi0Params(-3.0, 0.0, 1.0),
    Gi0Params(-3.0, 2.0, 0.5),
    Gi0Params(-3.0, math.nan, 1.0),
])
def test_invalid_params_are_rejected(params):
    with pytest.raises(DomainError):
        gi0_pdf(1.0, params)


@pytest.mark.parametrize("z", [0.0, -1.0])
def test_gi0_pdf_rejects_nonpositive_z(z):
    with pytest.raises(DomainError):
        gi0_pdf(z, unit_mean_params(-3.0, 1.0))


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("looks", LOOKS)
def test_tail_slope_approaches_alpha_minus_one(alpha, looks):
    report = tail_diagnostics(unit_mean_params(alpha, looks))
    assert report.tail_index == 1.0 - alpha
    assert report.slope_estimate == pytest.approx(alpha - 1.0, abs=1e-3)
    assert report.abscissae == (1e6, 1e8)


def test_tail_is_heavier_for_alpha_closer_to_minus_one():
    # survival at a large abscissa ranks by roughness
    z = 1e4
    survivals = [1.0 - float(gi0_cdf(z, unit_mean_params(alpha, 1.0))) for alpha in ALPHAS]
    assert survivals[0] > survivals[1] > survivals[2]


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("looks", LOOKS)
def test_gi0_is_outlier_prone(alpha, looks):
    params = unit_mean_params(alpha, looks)
    x = np.array([1e3, 1e4, 1e5, 1e6])
    ratios = np.exp(gi0_log_pdf(x + 1.0, params) - gi0_log_pdf(x, params))
    assert np.all(np.diff(ratios) > 0)
    assert ratios[-1] > 0.9
    assert np.all(ratios < 1.0)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("looks", LOOKS)
def test_gi0_tail_is_slowly_varying(alpha, looks):
    # l(x) = f(x) x^(1 - alpha)
    params = unit_mean_params(alpha, looks)
    x = 1e8
    log_ratio = float(gi0_log_pdf(2.0 * x, params) - gi0_log_pdf(x, params)) + (1.0 - alpha) * math.log(2.0)
    assert 0.999 <= math.exp(log_ratio) <= 1.001


def test_digamma_recurrence():
    x = np.linspace(0.1, 100.0, 100)
    np.testing.assert_allclose(digamma_fn(x + 1.0) - digamma_fn(x), 1.0 / x, rtol=0, atol=1e-12)


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("looks", LOOKS)
@pytest.mark.parametrize("z", [0.5, 1.0, 5.0])
def test_gi0_cdf_differentiates_to_gi0_pdf(alpha, looks, z):
    params = unit_mean_params(alpha, looks)
    h = 1e-5
    derivative = float(gi0_cdf(z + h, params) - gi0_cdf(z - h, params)) / (2.0 * h)
    assert derivative == pytest.approx(float(gi0_pdf(z, params)), abs=1e-6)

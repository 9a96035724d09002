"""Closed-form mathematics of the G_I^0 intensity law.

The density with roughness alpha < 0, scale gamma > 0 and L >= 1 looks is

    f(z) = L^L Gamma(L - alpha) gamma^(-alpha) z^(L-1) / (Gamma(-alpha) Gamma(L) (gamma + L z)^(L - alpha))

Everything is accumulated in log domain and exponentiated last.
"""

import math

import numpy as np
from scipy import special

from gi0est.domain.gi0_params import Gi0Params
from gi0est.domain.tail_report import TailReport
from gi0est.misc.domain_error import DomainError

INFINITE = math.inf


def log_gamma_fn(x):
    if np.any(np.asarray(x) <= 0):
        raise DomainError('log_gamma_fn is defined for x > 0, got {}'.format(x))
    return special.gammaln(x)


def digamma_fn(x):
    if np.any(np.asarray(x) <= 0):
        raise DomainError('digamma_fn is defined for x > 0, got {}'.format(x))
    return special.digamma(x)


def validate_params(params):
    if not (params.alpha < 0 and params.gamma > 0 and params.looks >= 1):
        raise DomainError('Invalid G_I^0 parameters {}: need alpha < 0, gamma > 0, looks >= 1'.format(params))
    for value in (params.alpha, params.gamma, params.looks):
        if not math.isfinite(value):
            raise DomainError('Invalid G_I^0 parameters {}: values must be finite'.format(params))


def unit_mean_scale(alpha):
    if not alpha < -1:
        raise DomainError('The unit-mean scale -alpha-1 needs alpha < -1, got {}'.format(alpha))
    return -alpha - 1.0


def unit_mean_params(alpha, looks):
    return Gi0Params(alpha, unit_mean_scale(alpha), looks)


def gi0_log_normalizer(params):
    """log of L^L Gamma(L-alpha) gamma^(-alpha) / (Gamma(-alpha) Gamma(L))."""
    alpha, gamma, looks = params.alpha, params.gamma, params.looks
    return looks * math.log(looks) + special.gammaln(looks - alpha) - alpha * math.log(gamma) \
        - special.gammaln(-alpha) - special.gammaln(looks)


def gi0_log_pdf(z, params):
    validate_params(params)
    z = _check_positive(z, 'gi0_log_pdf')
    alpha, gamma, looks = params.alpha, params.gamma, params.looks
    return gi0_log_normalizer(params) + special.xlogy(looks - 1.0, z) + (alpha - looks) * np.log(gamma + looks * z)


def gi0_pdf(z, params):
    return np.exp(gi0_log_pdf(z, params))


def gi0_pdf_function(params):
    """Scalar density t -> f(t) with the normalizer computed once, 0 for t <= 0."""
    validate_params(params)
    log_normalizer = gi0_log_normalizer(params)
    alpha, gamma, looks = params.alpha, params.gamma, params.looks

    def density(t):
        if t <= 0:
            return 0.0
        return math.exp(log_normalizer + (looks - 1.0) * math.log(t) + (alpha - looks) * math.log(gamma + looks * t))

    return density


def gi0_log_likelihood(values, params):
    return float(np.sum(gi0_log_pdf(values, params)))


def gi0_cdf(z, params):
    """Regularized incomplete beta ratio I_x(L, -alpha) at x = Lz / (Lz + gamma)."""
    validate_params(params)
    z = _check_positive(z, 'gi0_cdf')
    looks_z = params.looks * z
    return special.betainc(params.looks, -params.alpha, looks_z / (looks_z + params.gamma))


def gi0_quantile(u, params):
    validate_params(params)
    if not 0 < u < 1:
        raise DomainError('gi0_quantile needs 0 < u < 1, got {}'.format(u))
    # 1 - x from the mirrored ratio keeps precision in the far tail
    one_minus_x = special.betaincinv(-params.alpha, params.looks, 1.0 - u)
    return params.gamma * (1.0 - one_minus_x) / (params.looks * one_minus_x)


def gi0_moment(r, params):
    """E(Z^r), or INFINITE when alpha >= -r."""
    validate_params(params)
    if not r > 0:
        raise DomainError('Moment order must be positive, got {}'.format(r))
    alpha, gamma, looks = params.alpha, params.gamma, params.looks
    if alpha >= -r:
        return INFINITE
    log_moment = r * math.log(gamma / looks) + special.gammaln(-alpha - r) - special.gammaln(-alpha) \
        + special.gammaln(looks + r) - special.gammaln(looks)
    return math.exp(log_moment)


def tail_diagnostics(params, x_lo=1e6, x_hi=1e8):
    validate_params(params)
    if not 0 < x_lo < x_hi:
        raise DomainError('tail_diagnostics needs 0 < x_lo < x_hi')
    log_f_lo, log_f_hi = gi0_log_pdf(np.array([x_lo, x_hi]), params)
    slope = (log_f_hi - log_f_lo) / (math.log(x_hi) - math.log(x_lo))
    return TailReport(tail_index=1.0 - params.alpha, slope_estimate=float(slope), abscissae=(x_lo, x_hi))


def _check_positive(z, name):
    z = np.asarray(z, dtype=np.float64)
    if np.any(~(z > 0)):
        raise DomainError('{} is defined for z > 0'.format(name))
    return z if z.ndim > 0 else float(z)

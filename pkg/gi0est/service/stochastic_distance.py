import logging
import math

import numpy as np
from scipy import integrate

from gi0est.domain.distance_value import DistanceValue
from gi0est.domain.integration_spec import IntegrationSpec
from gi0est.misc.non_convergence_error import NonConvergenceError
from gi0est.service.gi0_model import gi0_quantile

TRIANGULAR_DISTANCE_BOUND = 2.0
TAIL_PROBABILITY = 1e-7
SAMPLE_MAX_FACTOR = 10.0
BREAKPOINT_PERCENTILES = [0, 5, 10, 25, 50, 75, 90, 95, 100]
MODEL_BREAKPOINT_PROBABILITIES = [0.01, 0.5, 0.99]

logger = logging.getLogger('StochasticDistance')


def integrate_adaptive(f, spec):
    value, est_abs_error, _ = integrate_adaptive_counted(f, spec)
    return value, est_abs_error


def integrate_adaptive_counted(f, spec):
    """Adaptive Gauss-Kronrod quadrature of f over [spec.lower, spec.upper].

    Break points split the range so narrow features are not stepped over. A semi-infinite
    tail is mapped onto a finite interval by QUADPACK. Returns (value, est_abs_error, evaluations).
    """
    _validate_spec(spec)
    pieces = []
    finite_upper = spec.upper
    if spec.is_semi_infinite:
        finite_upper = max(spec.breakpoints) if spec.breakpoints else None

    tail_start = spec.lower
    if finite_upper is not None and finite_upper > spec.lower:
        inner = sorted(set(p for p in spec.breakpoints if spec.lower < p < finite_upper))
        pieces.append(_quad(f, spec.lower, finite_upper, spec, points=inner or None))
        tail_start = finite_upper
    if spec.is_semi_infinite:
        pieces.append(_quad(f, tail_start, math.inf, spec))

    value = sum(piece[0] for piece in pieces)
    est_abs_error = sum(piece[1] for piece in pieces)
    evaluations = sum(piece[2] for piece in pieces)
    return value, est_abs_error, evaluations


def triangular_distance(f, g, spec):
    """Integral of (f - g)^2 / (f + g), taken as 0 wherever f + g = 0."""

    def integrand(t):
        f_t = f(t)
        g_t = g(t)
        total = f_t + g_t
        if total <= 0 or not math.isfinite(total):
            return 0.0
        difference = f_t - g_t
        return difference * difference / total

    value, est_abs_error, evaluations = integrate_adaptive_counted(integrand, spec)
    if value > TRIANGULAR_DISTANCE_BOUND and value - TRIANGULAR_DISTANCE_BOUND <= est_abs_error:
        value = TRIANGULAR_DISTANCE_BOUND
    elif value < 0 and -value <= est_abs_error:
        value = 0.0
    elif not 0 <= value <= TRIANGULAR_DISTANCE_BOUND:
        logger.warning('Triangular distance {} is outside [0, 2] beyond its error estimate {}'.format(
            value, est_abs_error))
    return DistanceValue(value=value, est_abs_error=est_abs_error, evaluations=evaluations)


def default_domain(sample, params, rel_tol=1e-8, abs_tol=1e-10, max_subdivisions=2000):
    values = sample.values
    sample_max = float(np.max(values))
    upper = max(SAMPLE_MAX_FACTOR * sample_max, gi0_quantile(1.0 - TAIL_PROBABILITY, params))
    breakpoints = [float(p) for p in np.percentile(values, BREAKPOINT_PERCENTILES)]
    breakpoints.append(2.0 * sample_max)
    # the model mass can sit far from the sample, e.g. near 0 when alpha approaches -1
    breakpoints.extend(gi0_quantile(u, params) for u in MODEL_BREAKPOINT_PROBABILITIES)
    breakpoints = sorted(set(p for p in breakpoints if 0 < p < upper))
    return IntegrationSpec(
        lower=0.0,
        upper=upper,
        rel_tol=rel_tol,
        abs_tol=abs_tol,
        max_subdivisions=max_subdivisions,
        breakpoints=breakpoints)


def _quad(f, lower, upper, spec, points=None):
    limit = max(spec.max_subdivisions, 2 * len(points) + 2 if points else 0)
    result = integrate.quad(
        f, lower, upper, epsabs=spec.abs_tol, epsrel=spec.rel_tol, limit=limit, points=points, full_output=1)
    value, est_abs_error, info = result[0], result[1], result[2]
    if len(result) > 3:
        tolerance = max(spec.abs_tol, spec.rel_tol * abs(value))
        if est_abs_error > 10 * tolerance:
            raise NonConvergenceError(
                'Quadrature over [{}, {}] did not converge: {}'.format(lower, upper, result[3]),
                value=value, est_abs_error=est_abs_error)
        logger.debug('Quadrature over [{}, {}] stopped early with an acceptable error: {}'.format(
            lower, upper, result[3]))
    return value, est_abs_error, info['neval']


def _validate_spec(spec):
    if not spec.lower < spec.upper:
        raise ValueError('Integration range needs lower < upper, got {}'.format(spec))
    if not (spec.rel_tol > 0 and spec.abs_tol > 0 and spec.max_subdivisions > 0):
        raise ValueError('Integration tolerances and subdivision count must be positive, got {}'.format(spec))

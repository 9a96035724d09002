"""Estimators of the roughness alpha under the unit-mean convention gamma = -alpha - 1.

ML, 1/2-moment and log-cumulant solve an estimating equation by bracketed root finding on
the search range. The Triangular estimator minimises the triangular distance between the
model density and an asymmetric-kernel density estimate of the sample.
"""

import logging
import math
import time

import numpy as np
from scipy import optimize, special

from gi0est.domain.estimate_outcome import EstimateOutcome
from gi0est.domain.search_range import DEFAULT_SEARCH_RANGE
from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.enumeration.kernel_type import KernelType
from gi0est.enumeration.outcome_status import OutcomeStatus
from gi0est.misc.non_convergence_error import NonConvergenceError
from gi0est.service.density_estimation import build_density_estimate, kde_evaluate
from gi0est.service.gi0_model import gi0_log_likelihood, gi0_pdf_function, unit_mean_params
from gi0est.service.stochastic_distance import default_domain, triangular_distance

ROOT_XTOL = 1e-12
SCAN_POINTS = 21

logger = logging.getLogger('Gi0Estimators')


def ml_score(alpha, values, looks):
    """Derivative of the mean unit-mean log-likelihood with respect to alpha."""
    gamma = -alpha - 1.0
    shifted = gamma + looks * values
    return special.digamma(-alpha) - special.digamma(looks - alpha) - math.log(gamma) + alpha / gamma \
        + np.mean(np.log(shifted)) - (alpha - looks) * np.mean(1.0 / shifted)


def half_moment(alpha, looks):
    """E(Z^(1/2)) of the unit-mean law."""
    return math.sqrt((-alpha - 1.0) / looks) * math.exp(
        special.gammaln(-alpha - 0.5) - special.gammaln(-alpha) + special.gammaln(looks + 0.5) - special.gammaln(looks))


def mom12_residual(alpha, mean_sqrt, looks):
    return mean_sqrt - half_moment(alpha, looks)


def first_log_cumulant(alpha, looks):
    """E(log Z) of the unit-mean law."""
    return -math.log(looks / (-alpha - 1.0)) + special.digamma(looks) - special.digamma(-alpha)


def logcum_residual(alpha, mean_log, looks):
    return mean_log - first_log_cumulant(alpha, looks)


def unit_mean_log_likelihood(alpha, values, looks):
    return gi0_log_likelihood(values, unit_mean_params(alpha, looks))


class Gi0Estimators(object):
    def __init__(
            self,
            search_range=DEFAULT_SEARCH_RANGE,
            kernel=KernelType.INVERSE_GAUSSIAN,
            bandwidth=None,
            rel_tol=1e-8,
            abs_tol=1e-10,
            max_subdivisions=2000):
        self.search_range = search_range
        self.kernel = kernel
        self.bandwidth = bandwidth
        self.rel_tol = rel_tol
        self.abs_tol = abs_tol
        self.max_subdivisions = max_subdivisions

    def estimate(self, sample, looks, estimator):
        handler = {
            EstimatorType.ML: self.estimate_ml,
            EstimatorType.MOM12: self.estimate_mom12,
            EstimatorType.LOG_CUMULANT: self.estimate_logcum,
            EstimatorType.TRIANGULAR: self.estimate_triangular,
        }.get(estimator)
        if handler is None:
            raise ValueError('Unknown estimator {}, expected one of {}'.format(estimator, EstimatorType.ALL))
        start = time.perf_counter()
        outcome = handler(sample, looks)
        outcome.elapsed = time.perf_counter() - start
        return outcome

    def estimate_all(self, sample, looks):
        return [self.estimate(sample, looks, estimator) for estimator in EstimatorType.ALL]

    def estimate_ml(self, sample, looks):
        values = sample.values
        if values.size < 2 or np.all(values == values[0]):
            return EstimateOutcome(EstimatorType.ML, OutcomeStatus.DEGENERATE_SAMPLE)

        outcome = self._solve(EstimatorType.ML, lambda alpha: ml_score(alpha, values, looks))
        if outcome.status != OutcomeStatus.NO_SIGN_CHANGE:
            if outcome.converged:
                outcome.objective_value = unit_mean_log_likelihood(outcome.alpha_hat, values, looks)
            return outcome

        # No bracket on the score: maximise the likelihood and accept interior maximisers only.
        search_range = self.search_range
        result = optimize.minimize_scalar(
            lambda alpha: -unit_mean_log_likelihood(alpha, values, looks),
            bounds=(search_range.lo, search_range.hi),
            method='bounded',
            options={'xatol': search_range.tol_alpha})
        alpha = float(result.x)
        interior = alpha - search_range.lo >= search_range.tol_alpha and search_range.hi - alpha >= search_range.tol_alpha
        if not (result.success and interior):
            logger.debug('ML likelihood maximiser {} lies on the search boundary'.format(alpha))
            return EstimateOutcome(EstimatorType.ML, OutcomeStatus.NO_SIGN_CHANGE, objective_value=-float(result.fun),
                                   iterations=int(result.nfev))
        return EstimateOutcome(EstimatorType.ML, OutcomeStatus.CONVERGED, alpha_hat=alpha,
                               objective_value=-float(result.fun), iterations=int(result.nfev))

    def estimate_mom12(self, sample, looks):
        mean_sqrt = float(np.mean(np.sqrt(sample.values)))
        return self._solve(EstimatorType.MOM12, lambda alpha: mom12_residual(alpha, mean_sqrt, looks))

    def estimate_logcum(self, sample, looks):
        mean_log = float(np.mean(np.log(sample.values)))
        if not math.isfinite(mean_log):
            return EstimateOutcome(EstimatorType.LOG_CUMULANT, OutcomeStatus.DEGENERATE_SAMPLE)
        return self._solve(EstimatorType.LOG_CUMULANT, lambda alpha: logcum_residual(alpha, mean_log, looks))

    def estimate_triangular(self, sample, looks):
        density_estimate = build_density_estimate(sample, self.kernel, self.bandwidth)
        cache = {}

        def kde(t):
            value = cache.get(t)
            if value is None:
                value = kde_evaluate(density_estimate, t)
                cache[t] = value
            return value

        return self.minimize_triangular(
            kde, looks,
            lambda params: default_domain(sample, params, self.rel_tol, self.abs_tol, self.max_subdivisions))

    def minimize_triangular(self, empirical_density, looks, domain_factory):
        """argmin over the search range of the triangular distance to empirical_density.

        A 21-point scan picks the best bracketing interval, then a bounded golden-section
        search refines it to tol_alpha. The argmin over a closed range always exists, so the
        outcome is converged; boundary minimisers are flagged.
        """
        search_range = self.search_range

        def objective(alpha):
            params = unit_mean_params(alpha, looks)
            return triangular_distance(gi0_pdf_function(params), empirical_density, domain_factory(params)).value

        try:
            grid = np.linspace(search_range.lo, search_range.hi, SCAN_POINTS)
            scan = [objective(alpha) for alpha in grid]
            best = int(np.argmin(scan))
            result = optimize.minimize_scalar(
                objective,
                bounds=(grid[max(best - 1, 0)], grid[min(best + 1, SCAN_POINTS - 1)]),
                method='bounded',
                options={'xatol': search_range.tol_alpha})
        except NonConvergenceError as e:
            logger.debug('Triangular objective failed: {}'.format(e))
            return EstimateOutcome(EstimatorType.TRIANGULAR, OutcomeStatus.MAX_ITERATIONS)

        alpha_hat, objective_value = float(result.x), float(result.fun)
        if scan[best] < objective_value:
            alpha_hat, objective_value = float(grid[best]), scan[best]
        at_boundary = alpha_hat - search_range.lo < search_range.tol_alpha or \
            search_range.hi - alpha_hat < search_range.tol_alpha
        return EstimateOutcome(EstimatorType.TRIANGULAR, OutcomeStatus.CONVERGED, alpha_hat=alpha_hat,
                               objective_value=objective_value, iterations=SCAN_POINTS + int(result.nfev),
                               at_boundary=at_boundary)

    def _solve(self, estimator, residual):
        lo, hi = self.search_range.lo, self.search_range.hi
        residual_lo, residual_hi = residual(lo), residual(hi)
        if not (math.isfinite(residual_lo) and math.isfinite(residual_hi)):
            return EstimateOutcome(estimator, OutcomeStatus.DEGENERATE_SAMPLE)
        if residual_lo == 0:
            return EstimateOutcome(estimator, OutcomeStatus.CONVERGED, alpha_hat=lo, objective_value=0.0)
        if residual_hi == 0:
            return EstimateOutcome(estimator, OutcomeStatus.CONVERGED, alpha_hat=hi, objective_value=0.0)
        if np.sign(residual_lo) == np.sign(residual_hi):
            return EstimateOutcome(estimator, OutcomeStatus.NO_SIGN_CHANGE)

        root, result = optimize.brentq(residual, lo, hi, xtol=ROOT_XTOL, full_output=True, disp=False)
        if not result.converged:
            return EstimateOutcome(estimator, OutcomeStatus.MAX_ITERATIONS, iterations=result.iterations)
        return EstimateOutcome(estimator, OutcomeStatus.CONVERGED, alpha_hat=float(root),
                               objective_value=float(residual(root)), iterations=result.iterations)


DEFAULT_ESTIMATORS = Gi0Estimators()


def estimate_ml(sample, looks):
    return DEFAULT_ESTIMATORS.estimate(sample, looks, EstimatorType.ML)


def estimate_mom12(sample, looks):
    return DEFAULT_ESTIMATORS.estimate(sample, looks, EstimatorType.MOM12)


def estimate_logcum(sample, looks):
    return DEFAULT_ESTIMATORS.estimate(sample, looks, EstimatorType.LOG_CUMULANT)


def estimate_triangular(sample, looks, kernel=KernelType.INVERSE_GAUSSIAN):
    return Gi0Estimators(kernel=kernel).estimate(sample, looks, EstimatorType.TRIANGULAR)


def estimate_all(sample, looks):
    return DEFAULT_ESTIMATORS.estimate_all(sample, looks)

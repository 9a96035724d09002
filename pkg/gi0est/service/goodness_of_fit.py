import math

import numpy as np
from scipy import stats

from gi0est.domain.ks_report import KsReport
from gi0est.enumeration.ks_status import KsStatus
from gi0est.service.gi0_estimators import DEFAULT_ESTIMATORS
from gi0est.service.gi0_model import unit_mean_params
from gi0est.service.gi0_sampler import gi0_sample

P_VALUE_METHOD = 'asymptotic Kolmogorov distribution'


def ks_statistic(x, y):
    """sup |ECDF_x - ECDF_y| with both one-sided limits checked at every pooled point."""
    x = np.sort(_values(x))
    y = np.sort(_values(y))
    if x.size == 0 or y.size == 0:
        raise ValueError('The two-sample KS test needs two nonempty samples')
    pooled = np.unique(np.concatenate([x, y]))
    gap_right = np.searchsorted(x, pooled, side='right') / x.size - np.searchsorted(y, pooled, side='right') / y.size
    gap_left = np.searchsorted(x, pooled, side='left') / x.size - np.searchsorted(y, pooled, side='left') / y.size
    return float(max(np.max(np.abs(gap_right)), np.max(np.abs(gap_left))))


def kolmogorov_p_value(statistic, n_x, n_y):
    """Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2) at lambda = D sqrt(n_x n_y / (n_x + n_y))."""
    effective = math.sqrt(n_x * n_y / float(n_x + n_y))
    p_value = float(stats.kstwobign.sf(statistic * effective))
    return min(1.0, max(0.0, p_value))


def ks_two_sample(x, y):
    statistic = ks_statistic(x, y)
    return statistic, kolmogorov_p_value(statistic, len(_values(x)), len(_values(y)))


def fit_and_test(x, looks, estimator, seed, estimators=DEFAULT_ESTIMATORS):
    """Estimate alpha on x, simulate y of the same size from the fitted law, KS-test x against y.

    A fresh sample is simulated because testing against the fitted CDF on the estimation
    sample is biased.
    """
    outcome = estimators.estimate(x, looks, estimator)
    if not outcome.converged:
        return KsReport(status=KsStatus.NOT_AVAILABLE, estimator=estimator, n_x=x.n, estimate_status=outcome.status,
                        seed=seed)
    y = gi0_sample(unit_mean_params(outcome.alpha_hat, looks), x.n, seed)
    statistic, p_value = ks_two_sample(x, y)
    return KsReport(status=KsStatus.TESTED, estimator=estimator, n_x=x.n, n_y=y.n, statistic=statistic,
                    p_value=p_value, alpha_hat=outcome.alpha_hat, estimate_status=outcome.status, seed=seed)


def _values(sample):
    return np.asarray(getattr(sample, 'values', sample), dtype=np.float64)

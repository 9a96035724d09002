import logging

import numpy as np

from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.enumeration.kernel_type import KernelType
from gi0est.misc.degenerate_sample_error import DegenerateSampleError
from gi0est.service.density_estimation import build_density_estimate, fd_histogram, histogram_evaluate, kde_grid
from gi0est.service.gi0_estimators import DEFAULT_ESTIMATORS
from gi0est.service.gi0_model import gi0_pdf, unit_mean_params

UPPER_QUANTILE = 99

logger = logging.getLogger('DensityFit')


def density_fit_points(sample, looks, points=200, model_alpha=None, estimators=DEFAULT_ESTIMATORS):
    """Model density, both kernel estimates and the histogram on points abscissae in (0, sample quantile 0.99].

    The model uses model_alpha, or the Triangular estimate of the sample when it is None. Returns
    (alpha used, rows); the model column is None when the estimate failed, the histogram column
    is None when the sample has no spread.
    """
    if points < 2:
        raise ValueError('points must be at least 2, got {}'.format(points))
    if model_alpha is None:
        outcome = estimators.estimate(sample, looks, EstimatorType.TRIANGULAR)
        model_alpha = outcome.alpha_hat
        if not outcome.converged:
            logger.warning('Triangular estimation failed with {}, the model column is NA.'.format(outcome.status))

    upper = float(np.percentile(sample.values, UPPER_QUANTILE))
    t_values = np.linspace(upper / points, upper, points)

    model = gi0_pdf(t_values, unit_mean_params(model_alpha, looks)) if model_alpha is not None else None
    kernel_densities = dict(
        (kernel, kde_grid(build_density_estimate(sample, kernel, estimators.bandwidth), t_values))
        for kernel in KernelType.ALL)
    try:
        histogram = histogram_evaluate(fd_histogram(sample), t_values)
    except DegenerateSampleError as e:
        logger.warning('No histogram column: {}'.format(e))
        histogram = None

    rows = []
    for index, t in enumerate(t_values):
        rows.append({
            't': float(t),
            'model_pdf': None if model is None else float(model[index]),
            'kde_inverse_gaussian': float(kernel_densities[KernelType.INVERSE_GAUSSIAN][index]),
            'kde_gamma': float(kernel_densities[KernelType.GAMMA][index]),
            'histogram': None if histogram is None else float(histogram[index]),
        })
    return model_alpha, rows

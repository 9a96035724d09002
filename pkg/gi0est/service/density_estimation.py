"""Asymmetric-kernel density estimation on (0, inf) and the reference histogram.

Both kernels are densities in t centred by their parameterisation at the data point z_i:

    K_IG(t; z_i, b) = (2 pi b t^3)^(-1/2) exp(-(t/z_i + z_i/t - 2) / (2 b z_i))
    K_G(t; z_i, b)  = t^(z_i/b) exp(-t/b) / (b^(z_i/b + 1) Gamma(z_i/b + 1))
"""

import math

import numpy as np
from scipy import special

from gi0est.domain.density_estimate import DensityEstimate
from gi0est.domain.histogram import Histogram
from gi0est.enumeration.kernel_type import KernelType
from gi0est.misc.degenerate_sample_error import DegenerateSampleError
from gi0est.misc.domain_error import DomainError

# Both kernels vanish at 0; below this the estimate is 0.
MIN_ABSCISSA = 1e-12


def default_bandwidth(n):
    if n < 1:
        raise ValueError('Bandwidth needs n >= 1, got {}'.format(n))
    return n ** -0.5 / 5.0


def log_kernel_ig(t, z_i, b):
    t, z_i = np.asarray(t, dtype=np.float64), np.asarray(z_i, dtype=np.float64)
    return -0.5 * np.log(2.0 * math.pi * b * t ** 3) - (t / z_i + z_i / t - 2.0) / (2.0 * b * z_i)


def log_kernel_gamma(t, z_i, b):
    t, z_i = np.asarray(t, dtype=np.float64), np.asarray(z_i, dtype=np.float64)
    shape = z_i / b
    return special.xlogy(shape, t) - t / b - (shape + 1.0) * math.log(b) - special.gammaln(shape + 1.0)


def kernel_ig(t, z_i, b):
    _check_kernel_arguments(t, z_i, b)
    return np.exp(log_kernel_ig(t, z_i, b))


def kernel_gamma(t, z_i, b):
    _check_kernel_arguments(t, z_i, b)
    return np.exp(log_kernel_gamma(t, z_i, b))


LOG_KERNELS = {
    KernelType.INVERSE_GAUSSIAN: log_kernel_ig,
    KernelType.GAMMA: log_kernel_gamma,
}


def build_density_estimate(sample, kernel=KernelType.INVERSE_GAUSSIAN, bandwidth=None):
    if kernel not in LOG_KERNELS:
        raise ValueError('Unknown kernel {}, expected one of {}'.format(kernel, KernelType.ALL))
    if bandwidth is None:
        bandwidth = default_bandwidth(sample.n)
    if not bandwidth > 0:
        raise ValueError('Bandwidth must be positive, got {}'.format(bandwidth))
    return DensityEstimate(kernel, bandwidth, sample)


def kde_evaluate(est, t):
    if not t > 0:
        raise DomainError('kde_evaluate is defined for t > 0, got {}'.format(t))
    if t < MIN_ABSCISSA:
        return 0.0
    log_kernel = LOG_KERNELS[est.kernel]
    return float(np.mean(np.exp(log_kernel(t, est.sample.values, est.bandwidth))))


def kde_grid(est, t_values, batch_size=10000):
    """kde_evaluate over an array of abscissae, in batches bounding the intermediate array size."""
    t_values = np.asarray(t_values, dtype=np.float64)
    if np.any(~(t_values > 0)):
        raise DomainError('kde_grid is defined for t > 0')
    log_kernel = LOG_KERNELS[est.kernel]
    values = est.sample.values
    result = np.zeros_like(t_values)
    rows_per_batch = max(1, batch_size // values.size)
    for start in range(0, t_values.size, rows_per_batch):
        t_batch = t_values[start:start + rows_per_batch]
        densities = np.exp(log_kernel(t_batch[:, None], values[None, :], est.bandwidth)).mean(axis=1)
        result[start:start + rows_per_batch] = np.where(t_batch < MIN_ABSCISSA, 0.0, densities)
    return result


def fd_histogram(sample):
    """Freedman-Diaconis histogram, bin width 2 IQR n^(-1/3) over [min, max].

    Quartiles use linear interpolation of the order statistics.
    """
    values = sample.values
    if values.size < 2:
        raise DegenerateSampleError('A histogram needs at least 2 values')
    q1, q3 = np.percentile(values, [25, 75])
    if q3 - q1 <= 0:
        raise DegenerateSampleError('Freedman-Diaconis bin width is 0 because the IQR is 0')
    edges = np.histogram_bin_edges(values, bins='fd')
    densities, edges = np.histogram(values, bins=edges, density=True)
    return Histogram(edges, densities)


def histogram_evaluate(histogram, t):
    t = np.asarray(t, dtype=np.float64)
    edges = histogram.bin_edges
    index = np.searchsorted(edges, t, side='right') - 1
    # the last bin is closed on the right
    index = np.where(t == edges[-1], len(histogram.densities) - 1, index)
    inside = (index >= 0) & (index < len(histogram.densities))
    return np.where(inside, histogram.densities[np.clip(index, 0, len(histogram.densities) - 1)], 0.0)


def _check_kernel_arguments(t, z_i, b):
    if np.any(~(np.asarray(t) > 0)) or np.any(~(np.asarray(z_i) > 0)) or not b > 0:
        raise DomainError('Kernel arguments t, z_i and b must be positive')

import functools
import logging

import numpy as np

from gi0est.domain.raster_image import NODATA_MARKER, RasterImage
from gi0est.domain.sample import Sample
from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.executors.batch_work_executor import BatchWorkExecutor
from gi0est.misc.config_error import ConfigError
from gi0est.service.gi0_estimators import DEFAULT_ESTIMATORS

WINDOW_SIDES = [3, 5, 7, 9, 11]

logger = logging.getLogger('RoughnessMap')


def validate_window_side(window_side):
    if window_side not in WINDOW_SIDES:
        raise ConfigError('window', 'window side must be one of {}, got {}'.format(WINDOW_SIDES, window_side))


def estimate_window(pixels, looks, estimator=EstimatorType.TRIANGULAR, estimators=DEFAULT_ESTIMATORS):
    """alpha estimate of one window, or the nodata marker when it holds nodata or estimation fails."""
    values = np.asarray(pixels, dtype=np.float64).ravel()
    if not np.all(np.isfinite(values)) or np.any(values <= 0):
        return NODATA_MARKER
    outcome = estimators.estimate(Sample(values), looks, estimator)
    return outcome.alpha_hat if outcome.converged else NODATA_MARKER


def row_bands(image, window_side):
    """[(row, band)] for every row whose window fits vertically; band holds only the rows its windows read."""
    bands = []
    for row in range(image.height):
        band = image.row_band(row, window_side)
        if band is not None:
            bands.append((row, np.array(band)))
    return bands


def estimate_bands(bands, looks, window_side, estimator=EstimatorType.TRIANGULAR, estimators=DEFAULT_ESTIMATORS):
    """[(row, band)] -> [(row, alpha estimates along the row)]"""
    half = window_side // 2
    estimated = []
    for row, band in bands:
        band_image = RasterImage(band.shape[1], band.shape[0], band)
        line = np.full(band_image.width, NODATA_MARKER)
        for column in range(band_image.width):
            window = band_image.window(half, column, window_side)
            if window is not None:
                line[column] = estimate_window(window, looks, estimator, estimators)
        estimated.append((row, line))
    return estimated


def roughness_map(image, looks, window_side=11, estimator=EstimatorType.TRIANGULAR, estimators=DEFAULT_ESTIMATORS,
                  parallelism=1, use_processes=False):
    """Sliding-window alpha map with the dimensions of image; pixels whose window leaves the image are nodata."""
    validate_window_side(window_side)
    if estimator not in EstimatorType.ALL:
        raise ConfigError('estimator', 'unknown estimator {}, expected one of {}'.format(estimator, EstimatorType.ALL))
    if not looks >= 1:
        raise ConfigError('looks', 'looks must be >= 1')

    pixels = np.full((image.height, image.width), NODATA_MARKER)

    def collect(batch_results):
        for row, line in batch_results:
            pixels[row, :] = line

    # work items carry their own band, never the whole image
    bands = row_bands(image, window_side)
    batch_work_executor = BatchWorkExecutor(
        1, parallelism, use_processes=use_processes, progress_name='roughness map', progress_unit='rows')
    try:
        batch_work_executor.execute(
            bands,
            functools.partial(estimate_bands, looks=looks, window_side=window_side, estimator=estimator,
                              estimators=estimators),
            total_items=len(bands),
            result_handler=collect)
    finally:
        batch_work_executor.shutdown()

    estimated = int(np.count_nonzero(np.isfinite(pixels)))
    logger.info('Estimated {} of {} pixels, the rest are nodata.'.format(estimated, pixels.size))
    return RasterImage(image.width, image.height, pixels)

import math

import numpy as np
import pytest

from gi0est.domain.raster_image import RasterImage
from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.misc.config_error import ConfigError
from gi0est.service.gi0_model import unit_mean_params
from gi0est.service.gi0_sampler import gi0_sample
from gi0est.service.roughness_map import estimate_bands, estimate_window, roughness_map, row_bands
from tests.helpers import skip_if_slow_tests_disabled_mark


def speckled_image(width, height, alpha, looks, seed):
    values = gi0_sample(unit_mean_params(alpha, looks), width * height, seed).values
    return RasterImage(width, height, values)


def test_pixels_without_a_full_window_are_nodata():
    image = speckled_image(7, 6, -3.0, 3.0, seed=1)
    alpha_map = roughness_map(image, 3.0, window_side=3, estimator=EstimatorType.MOM12)
    assert (alpha_map.width, alpha_map.height) == (7, 6)
    pixels = alpha_map.pixels
    assert np.all(np.isnan(pixels[0, :]))
    assert np.all(np.isnan(pixels[-1, :]))
    assert np.all(np.isnan(pixels[:, 0]))
    assert np.all(np.isnan(pixels[:, -1]))
    interior = pixels[1:-1, 1:-1]
    converged = interior[np.isfinite(interior)]
    assert converged.size > 0
    assert np.all((converged >= -20.0) & (converged <= -1.0))


def test_roughness_map_is_the_same_with_more_workers():
    image = speckled_image(8, 8, -3.0, 3.0, seed=2)
    sequential = roughness_map(image, 3.0, window_side=3, estimator=EstimatorType.LOG_CUMULANT)
    parallel = roughness_map(image, 3.0, window_side=3, estimator=EstimatorType.LOG_CUMULANT, parallelism=3)
    np.testing.assert_array_equal(sequential.pixels, parallel.pixels)


def test_window_estimate_matches_the_estimator():
    image = speckled_image(5, 5, -3.0, 3.0, seed=3)
    alpha_map = roughness_map(image, 3.0, window_side=5, estimator=EstimatorType.LOG_CUMULANT)
    expected = estimate_window(image.pixels, 3.0, EstimatorType.LOG_CUMULANT)
    assert alpha_map.pixels[2, 2] == expected or (math.isnan(expected) and math.isnan(alpha_map.pixels[2, 2]))


@pytest.mark.parametrize("pixels", [
    [[1.0, 2.0, math.nan], [1.0, 2.0, 3.0], [1.5, 0.5, 2.0]],
    [[1.0, 2.0, 0.0], [1.0, 2.0, 3.0], [1.5, 0.5, 2.0]],
])
def test_windows_with_nodata_are_nodata(pixels):
    assert math.isnan(estimate_window(np.array(pixels), 1.0, EstimatorType.MOM12))


def test_failed_estimates_are_nodata():
    # a constant window has no ML estimate
    assert math.isnan(estimate_window(np.full((3, 3), 2.0), 1.0, EstimatorType.ML))


@pytest.mark.parametrize("window_side", [1, 4, 13])
def test_invalid_window_sides_are_rejected(window_side):
    with pytest.raises(ConfigError) as excinfo:
        roughness_map(speckled_image(5, 5, -3.0, 1.0, seed=4), 1.0, window_side=window_side)
    assert excinfo.value.field == 'window'


def test_unknown_estimator_is_rejected():
    with pytest.raises(ConfigError):
        roughness_map(speckled_image(5, 5, -3.0, 1.0, seed=4), 1.0, window_side=3, estimator='median')


def test_row_bands_hold_only_the_rows_a_window_reads():
    image = speckled_image(6, 9, -3.0, 1.0, seed=8)
    bands = row_bands(image, 5)
    assert [row for row, _ in bands] == [2, 3, 4, 5, 6]
    for row, band in bands:
        assert band.shape == (5, 6)
        np.testing.assert_array_equal(band, image.pixels[row - 2:row + 3, :])


def test_row_bands_of_an_image_shorter_than_the_window():
    assert row_bands(speckled_image(9, 2, -3.0, 1.0, seed=8), 3) == []
    alpha_map = roughness_map(speckled_image(9, 2, -3.0, 1.0, seed=8), 1.0, window_side=3)
    assert np.all(np.isnan(alpha_map.pixels))


def test_band_estimates_match_the_whole_image_windows():
    image = speckled_image(7, 7, -3.0, 3.0, seed=9)
    [(row, line)] = estimate_bands(row_bands(image, 3)[2:3], 3.0, 3, EstimatorType.LOG_CUMULANT)
    assert row == 3
    for column in range(1, 6):
        expected = estimate_window(image.window(3, column, 3), 3.0, EstimatorType.LOG_CUMULANT)
        assert line[column] == expected or (math.isnan(expected) and math.isnan(line[column]))
    assert math.isnan(line[0]) and math.isnan(line[-1])


def test_roughness_map_is_the_same_on_processes():
    image = speckled_image(8, 8, -3.0, 3.0, seed=2)
    threads = roughness_map(image, 3.0, window_side=3, estimator=EstimatorType.LOG_CUMULANT, parallelism=2)
    processes = roughness_map(image, 3.0, window_side=3, estimator=EstimatorType.LOG_CUMULANT, parallelism=2,
                              use_processes=True)
    np.testing.assert_array_equal(threads.pixels, processes.pixels)


@skip_if_slow_tests_disabled_mark
def test_two_region_raster_is_separated():
    width, height, looks = 40, 16, 3.0
    left = gi0_sample(unit_mean_params(-1.5, looks), width * height, 5).values.reshape((height, width))
    right = gi0_sample(unit_mean_params(-8.0, looks), width * height, 6).values.reshape((height, width))
    pixels = np.where(np.arange(width)[None, :] < width // 2, left, right)
    alpha_map = roughness_map(RasterImage(width, height, pixels), looks, window_side=11, parallelism=4,
                              use_processes=True)
    left_estimates = alpha_map.pixels[5:11, 5:15]
    right_estimates = alpha_map.pixels[5:11, 25:35]
    left_median = np.nanmedian(left_estimates)
    right_median = np.nanmedian(right_estimates)
    assert left_median - right_median >= 3.0
    assert abs(left_median + 1.5) <= 1.0
    assert abs(right_median + 8.0) <= 1.0

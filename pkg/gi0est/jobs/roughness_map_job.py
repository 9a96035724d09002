import logging

from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.jobs.base_job import BaseJob
from gi0est.raster_file import read_raster, write_raster
from gi0est.service.gi0_estimators import DEFAULT_ESTIMATORS
from gi0est.service.roughness_map import roughness_map, validate_window_side


class RoughnessMapJob(BaseJob):
    def __init__(self, input_path, output_path, looks, window_side=11, estimator=EstimatorType.TRIANGULAR,
                 estimators=DEFAULT_ESTIMATORS, parallelism=1, use_processes=False):
        validate_window_side(window_side)
        self.input_path = input_path
        self.output_path = output_path
        self.looks = looks
        self.window_side = window_side
        self.estimator = estimator
        self.estimators = estimators
        self.parallelism = parallelism
        self.use_processes = use_processes

        self.image = None
        self.alpha_map = None
        self.logger = logging.getLogger('RoughnessMapJob')

    def _start(self):
        self.image = read_raster(self.input_path)
        self.logger.info('Read a {}x{} raster from {}.'.format(self.image.width, self.image.height, self.input_path))

    def _export(self):
        self.alpha_map = roughness_map(
            self.image,
            self.looks,
            window_side=self.window_side,
            estimator=self.estimator,
            estimators=self.estimators,
            parallelism=self.parallelism,
            use_processes=self.use_processes)
        write_raster(self.output_path, self.alpha_map)

import logging

from gi0est.jobs.base_job import BaseJob
from gi0est.mappers.cell_stats_mapper import CellStatsMapper
from gi0est.service.gi0_estimators import DEFAULT_ESTIMATORS
from gi0est.service.monte_carlo import failure_rates, mean_times, run_grid


class MonteCarloGridJob(BaseJob):
    def __init__(self, grid_spec, item_exporter, parallelism=1, keep_all=False, use_processes=False,
                 estimators=DEFAULT_ESTIMATORS, batch_size=None):
        self.grid_spec = grid_spec
        self.item_exporter = item_exporter
        self.parallelism = parallelism
        self.keep_all = keep_all
        self.use_processes = use_processes
        self.estimators = estimators
        self.batch_size = batch_size

        self.cell_stats_mapper = CellStatsMapper()
        self.cell_stats = []
        self.logger = logging.getLogger('MonteCarloGridJob')

    def _start(self):
        self.item_exporter.open()

    def _export(self):
        self.cell_stats = run_grid(
            self.grid_spec,
            parallelism=self.parallelism,
            keep_all=self.keep_all,
            estimators=self.estimators,
            use_processes=self.use_processes,
            batch_size=self.batch_size)

        empty_cells = sum(1 for stats in self.cell_stats if stats.empty)
        if empty_cells > 0:
            self.logger.warning('{} of {} cells had every replicate discarded.'.format(empty_cells, len(self.cell_stats)))

        for stats in self.cell_stats:
            self.item_exporter.export_items(self.cell_stats_mapper.cell_stats_to_dicts(stats))
        for cell, estimator, mean_seconds in mean_times(self.cell_stats):
            self.item_exporter.export_item(self.cell_stats_mapper.cell_timing_to_dict(cell, estimator, mean_seconds))
        for failure_rate in failure_rates(self.cell_stats):
            self.item_exporter.export_item(self.cell_stats_mapper.failure_rate_to_dict(failure_rate))

    def _end(self):
        self.item_exporter.close()

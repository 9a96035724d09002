from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.enumeration.item_type import ItemType
from gi0est.mappers.contamination_spec_mapper import ContaminationSpecMapper


class CellStatsMapper(object):
    def __init__(self):
        self.contamination_spec_mapper = ContaminationSpecMapper()

    def cell_stats_to_dicts(self, cell_stats):
        """One row per estimator, in EstimatorType.ALL order."""
        for estimator in EstimatorType.ALL:
            estimator_stats = cell_stats.estimators.get(estimator)
            if estimator_stats is None:
                continue
            row = self._cell_to_dict(ItemType.CELL_STATS, cell_stats.cell)
            row.update({
                'estimator': estimator,
                'mean': estimator_stats.mean_alpha_hat,
                'bias': estimator_stats.bias,
                'mse': estimator_stats.mse,
                'ci95': estimator_stats.ci95_halfwidth,
                'used': estimator_stats.used,
                'failures': estimator_stats.failures,
                'replicates': cell_stats.replicates,
                'discarded': cell_stats.discarded_replicates,
            })
            yield row

    def cell_timing_to_dict(self, cell, estimator, mean_seconds):
        row = self._cell_to_dict(ItemType.CELL_TIMING, cell)
        row.update({
            'estimator': estimator,
            'mean_seconds': mean_seconds,
        })
        return row

    def failure_rate_to_dict(self, failure_rate):
        row = {
            'type': ItemType.FAILURE_RATE,
            _column(failure_rate.group_by): failure_rate.group_value,
        }
        row.update(self.contamination_spec_mapper.contamination_spec_to_dict(failure_rate.contamination))
        row.update({
            'estimator': failure_rate.estimator,
            'failures': failure_rate.failures,
            'replicates': failure_rate.replicates,
            'cells': failure_rate.cells,
            'failure_percentage': failure_rate.percentage,
        })
        return row

    def _cell_to_dict(self, item_type, cell):
        row = {
            'type': item_type,
            'alpha': cell.alpha,
            'L': cell.looks,
            'n': cell.n,
        }
        row.update(self.contamination_spec_mapper.contamination_spec_to_dict(cell.contamination))
        return row


def _column(cell_field):
    return 'L' if cell_field == 'looks' else cell_field

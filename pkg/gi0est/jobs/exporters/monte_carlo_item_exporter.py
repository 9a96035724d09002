from gi0est.enumeration.item_type import ItemType
from gi0est.jobs.exporters.composite_item_exporter import CompositeItemExporter
from gi0est.jobs.exporters.converters.missing_value_item_converter import MissingValueItemConverter

CELL_FIELDS = [
    'alpha',
    'L',
    'n',
    'case',
    'epsilon',
    'alpha2',
    'C',
    'k',
    'estimator',
]

CELL_STATS_FIELDS_TO_EXPORT = CELL_FIELDS + [
    'mean',
    'bias',
    'mse',
    'ci95',
    'used',
    'failures',
    'replicates',
    'discarded',
]

CELL_TIMING_FIELDS_TO_EXPORT = CELL_FIELDS + [
    'mean_seconds',
]

FAILURE_RATE_FIELDS_TO_EXPORT = [
    'L',
    'case',
    'epsilon',
    'alpha2',
    'C',
    'k',
    'estimator',
    'failures',
    'replicates',
    'cells',
    'failure_percentage',
]


def monte_carlo_item_exporter(cell_stats_output, timings_output=None, failures_output=None):
    return CompositeItemExporter(
        filename_mapping={
            ItemType.CELL_STATS: cell_stats_output,
            ItemType.CELL_TIMING: timings_output,
            ItemType.FAILURE_RATE: failures_output,
        },
        field_mapping={
            ItemType.CELL_STATS: CELL_STATS_FIELDS_TO_EXPORT,
            ItemType.CELL_TIMING: CELL_TIMING_FIELDS_TO_EXPORT,
            ItemType.FAILURE_RATE: FAILURE_RATE_FIELDS_TO_EXPORT,
        },
        converters=[MissingValueItemConverter()]
    )

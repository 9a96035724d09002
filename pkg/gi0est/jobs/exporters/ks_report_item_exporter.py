from gi0est.enumeration.item_type import ItemType
from gi0est.jobs.exporters.composite_item_exporter import CompositeItemExporter
from gi0est.jobs.exporters.converters.missing_value_item_converter import MissingValueItemConverter

FIELDS_TO_EXPORT = [
    'status',
    'estimator',
    'estimate_status',
    'alpha_hat',
    'n_x',
    'n_y',
    'statistic',
    'p_value',
    'p_value_method',
    'seed',
]


def ks_report_item_exporter(output):
    return CompositeItemExporter(
        filename_mapping={
            ItemType.KS_REPORT: output
        },
        field_mapping={
            ItemType.KS_REPORT: FIELDS_TO_EXPORT
        },
        converters=[MissingValueItemConverter()]
    )

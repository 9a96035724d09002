from gi0est.enumeration.item_type import ItemType
from gi0est.jobs.exporters.composite_item_exporter import CompositeItemExporter
from gi0est.jobs.exporters.converters.missing_value_item_converter import MissingValueItemConverter

FIELDS_TO_EXPORT = [
    't',
    'model_pdf',
    'kde_inverse_gaussian',
    'kde_gamma',
    'histogram',
]


def density_fit_item_exporter(output):
    return CompositeItemExporter(
        filename_mapping={
            ItemType.DENSITY_POINT: output
        },
        field_mapping={
            ItemType.DENSITY_POINT: FIELDS_TO_EXPORT
        },
        converters=[MissingValueItemConverter()]
    )

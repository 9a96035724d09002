import logging

from gi0est.atomic_counter import AtomicCounter
from gi0est.exporters import CsvItemExporter, JsonLinesItemExporter
from gi0est.file_utils import get_file_handle, close_silently


class CompositeItemExporter:
    """Routes each item by its 'type' key to a CSV file, or a JSON-lines file when the name ends in .json.

    Item types mapped to None are accepted and dropped, so optional outputs such as timings can be
    switched off without changing what the job emits.
    """

    def __init__(self, filename_mapping, field_mapping=None, converters=()):
        self.filename_mapping = filename_mapping
        self.field_mapping = field_mapping or {}
        self.converters = converters or ()

        self._outputs = {}
        self.logger = logging.getLogger('CompositeItemExporter')

    def open(self):
        for item_type, filename in self.filename_mapping.items():
            if filename is None:
                continue
            file = get_file_handle(filename, binary=True)
            exporter = create_item_exporter(file, filename, self.field_mapping.get(item_type))
            self._outputs[item_type] = (file, exporter, AtomicCounter())

    def export_items(self, items):
        for item in items:
            self.export_item(item)

    def export_item(self, item):
        item_type = item.get('type')
        if item_type is None:
            raise ValueError('"type" key is not found in item {}'.format(repr(item)))
        if item_type not in self.filename_mapping:
            raise ValueError('No output configured for item type {}'.format(item_type))
        output = self._outputs.get(item_type)
        if output is None:
            return

        _, exporter, counter = output
        for converter in self.converters:
            item = converter.convert_item(item)
        exporter.export_item(item)
        counter.increment()

    def close(self):
        for item_type, (file, exporter, counter) in self._outputs.items():
            exporter.finish_exporting()
            close_silently(file)
            self.logger.info('{} items exported: {}'.format(item_type, counter.value))
        self._outputs = {}


def create_item_exporter(file, filename, fields):
    if str(filename).endswith('.json'):
        return JsonLinesItemExporter(file, fields_to_export=fields)
    return CsvItemExporter(file, fields_to_export=fields)

"""CSV and JSON-lines writers for the dict items produced by the mappers.

Both accept numpy scalars and arrays. CSV floats are written with repr so a value read back
is bit-identical to the one computed.
"""

import csv
import io
import json
import threading

import numpy as np


class ItemExporter(object):
    def __init__(self, fields_to_export=None):
        self.fields_to_export = fields_to_export

    def export_item(self, item):
        raise NotImplementedError

    def finish_exporting(self):
        pass

    def _fields(self, item):
        if self.fields_to_export is None:
            return list(item.keys())
        return [field for field in self.fields_to_export if field in item]


class CsvItemExporter(ItemExporter):
    """One row per item. Without fields_to_export, the columns are those of the first item minus 'type'."""

    def __init__(self, file, fields_to_export=None, include_headers_line=True):
        super(CsvItemExporter, self).__init__(fields_to_export)
        self.include_headers_line = include_headers_line
        self.stream = io.TextIOWrapper(file, write_through=True, encoding='utf-8', newline='')
        self.csv_writer = csv.writer(self.stream, lineterminator='\n')
        self._header_lock = threading.Lock()
        self._header_written = False

    def export_item(self, item):
        if not self._header_written:
            with self._header_lock:
                if not self._header_written:
                    self._write_header(item)
                    self._header_written = True
        self.csv_writer.writerow([_to_csv_value(item.get(field, '')) for field in self.fields_to_export])

    def _write_header(self, item):
        if not self.fields_to_export:
            self.fields_to_export = [key for key in item.keys() if key != 'type']
        if self.include_headers_line:
            self.csv_writer.writerow(self.fields_to_export)

    def finish_exporting(self):
        self.stream.flush()
        # the underlying file belongs to the caller
        self.stream.detach()


class JsonLinesItemExporter(ItemExporter):
    def __init__(self, file, fields_to_export=None):
        super(JsonLinesItemExporter, self).__init__(fields_to_export)
        self.file = file

    def export_item(self, item):
        line = json.dumps(dict((field, item[field]) for field in self._fields(item)), default=encode_numpy)
        self.file.write((line + '\n').encode('utf-8'))


def encode_numpy(o):
    if isinstance(o, np.generic):
        return o.item()
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(repr(o) + ' is not JSON serializable')


def _to_csv_value(value):
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float):
        return repr(value)
    return value

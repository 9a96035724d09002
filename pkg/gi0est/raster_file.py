"""Raster files.

A raster is a JSON sidecar

    {"width": 64, "height": 48, "dtype": "f32le", "nodata": "NaN", "data": "image.f32"}

next to a payload of width * height little-endian 32-bit floats in row-major order. The data
path is relative to the sidecar. A plain-text matrix (one image row per line, values separated
by whitespace or commas) is accepted on input as well.
"""

import json
import logging
import os

import numpy as np

from gi0est.domain.raster_image import RasterImage
from gi0est.file_utils import smart_open
from gi0est.misc.raster_format_error import RasterFormatError

PAYLOAD_DTYPE = 'f32le'
NODATA_TEXT = 'NaN'
PAYLOAD_EXTENSION = '.f32'
SIDECAR_EXTENSION = '.json'
_NUMPY_DTYPE = np.dtype('<f4')

logger = logging.getLogger('RasterFile')


def read_raster(filename):
    if filename.endswith(SIDECAR_EXTENSION):
        return read_raster_sidecar(filename)
    return read_raster_text(filename)


def read_raster_sidecar(filename):
    with smart_open(filename, 'r') as file:
        try:
            sidecar = json.load(file)
        except json.JSONDecodeError as e:
            raise RasterFormatError('{}: invalid JSON at line {} column {}: {}'.format(filename, e.lineno, e.colno, e.msg))
    width = _dimension(sidecar, 'width', filename)
    height = _dimension(sidecar, 'height', filename)
    if sidecar.get('dtype') != PAYLOAD_DTYPE:
        raise RasterFormatError('{}: dtype must be {}, got {}'.format(filename, PAYLOAD_DTYPE, sidecar.get('dtype')))
    if sidecar.get('nodata', NODATA_TEXT) != NODATA_TEXT:
        raise RasterFormatError('{}: nodata must be {}, got {}'.format(filename, NODATA_TEXT, sidecar.get('nodata')))
    if not isinstance(sidecar.get('data'), str):
        raise RasterFormatError('{}: data must name the payload file'.format(filename))

    data_path = os.path.join(os.path.dirname(filename), sidecar['data'])
    with smart_open(data_path, 'r', binary=True) as file:
        payload = file.read()
    expected_size = width * height * _NUMPY_DTYPE.itemsize
    if len(payload) != expected_size:
        offset = min(len(payload), expected_size)
        raise RasterFormatError(
            '{}: payload has {} bytes, a {}x{} {} raster needs {}; mismatch from byte offset {}'.format(
                data_path, len(payload), width, height, PAYLOAD_DTYPE, expected_size, offset))

    pixels = np.frombuffer(payload, dtype=_NUMPY_DTYPE)
    negative = np.flatnonzero(pixels < 0)
    if negative.size > 0:
        raise RasterFormatError('{}: negative intensity {} at byte offset {}'.format(
            data_path, pixels[negative[0]], int(negative[0]) * _NUMPY_DTYPE.itemsize))
    return RasterImage(width, height, pixels.astype(np.float64))


def read_raster_text(filename):
    rows = []
    with smart_open(filename, 'r') as file:
        for line_number, line in enumerate(file, start=1):
            line = line.strip()
            if line == '' or line.startswith('#'):
                continue
            try:
                row = [float(value) for value in line.replace(',', ' ').split()]
            except ValueError:
                raise RasterFormatError('{}: line {}: expected numbers'.format(filename, line_number))
            if rows and len(row) != len(rows[0]):
                raise RasterFormatError('{}: line {}: expected {} values, got {}'.format(
                    filename, line_number, len(rows[0]), len(row)))
            if any(value < 0 for value in row):
                raise RasterFormatError('{}: line {}: negative intensity'.format(filename, line_number))
            rows.append(row)
    if not rows:
        raise RasterFormatError('{}: no pixel rows'.format(filename))
    return RasterImage(len(rows[0]), len(rows), np.array(rows, dtype=np.float64))


def write_raster(filename, image, data_filename=None):
    """Writes the sidecar at filename and the payload next to it; returns the payload path."""
    if not filename.endswith(SIDECAR_EXTENSION):
        raise ValueError('Raster sidecar name must end in {}, got {}'.format(SIDECAR_EXTENSION, filename))
    if data_filename is None:
        data_filename = os.path.basename(filename)[:-len(SIDECAR_EXTENSION)] + PAYLOAD_EXTENSION
    data_path = os.path.join(os.path.dirname(filename), data_filename)

    payload = np.ascontiguousarray(image.pixels, dtype=_NUMPY_DTYPE).tobytes()
    with smart_open(data_path, 'w', binary=True) as file:
        file.write(payload)
    sidecar = {
        'width': image.width,
        'height': image.height,
        'dtype': PAYLOAD_DTYPE,
        'nodata': NODATA_TEXT,
        'data': data_filename,
    }
    with smart_open(filename, 'w') as file:
        file.write(json.dumps(sidecar, indent=2, sort_keys=True) + '\n')
    logger.info('Wrote a {}x{} raster to {} ({} payload bytes).'.format(
        image.width, image.height, data_path, len(payload)))
    return data_path


def _dimension(sidecar, field, filename):
    value = sidecar.get(field)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise RasterFormatError('{}: {} must be a positive integer, got {}'.format(filename, field, repr(value)))
    return value

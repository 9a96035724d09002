"""Plain-text sample files: '#' header lines, then one value per line with 17 significant digits."""

import numpy as np

from gi0est.domain.sample import Sample
from gi0est.file_utils import smart_open

COMMENT_PREFIX = '#'
VALUE_FORMAT = '{:.17g}'


def format_sample_lines(values, header=None):
    lines = []
    for key, value in (header or {}).items():
        lines.append('{} {}: {}'.format(COMMENT_PREFIX, key, value))
    lines.extend(VALUE_FORMAT.format(float(value)) for value in values)
    return lines


def write_sample_file(filename, values, header=None):
    with smart_open(filename, 'w') as file:
        for line in format_sample_lines(values, header):
            file.write(line + '\n')


def parse_sample_lines(lines):
    """-> (values, header). Header lines of the form '# key: value' are collected, other comments skipped."""
    values = []
    header = {}
    for line_number, line in enumerate(lines, start=1):
        line = line.strip()
        if line == '':
            continue
        if line.startswith(COMMENT_PREFIX):
            key, separator, value = line[len(COMMENT_PREFIX):].partition(':')
            if separator:
                header[key.strip()] = value.strip()
            continue
        try:
            values.append(float(line))
        except ValueError:
            raise ValueError('line {}: expected a number, got {}'.format(line_number, repr(line)))
    return np.array(values, dtype=np.float64), header


def read_sample_values(filename):
    with smart_open(filename, 'r') as file:
        return parse_sample_lines(file)


def read_sample_file(filename):
    """Sample read from filename; DegenerateSampleError when it is empty or holds nonpositive values."""
    values, _ = read_sample_values(filename)
    return Sample(values)

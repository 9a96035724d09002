import contextlib
import json

import click

from gi0est.domain.search_range import DEFAULT_SEARCH_RANGE
from gi0est.file_utils import smart_open
from gi0est.jobs.exporters.converters.missing_value_item_converter import MissingValueItemConverter
from gi0est.misc.config_error import ConfigError
from gi0est.service.gi0_estimators import Gi0Estimators


@contextlib.contextmanager
def report_errors():
    """Configuration and I/O errors exit nonzero with their message; estimator failures never get here."""
    try:
        yield
    except ConfigError as e:
        raise click.BadParameter(str(e))
    except (ValueError, OSError) as e:
        raise click.ClickException(str(e))


def build_estimators(kernel, bandwidth, rel_tol, abs_tol, max_subdivisions):
    if bandwidth is not None and not bandwidth > 0:
        raise click.BadParameter('bandwidth must be positive, got {}'.format(bandwidth), param_hint='--bandwidth')
    return Gi0Estimators(
        search_range=DEFAULT_SEARCH_RANGE,
        kernel=kernel,
        bandwidth=bandwidth,
        rel_tol=rel_tol,
        abs_tol=abs_tol,
        max_subdivisions=max_subdivisions)


def write_json_report(output, report):
    """Pretty JSON with sorted keys, None and NaN as NA."""
    with smart_open(output, 'w') as file:
        file.write(json.dumps(_missing_to_na(report), indent=2, sort_keys=True) + '\n')


def _missing_to_na(value):
    if isinstance(value, dict):
        return dict((key, _missing_to_na(item)) for key, item in MissingValueItemConverter().convert_item(value).items())
    if isinstance(value, list):
        return [_missing_to_na(item) for item in value]
    return value

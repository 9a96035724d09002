import logging

import click
import numpy as np

from gi0est.cli.cli_utils import report_errors
from gi0est.logging_utils import logging_basic_config
from gi0est.raster_file import read_raster
from gi0est.sample_file import write_sample_file

logging_basic_config()
logger = logging.getLogger('extract_region')


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('-i', '--input', required=True, type=str, help='The input raster sidecar or text matrix.')
@click.option('-x', '--x', 'x', required=True, type=int, help='The left column of the region.')
@click.option('-y', '--y', 'y', required=True, type=int, help='The top row of the region.')
@click.option('--width', required=True, type=int, help='The region width in pixels.')
@click.option('--height', required=True, type=int, help='The region height in pixels.')
@click.option('-o', '--output', default='-', show_default=True, type=str,
              help='The output sample file. If not specified stdout is used.')
def extract_region(input, x, y, width, height, output):
    """Writes the pixels of a rectangular raster region as a sample file, skipping nodata and zero pixels."""
    if width < 1 or height < 1:
        raise click.BadParameter('the region must be at least 1x1', param_hint='--width/--height')
    with report_errors():
        image = read_raster(input)
        values = image.region(x, y, width, height).ravel()
        usable = np.isfinite(values) & (values > 0)
        skipped = int(values.size - np.count_nonzero(usable))
        if skipped > 0:
            logger.info('Skipped {} nodata or nonpositive pixels.'.format(skipped))
        write_sample_file(output, values[usable], header={
            'source': input,
            'region': '{}x{}+{}+{}'.format(width, height, x, y),
            'skipped': skipped,
        })

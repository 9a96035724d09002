import logging

import click

from gi0est.cli.cli_utils import build_estimators, report_errors
from gi0est.enumeration.item_type import ItemType
from gi0est.enumeration.kernel_type import KernelType
from gi0est.jobs.exporters.density_fit_item_exporter import density_fit_item_exporter
from gi0est.logging_utils import logging_basic_config
from gi0est.sample_file import read_sample_file
from gi0est.service.density_fit import density_fit_points
from gi0est.service.gi0_model import unit_mean_params
from gi0est.service.gi0_sampler import gi0_sample

logging_basic_config()
logger = logging.getLogger('fit_density')


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('-i', '--input', default=None, type=str,
              help='The sample file. If not specified a sample is drawn from --sample-alpha, --n and --seed.')
@click.option('-L', '--looks', required=True, type=float, help='The number of looks, >= 1.')
@click.option('--sample-alpha', default=None, type=float, help='The roughness of the drawn sample.')
@click.option('-n', '--n', 'size', default=1000, show_default=True, type=int, help='The size of the drawn sample.')
@click.option('-s', '--seed', default=0, show_default=True, type=int, help='The seed of the drawn sample.')
@click.option('-a', '--alpha', default=None, type=float,
              help='The roughness of the model curve. If not specified the Triangular estimate is used.')
@click.option('-p', '--points', default=200, show_default=True, type=int, help='The number of abscissae.')
@click.option('-b', '--bandwidth', default=None, type=float,
              help='The kernel bandwidth. If not specified n^(-1/2)/5 is used.')
@click.option('-o', '--output', default='-', show_default=True, type=str,
              help='The output CSV file. If not specified stdout is used.')
def fit_density(input, looks, sample_alpha, size, seed, alpha, points, bandwidth, output):
    """Writes model density, kernel density estimates and histogram on a grid, ready to plot."""
    if not looks >= 1:
        raise click.BadParameter('looks must be >= 1', param_hint='--looks')
    if input is None and sample_alpha is None:
        raise click.BadParameter('either --input or --sample-alpha must be provided', param_hint='--input')
    if alpha is not None and not alpha < -1:
        raise click.BadParameter('alpha must be < -1, got {}'.format(alpha), param_hint='--alpha')
    estimators = build_estimators(KernelType.INVERSE_GAUSSIAN, bandwidth, 1e-8, 1e-10, 2000)
    with report_errors():
        if input is not None:
            drawn = read_sample_file(input)
        else:
            drawn = gi0_sample(unit_mean_params(sample_alpha, looks), size, seed)

        model_alpha, rows = density_fit_points(drawn, looks, points=points, model_alpha=alpha, estimators=estimators)
        logger.info('Model curve uses alpha = {}.'.format(model_alpha))

        item_exporter = density_fit_item_exporter(output)
        item_exporter.open()
        try:
            for row in rows:
                row['type'] = ItemType.DENSITY_POINT
                item_exporter.export_item(row)
        finally:
            item_exporter.close()

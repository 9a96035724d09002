import datetime
import logging

import click

from gi0est.cli.cli_utils import build_estimators, report_errors
from gi0est.domain.grid_spec import GridSpec
from gi0est.enumeration.kernel_type import KernelType
from gi0est.file_utils import smart_open
from gi0est.jobs.exporters.monte_carlo_item_exporter import monte_carlo_item_exporter
from gi0est.jobs.monte_carlo_grid_job import MonteCarloGridJob
from gi0est.logging_utils import logging_basic_config
from gi0est.mappers.grid_spec_mapper import GridSpecMapper
from gi0est.service.monte_carlo import estimate_runtime, is_large_run, validate_grid_spec

logging_basic_config()
logger = logging.getLogger('mc')


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('-c', '--config', default=None, type=str,
              help='The GridSpec JSON file. If not specified the default grid is used.')
@click.option('-r', '--replicates', default=None, type=int, help='Overrides the replicates of the config.')
@click.option('-w', '--parallelism', default=1, show_default=True, type=int, help='The number of workers.')
@click.option('--processes', is_flag=True, default=False, help='Run the workers as processes instead of threads.')
@click.option('--base-seed', default=None, type=int, help='Overrides the base seed of the config.')
@click.option('--keep-all', is_flag=True, default=False,
              help='Keep replicates in which Mom12 or LogCum failed instead of discarding them.')
@click.option('-k', '--kernel', default=KernelType.INVERSE_GAUSSIAN, show_default=True,
              type=click.Choice(KernelType.ALL), help='The kernel of the Triangular density estimate.')
@click.option('-o', '--output', default='-', show_default=True, type=str,
              help='The cell statistics output, CSV or JSON lines when the name ends in .json. '
                   'If not specified stdout is used.')
@click.option('--timings-output', default=None, type=str,
              help='The output file for mean seconds per cell and estimator. If not provided timings are not exported.')
@click.option('--failures-output', default=None, type=str,
              help='The output file for failure percentages per number of looks. '
                   'If not provided failure rates are not exported.')
def mc(config, replicates, parallelism, processes, base_seed, keep_all, kernel, output, timings_output,
       failures_output):
    """Runs the Monte Carlo grid and writes bias, MSE and failure counts per cell and estimator."""
    if parallelism < 1:
        raise click.BadParameter('parallelism must be at least 1', param_hint='--parallelism')
    with report_errors():
        grid_spec = _read_grid_spec(config)
        if replicates is not None:
            grid_spec.replicates = replicates
        if base_seed is not None:
            grid_spec.base_seed = base_seed
        validate_grid_spec(grid_spec)
        estimators = build_estimators(kernel, None, 1e-8, 1e-10, 2000)

        if is_large_run(grid_spec):
            seconds = estimate_runtime(grid_spec, parallelism, estimators)
            logger.warning('{} cells x {} replicates is a large run, expected to take about {}.'.format(
                len(grid_spec.cells()), grid_spec.replicates, datetime.timedelta(seconds=int(seconds))))

        job = MonteCarloGridJob(
            grid_spec=grid_spec,
            item_exporter=monte_carlo_item_exporter(output, timings_output, failures_output),
            parallelism=parallelism,
            keep_all=keep_all,
            use_processes=processes,
            estimators=estimators)
        job.run()


def _read_grid_spec(config):
    if config is None:
        return GridSpec()
    with smart_open(config, 'r') as file:
        return GridSpecMapper().json_to_grid_spec(file.read())

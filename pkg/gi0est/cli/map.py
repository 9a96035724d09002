import click

from gi0est.cli.cli_utils import build_estimators, report_errors
from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.enumeration.kernel_type import KernelType
from gi0est.jobs.roughness_map_job import RoughnessMapJob
from gi0est.logging_utils import logging_basic_config
from gi0est.service.roughness_map import WINDOW_SIDES

logging_basic_config()


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('-i', '--input', required=True, type=str,
              help='The input raster: a JSON sidecar with an f32le payload, or a plain-text matrix.')
@click.option('-o', '--output', required=True, type=str, help='The output raster sidecar, ending in .json.')
@click.option('-L', '--looks', required=True, type=float, help='The number of looks, >= 1.')
@click.option('--window', default=11, show_default=True, type=int,
              help='The side of the square window centred on each pixel, one of {}.'.format(WINDOW_SIDES))
@click.option('-e', '--estimator', default=EstimatorType.TRIANGULAR, show_default=True,
              type=click.Choice(EstimatorType.ALL), help='The estimator applied to every window.')
@click.option('-w', '--parallelism', default=1, show_default=True, type=int, help='The number of workers.')
@click.option('--processes', is_flag=True, default=False, help='Run the workers as processes instead of threads.')
@click.option('-k', '--kernel', default=KernelType.INVERSE_GAUSSIAN, show_default=True,
              type=click.Choice(KernelType.ALL), help='The kernel of the Triangular density estimate.')
@click.option('-b', '--bandwidth', default=None, type=float,
              help='The kernel bandwidth. If not specified n^(-1/2)/5 is used.')
@click.option('--rel-tol', default=1e-8, show_default=True, type=float, help='The relative quadrature tolerance.')
@click.option('--abs-tol', default=1e-10, show_default=True, type=float, help='The absolute quadrature tolerance.')
@click.option('--max-subdivisions', default=2000, show_default=True, type=int,
              help='The maximum number of quadrature subdivisions.')
def map_raster(input, output, looks, window, estimator, parallelism, processes, kernel, bandwidth, rel_tol, abs_tol,
               max_subdivisions):
    """Estimates alpha in a sliding window around every pixel of a raster. Edge pixels and failed windows are NaN."""
    if not looks >= 1:
        raise click.BadParameter('looks must be >= 1', param_hint='--looks')
    if parallelism < 1:
        raise click.BadParameter('parallelism must be at least 1', param_hint='--parallelism')
    if not output.endswith('.json'):
        raise click.BadParameter('the output sidecar name must end in .json', param_hint='--output')
    estimators = build_estimators(kernel, bandwidth, rel_tol, abs_tol, max_subdivisions)
    with report_errors():
        job = RoughnessMapJob(
            input_path=input,
            output_path=output,
            looks=looks,
            window_side=window,
            estimator=estimator,
            estimators=estimators,
            parallelism=parallelism,
            use_processes=processes)
        job.run()

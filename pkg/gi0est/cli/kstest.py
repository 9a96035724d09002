import click

from gi0est.cli.cli_utils import build_estimators, report_errors
from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.enumeration.kernel_type import KernelType
from gi0est.jobs.exporters.ks_report_item_exporter import ks_report_item_exporter
from gi0est.logging_utils import logging_basic_config
from gi0est.mappers.ks_report_mapper import KsReportMapper
from gi0est.sample_file import read_sample_file
from gi0est.service.goodness_of_fit import fit_and_test

logging_basic_config()


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('-i', '--input', required=True, type=str, help='The sample file, one value per line. Use "-" for stdin.')
@click.option('-L', '--looks', required=True, type=float, help='The number of looks, >= 1.')
@click.option('-e', '--estimator', default=EstimatorType.TRIANGULAR, show_default=True,
              type=click.Choice(EstimatorType.ALL), help='The estimator fitted before testing.')
@click.option('-s', '--seed', default=0, show_default=True, type=int,
              help='The seed of the sample simulated from the fitted law.')
@click.option('-k', '--kernel', default=KernelType.INVERSE_GAUSSIAN, show_default=True,
              type=click.Choice(KernelType.ALL), help='The kernel of the Triangular density estimate.')
@click.option('-b', '--bandwidth', default=None, type=float,
              help='The kernel bandwidth. If not specified n^(-1/2)/5 is used.')
@click.option('--rel-tol', default=1e-8, show_default=True, type=float, help='The relative quadrature tolerance.')
@click.option('--abs-tol', default=1e-10, show_default=True, type=float, help='The absolute quadrature tolerance.')
@click.option('--max-subdivisions', default=2000, show_default=True, type=int,
              help='The maximum number of quadrature subdivisions.')
@click.option('-o', '--output', default='-', show_default=True, type=str,
              help='The output file, one CSV row, or a JSON line when the name ends in .json. '
                   'If not specified stdout is used.')
def kstest(input, looks, estimator, seed, kernel, bandwidth, rel_tol, abs_tol, max_subdivisions, output):
    """Fits alpha, simulates a sample of the same size from the fit and runs a two-sample KS test."""
    if not looks >= 1:
        raise click.BadParameter('looks must be >= 1', param_hint='--looks')
    if seed < 0:
        raise click.BadParameter('the seed must be nonnegative', param_hint='--seed')
    estimators = build_estimators(kernel, bandwidth, rel_tol, abs_tol, max_subdivisions)
    with report_errors():
        report = fit_and_test(read_sample_file(input), looks, estimator, seed, estimators=estimators)

        item_exporter = ks_report_item_exporter(output)
        item_exporter.open()
        try:
            item_exporter.export_item(KsReportMapper().ks_report_to_dict(report))
        finally:
            item_exporter.close()

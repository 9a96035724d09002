import click

from gi0est.cli.cli_utils import build_estimators, report_errors, write_json_report
from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.enumeration.kernel_type import KernelType
from gi0est.logging_utils import logging_basic_config
from gi0est.mappers.estimate_outcome_mapper import EstimateOutcomeMapper
from gi0est.sample_file import read_sample_file

logging_basic_config()

ALL_ESTIMATORS = 'all'


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('-i', '--input', required=True, type=str, help='The sample file, one value per line. Use "-" for stdin.')
@click.option('-L', '--looks', required=True, type=float, help='The number of looks, >= 1.')
@click.option('-e', '--estimator', default=ALL_ESTIMATORS, show_default=True,
              type=click.Choice([ALL_ESTIMATORS] + EstimatorType.ALL), help='The estimator to run.')
@click.option('-k', '--kernel', default=KernelType.INVERSE_GAUSSIAN, show_default=True,
              type=click.Choice(KernelType.ALL), help='The kernel of the Triangular density estimate.')
@click.option('-b', '--bandwidth', default=None, type=float,
              help='The kernel bandwidth. If not specified n^(-1/2)/5 is used.')
@click.option('--rel-tol', default=1e-8, show_default=True, type=float, help='The relative quadrature tolerance.')
@click.option('--abs-tol', default=1e-10, show_default=True, type=float, help='The absolute quadrature tolerance.')
@click.option('--max-subdivisions', default=2000, show_default=True, type=int,
              help='The maximum number of quadrature subdivisions.')
@click.option('--timings', is_flag=True, default=False, help='Include the elapsed seconds of every estimator.')
@click.option('-o', '--output', default='-', show_default=True, type=str,
              help='The output JSON report. If not specified stdout is used.')
def estimate(input, looks, estimator, kernel, bandwidth, rel_tol, abs_tol, max_subdivisions, timings, output):
    """Estimates alpha of a sample file. Failed estimators are reported as NA and the exit code stays 0."""
    if not looks >= 1:
        raise click.BadParameter('looks must be >= 1', param_hint='--looks')
    estimators = build_estimators(kernel, bandwidth, rel_tol, abs_tol, max_subdivisions)
    with report_errors():
        drawn = read_sample_file(input)
        if estimator == ALL_ESTIMATORS:
            outcomes = estimators.estimate_all(drawn, looks)
        else:
            outcomes = [estimators.estimate(drawn, looks, estimator)]

        mapper = EstimateOutcomeMapper()
        write_json_report(output, {
            'n': drawn.n,
            'looks': looks,
            'kernel': kernel,
            'bandwidth': bandwidth,
            'estimates': [mapper.outcome_to_dict(outcome, include_elapsed=timings) for outcome in outcomes],
        })

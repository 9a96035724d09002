import click

import gi0est
from gi0est.domain.contamination_spec import ContaminationSpec
from gi0est.domain.gi0_params import Gi0Params
from gi0est.enumeration.contamination_case import ContaminationCase
from gi0est.cli.cli_utils import report_errors
from gi0est.logging_utils import logging_basic_config
from gi0est.mappers.contamination_spec_mapper import ContaminationSpecMapper
from gi0est.sample_file import write_sample_file
from gi0est.service.contamination import sample_contaminated
from gi0est.service.gi0_model import unit_mean_scale
from gi0est.service.gi0_sampler import gi0_sample

logging_basic_config()


@click.command(context_settings=dict(help_option_names=['-h', '--help']))
@click.option('-a', '--alpha', required=True, type=float, help='The roughness alpha, < -1.')
@click.option('-L', '--looks', default=1.0, show_default=True, type=float, help='The number of looks, >= 1.')
@click.option('-n', '--n', 'size', required=True, type=int, help='The sample size.')
@click.option('-s', '--seed', default=0, show_default=True, type=int, help='The nonnegative random seed.')
@click.option('-g', '--gamma', default=None, show_default=True, type=float,
              help='The scale gamma. If not specified the unit-mean scale -alpha-1 is used.')
@click.option('--contaminate', default=ContaminationCase.NONE, show_default=True,
              type=click.Choice(ContaminationCase.ALL), help='The contamination case.')
@click.option('--epsilon', default=0.0, show_default=True, type=float, help='The contamination proportion in [0, 1].')
@click.option('--alpha2', default=None, type=float, help='The contaminant roughness for case1.')
@click.option('--c', 'c_value', default=None, type=float, help='The contaminant constant for case2.')
@click.option('--k', 'k_exponent', default=None, type=int, help='The scale exponent for case3.')
@click.option('-o', '--output', default='-', show_default=True, type=str,
              help='The output sample file. If not specified stdout is used.')
def sample(alpha, looks, size, seed, gamma, contaminate, epsilon, alpha2, c_value, k_exponent, output):
    """Draws a G_I^0 sample, optionally contaminated, one value per line."""
    if not alpha < -1:
        raise click.BadParameter('alpha must be < -1 under the unit-mean convention, got {}'.format(alpha),
                                 param_hint='--alpha')
    if size < 1:
        raise click.BadParameter('the sample size must be at least 1', param_hint='--n')
    if seed < 0:
        raise click.BadParameter('the seed must be nonnegative', param_hint='--seed')

    with report_errors():
        spec = ContaminationSpecMapper().dict_to_contamination_spec(
            _contamination_config(contaminate, epsilon, alpha2, c_value, k_exponent), 'contamination')
        params = Gi0Params(alpha, unit_mean_scale(alpha) if gamma is None else gamma, looks)
        if spec.case == ContaminationCase.NONE:
            drawn = gi0_sample(params, size, seed)
        else:
            drawn = sample_contaminated(params, spec, size, seed)
        write_sample_file(output, drawn.values, header=_header(params, spec, size, seed))


def _contamination_config(case, epsilon, alpha2, c_value, k_exponent):
    config = {'case': case, 'epsilon': epsilon}
    for key, value in (('alpha2', alpha2), ('c', c_value), ('k', k_exponent)):
        if value is not None:
            config[key] = value
    return config


def _header(params, spec, size, seed):
    header = {
        'tool': 'gi0est {}'.format(gi0est.__version__),
        'alpha': repr(params.alpha),
        'gamma': repr(params.gamma),
        'looks': repr(params.looks),
        'n': size,
        'seed': seed,
    }
    if spec != ContaminationSpec():
        for key, value in ContaminationSpecMapper().contamination_spec_to_dict(spec).items():
            if value is not None:
                header['contamination_' + key] = value
    return header

import csv
import importlib
import io
import json
import logging

import numpy as np
import pytest
from click.testing import CliRunner

import tests.resources
from gi0est.cli import cli
from gi0est.domain.raster_image import RasterImage
from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.raster_file import read_raster, write_raster
from gi0est.sample_file import read_sample_values
from gi0est.service.gi0_model import unit_mean_params
from gi0est.service.gi0_sampler import gi0_sample
from tests.helpers import read_file


def invoke(args):
    return CliRunner().invoke(cli, args, catch_exceptions=False)


def draw_sample_file(tmpdir, name='sample.txt', args=('--alpha', '-3', '-L', '1', '-n', '100', '--seed', '7')):
    output = str(tmpdir.join(name))
    result = invoke(['sample'] + list(args) + ['-o', output])
    assert result.exit_code == 0
    return output


def test_sample_is_reproducible(tmpdir):
    first = read_file(draw_sample_file(tmpdir, 'first.txt'))
    second = read_file(draw_sample_file(tmpdir, 'second.txt'))
    assert first == second
    values, header = read_sample_values(str(tmpdir.join('first.txt')))
    assert values.size == 100
    assert header['seed'] == '7'
    assert header['tool'].startswith('gi0est ')
    np.testing.assert_array_equal(values, gi0_sample(unit_mean_params(-3.0, 1.0), 100, 7).values)


def test_sample_to_stdout():
    result = invoke(['sample', '--alpha', '-3', '-n', '5'])
    assert result.exit_code == 0
    lines = [line for line in result.stdout.splitlines() if not line.startswith('#')]
    assert len(lines) == 5


def test_sample_saturated_constant_contamination(tmpdir):
    output = draw_sample_file(tmpdir, args=('--alpha', '-3', '-n', '100', '--contaminate', 'case2', '--epsilon', '1',
                                            '--c', '100'))
    lines = [line for line in read_file(output).splitlines() if not line.startswith('#')]
    assert lines == ['100'] * 100


@pytest.mark.parametrize("args", [
    ['--alpha', '-0.5', '-n', '10'],
    ['--alpha', '-3', '-n', '0'],
    ['--alpha', '-3', '-n', '10', '--seed', '-1'],
    ['--alpha', '-3', '-n', '10', '--contaminate', 'case2', '--epsilon', '0.1'],
    ['--alpha', '-3', '-n', '10', '--contaminate', 'case1', '--epsilon', '0.1', '--alpha2', '-0.5'],
])
def test_sample_rejects_invalid_arguments(args):
    result = CliRunner().invoke(cli, ['sample'] + args)
    assert result.exit_code != 0


def test_estimate_reports_every_estimator(tmpdir):
    sample_file = draw_sample_file(tmpdir, args=('--alpha', '-3', '-L', '3', '-n', '9', '--seed', '1'))
    output = str(tmpdir.join('report.json'))
    result = invoke(['estimate', '-i', sample_file, '-L', '3', '-o', output])
    assert result.exit_code == 0

    report = json.loads(read_file(output))
    assert report['n'] == 9
    assert report['bandwidth'] == 'NA'
    assert [entry['estimator'] for entry in report['estimates']] == EstimatorType.ALL
    for entry in report['estimates']:
        assert (entry['status'] == 'converged') == (entry['alpha_hat'] != 'NA')
        assert 'elapsed_seconds' not in entry

    again = str(tmpdir.join('again.json'))
    invoke(['estimate', '-i', sample_file, '-L', '3', '-o', again])
    assert read_file(again) == read_file(output)


def test_estimate_failures_are_data(tmpdir):
    sample_file = str(tmpdir.join('constant.txt'))
    with open(sample_file, 'w') as file:
        file.write('2\n2\n2\n')
    output = str(tmpdir.join('report.json'))
    result = invoke(['estimate', '-i', sample_file, '-L', '1', '-e', 'ml', '--timings', '-o', output])
    assert result.exit_code == 0
    entry = json.loads(read_file(output))['estimates'][0]
    assert entry['status'] == 'degenerate_sample'
    assert entry['alpha_hat'] == 'NA'
    assert entry['elapsed_seconds'] >= 0


@pytest.mark.parametrize("content", [None, '# nothing here\n', 'abc\n'])
def test_estimate_rejects_unusable_files(tmpdir, content):
    sample_file = str(tmpdir.join('sample.txt'))
    if content is not None:
        with open(sample_file, 'w') as file:
            file.write(content)
    result = CliRunner().invoke(cli, ['estimate', '-i', sample_file, '-L', '1'])
    assert result.exit_code != 0


def test_mc_one_cell(tmpdir):
    config = tests.resources.resource_path(['test_monte_carlo_grid_job'], 'one_cell.json')
    output = str(tmpdir.join('cells.csv'))
    result = invoke(['mc', '--config', config, '--replicates', '3', '-o', output])
    assert result.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(read_file(output))))
    assert [row['estimator'] for row in rows] == EstimatorType.ALL
    assert all(row['replicates'] == '3' for row in rows)


def test_mc_is_byte_identical_across_parallelism(tmpdir):
    config = tests.resources.resource_path(['test_monte_carlo_grid_job'], 'contaminated.json')
    outputs = []
    for parallelism in ('1', '8'):
        output = str(tmpdir.join('cells_{}.csv'.format(parallelism)))
        timings = str(tmpdir.join('timings_{}.csv'.format(parallelism)))
        result = invoke(['mc', '--config', config, '-w', parallelism, '-o', output, '--timings-output', timings])
        assert result.exit_code == 0
        outputs.append(read_file(output))
    assert outputs[0] == outputs[1]
    assert len(outputs[0].splitlines()) == 1 + 4 * 4


def test_mc_warns_about_large_runs(tmpdir, monkeypatch, caplog):
    mc_module = importlib.import_module('gi0est.cli.mc')
    monkeypatch.setattr(mc_module, 'is_large_run', lambda spec: True)
    monkeypatch.setattr(mc_module, 'estimate_runtime', lambda spec, parallelism, estimators: 3725.0)
    config = tests.resources.resource_path(['test_monte_carlo_grid_job'], 'one_cell.json')
    with caplog.at_level(logging.WARNING, logger='mc'):
        result = invoke(['mc', '--config', config, '--replicates', '2', '-o', str(tmpdir.join('cells.csv'))])
    assert result.exit_code == 0
    assert '1 cells x 2 replicates is a large run, expected to take about 1:02:05.' in caplog.messages


def test_mc_small_runs_are_not_timed(tmpdir, monkeypatch, caplog):
    mc_module = importlib.import_module('gi0est.cli.mc')

    def fail(*args):
        raise AssertionError('runtime estimated for a small run')

    monkeypatch.setattr(mc_module, 'estimate_runtime', fail)
    config = tests.resources.resource_path(['test_monte_carlo_grid_job'], 'one_cell.json')
    with caplog.at_level(logging.WARNING, logger='mc'):
        result = invoke(['mc', '--config', config, '--replicates', '2', '-o', str(tmpdir.join('cells.csv'))])
    assert result.exit_code == 0
    assert not any('large run' in message for message in caplog.messages)


def test_mc_rejects_invalid_config(tmpdir):
    config = str(tmpdir.join('grid.json'))
    with open(config, 'w') as file:
        file.write('{"alphas": [-3.0, -0.5]}')
    result = CliRunner().invoke(cli, ['mc', '--config', config])
    assert result.exit_code != 0
    assert 'alphas[1]' in result.output


def test_kstest(tmpdir):
    sample_file = draw_sample_file(tmpdir)
    output = str(tmpdir.join('ks.json'))
    result = invoke(['kstest', '-i', sample_file, '-L', '1', '-e', 'logcum', '--seed', '3', '-o', output])
    assert result.exit_code == 0
    report = json.loads(read_file(output))
    assert report['status'] == 'tested'
    assert 0 <= report['p_value'] <= 1
    assert report['n_x'] == report['n_y'] == 100


def test_kstest_writes_a_csv_row(tmpdir):
    sample_file = draw_sample_file(tmpdir)
    output = str(tmpdir.join('ks.csv'))
    result = invoke(['kstest', '-i', sample_file, '-L', '1', '-e', 'logcum', '--seed', '3', '-o', output])
    assert result.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(read_file(output))))
    assert len(rows) == 1
    assert list(rows[0].keys()) == ['status', 'estimator', 'estimate_status', 'alpha_hat', 'n_x', 'n_y', 'statistic',
                                    'p_value', 'p_value_method', 'seed']
    assert rows[0]['status'] == 'tested'
    assert rows[0]['estimator'] == 'logcum'
    assert rows[0]['n_x'] == rows[0]['n_y'] == '100'
    assert 0 <= float(rows[0]['p_value']) <= 1

    json_output = str(tmpdir.join('ks.json'))
    invoke(['kstest', '-i', sample_file, '-L', '1', '-e', 'logcum', '--seed', '3', '-o', json_output])
    report = json.loads(read_file(json_output))
    assert float(rows[0]['statistic']) == report['statistic']
    assert float(rows[0]['alpha_hat']) == report['alpha_hat']


def test_kstest_not_available_in_csv(tmpdir):
    sample_file = str(tmpdir.join('constant.txt'))
    with open(sample_file, 'w') as file:
        file.write('2\n2\n2\n')
    output = str(tmpdir.join('ks.csv'))
    invoke(['kstest', '-i', sample_file, '-L', '1', '-e', 'ml', '-o', output])
    rows = list(csv.DictReader(io.StringIO(read_file(output))))
    assert rows[0]['status'] == 'not_available'
    assert rows[0]['estimate_status'] == 'degenerate_sample'
    assert rows[0]['p_value'] == 'NA'
    assert rows[0]['statistic'] == 'NA'


def test_kstest_not_available(tmpdir):
    sample_file = str(tmpdir.join('constant.txt'))
    with open(sample_file, 'w') as file:
        file.write('2\n2\n2\n')
    output = str(tmpdir.join('ks.json'))
    invoke(['kstest', '-i', sample_file, '-L', '1', '-e', 'ml', '-o', output])
    report = json.loads(read_file(output))
    assert report['status'] == 'not_available'
    assert report['p_value'] == 'NA'


def test_map(tmpdir):
    input_path = str(tmpdir.join('image.json'))
    write_raster(input_path, RasterImage(5, 4, gi0_sample(unit_mean_params(-3.0, 3.0), 20, 2).values))
    output = str(tmpdir.join('map.json'))
    result = invoke(['map', '-i', input_path, '-o', output, '-L', '3', '--window', '3', '-e', 'mom12'])
    assert result.exit_code == 0
    alpha_map = read_raster(output)
    assert (alpha_map.width, alpha_map.height) == (5, 4)
    assert np.isnan(alpha_map.pixels[0, 0])


@pytest.mark.parametrize("args", [['--window', '4'], ['-L', '0.5'], ['-w', '0']])
def test_map_rejects_invalid_arguments(tmpdir, args):
    input_path = str(tmpdir.join('image.txt'))
    with open(input_path, 'w') as file:
        file.write('1 2 3\n4 5 6\n7 8 9\n')
    base = ['map', '-i', input_path, '-o', str(tmpdir.join('map.json')), '-L', '3', '--window', '3']
    result = CliRunner().invoke(cli, base + args)
    assert result.exit_code != 0


def test_extract_region(tmpdir):
    input_path = str(tmpdir.join('image.txt'))
    with open(input_path, 'w') as file:
        file.write('1 2 3 4\n5 0 7 8\n9 10 11 12\n')
    output = str(tmpdir.join('region.txt'))
    result = invoke(['extract_region', '-i', input_path, '-x', '1', '-y', '0', '--width', '2', '--height', '2',
                     '-o', output])
    assert result.exit_code == 0
    values, header = read_sample_values(output)
    np.testing.assert_array_equal(values, [2.0, 3.0, 7.0])
    assert header['skipped'] == '1'


def test_extract_region_outside_the_raster(tmpdir):
    input_path = str(tmpdir.join('image.txt'))
    with open(input_path, 'w') as file:
        file.write('1 2\n3 4\n')
    result = CliRunner().invoke(cli, ['extract_region', '-i', input_path, '-x', '1', '-y', '1', '--width', '2',
                                      '--height', '1'])
    assert result.exit_code != 0


def test_fit_density(tmpdir):
    output = str(tmpdir.join('fit.csv'))
    result = invoke(['fit_density', '-L', '3', '--sample-alpha', '-3', '-n', '300', '--seed', '4', '-a', '-3',
                     '--points', '20', '-o', output])
    assert result.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(read_file(output))))
    assert len(rows) == 20
    assert list(rows[0].keys()) == ['t', 'model_pdf', 'kde_inverse_gaussian', 'kde_gamma', 'histogram']
    assert all(float(row['model_pdf']) > 0 for row in rows)


def test_fit_density_needs_a_sample():
    result = CliRunner().invoke(cli, ['fit_density', '-L', '3'])
    assert result.exit_code != 0


def test_version():
    result = invoke(['--version'])
    assert result.exit_code == 0
    assert '1.0.0' in result.output

"""Replicate generation, estimator execution and bias/MSE/failure aggregation over a grid of cells.

Every replicate seeds itself from (base_seed, cell, replicate index), so results do not
depend on the pool size or on the order in which replicates complete.
"""

import functools
import logging
import math
import time

import numpy as np

from gi0est.domain.cell_stats import CellStats, EstimatorStats
from gi0est.domain.estimate_outcome import EstimateOutcome
from gi0est.domain.failure_rate import FailureRate
from gi0est.enumeration.estimator_type import EstimatorType
from gi0est.enumeration.outcome_status import OutcomeStatus
from gi0est.executors.batch_work_executor import BatchWorkExecutor
from gi0est.misc.config_error import ConfigError
from gi0est.misc.degenerate_sample_error import DegenerateSampleError
from gi0est.misc.empty_cell_error import EmptyCellError
from gi0est.service.contamination import sample_contaminated, validate_contamination
from gi0est.service.gi0_estimators import DEFAULT_ESTIMATORS
from gi0est.service.gi0_model import unit_mean_params
from gi0est.service.seed_derivation import derive_replicate_seed

CI95_Z = 1.96
CALIBRATION_REPLICATES = 10
LARGE_RUN_REPLICATES = 20000

logger = logging.getLogger('MonteCarlo')


def validate_grid_spec(spec):
    for index, alpha in enumerate(spec.alphas):
        if not alpha < -1:
            raise ConfigError('alphas[{}]'.format(index), 'alpha must be < -1 under the unit-mean convention')
    for index, looks in enumerate(spec.looks):
        if not looks >= 1:
            raise ConfigError('looks[{}]'.format(index), 'looks must be >= 1')
    for index, n in enumerate(spec.sizes):
        if int(n) != n or n < 1:
            raise ConfigError('sizes[{}]'.format(index), 'sample size must be a positive integer')
    for index, contamination in enumerate(spec.contamination):
        try:
            validate_contamination(contamination)
        except ValueError as e:
            raise ConfigError('contamination[{}]'.format(index), str(e))
    if int(spec.replicates) != spec.replicates or spec.replicates < 1:
        raise ConfigError('replicates', 'replicates must be a positive integer')
    if int(spec.base_seed) != spec.base_seed or spec.base_seed < 0:
        raise ConfigError('base_seed', 'base_seed must be a nonnegative integer')


def run_replicate(cell, replicate_index, base_seed, estimators=DEFAULT_ESTIMATORS):
    seed = derive_replicate_seed(base_seed, cell, replicate_index)
    base = unit_mean_params(cell.alpha, cell.looks)
    try:
        sample = sample_contaminated(base, cell.contamination, cell.n, seed)
    except DegenerateSampleError as e:
        logger.debug('Replicate {} of {} drew a degenerate sample: {}'.format(replicate_index, cell, e))
        return [EstimateOutcome(estimator, OutcomeStatus.DEGENERATE_SAMPLE) for estimator in EstimatorType.ALL]
    return estimators.estimate_all(sample, cell.looks)


def run_replicate_batch(batch, base_seed, estimators=DEFAULT_ESTIMATORS):
    """[(cell_index, cell, replicate_index)] -> [(cell_index, replicate_index, outcomes)]"""
    return [(cell_index, replicate_index, run_replicate(cell, replicate_index, base_seed, estimators))
            for cell_index, cell, replicate_index in batch]


def aggregate_cell(cell, replicate_outcomes, keep_all=False):
    """Fold the per-replicate outcomes of one cell into CellStats.

    Unless keep_all is set, a replicate in which Mom12 or LogCum failed is dropped for every
    estimator. Failure counts are taken over all replicates, before the drop.
    """
    if len(replicate_outcomes) == 0:
        raise ValueError('aggregate_cell needs at least one replicate')
    by_estimator = [{outcome.estimator: outcome for outcome in outcomes} for outcomes in replicate_outcomes]

    kept = [outcomes for outcomes in by_estimator
            if keep_all or all(_converged(outcomes, estimator) for estimator in EstimatorType.DISCARD_ON_FAILURE)]

    stats = CellStats(cell, replicates=len(by_estimator))
    stats.used_replicates = len(kept)
    stats.discarded_replicates = len(by_estimator) - len(kept)
    for estimator in EstimatorType.ALL:
        estimator_stats = EstimatorStats(estimator)
        estimator_stats.failures = sum(1 for outcomes in by_estimator if not _converged(outcomes, estimator))
        elapsed = [outcomes[estimator].elapsed for outcomes in by_estimator if estimator in outcomes]
        estimator_stats.mean_elapsed = float(np.mean(elapsed)) if elapsed else None

        estimates = np.array([outcomes[estimator].alpha_hat for outcomes in kept if _converged(outcomes, estimator)])
        estimator_stats.used = int(estimates.size)
        if estimates.size > 0:
            estimator_stats.mean_alpha_hat = float(np.mean(estimates))
            estimator_stats.bias = estimator_stats.mean_alpha_hat - cell.alpha
            estimator_stats.mse = float(np.mean((estimates - cell.alpha) ** 2))
            if estimates.size > 1:
                estimator_stats.ci95_halfwidth = CI95_Z * float(np.std(estimates, ddof=1)) / math.sqrt(estimates.size)
        stats.estimators[estimator] = estimator_stats

    if len(kept) == 0:
        raise EmptyCellError('Every one of the {} replicates of {} was discarded'.format(len(by_estimator), cell))
    return stats


def empty_cell_stats(cell, replicate_outcomes):
    """CellStats of a cell whose replicates were all discarded: failure counts only."""
    stats = aggregate_cell(cell, replicate_outcomes, keep_all=True)
    stats.used_replicates = 0
    stats.discarded_replicates = stats.replicates
    stats.empty = True
    for estimator_stats in stats.estimators.values():
        estimator_stats.mean_alpha_hat = None
        estimator_stats.bias = None
        estimator_stats.mse = None
        estimator_stats.ci95_halfwidth = None
        estimator_stats.used = 0
    return stats


def run_grid(spec, parallelism=1, keep_all=False, estimators=DEFAULT_ESTIMATORS, use_processes=False,
             batch_size=None, cells=None):
    validate_grid_spec(spec)
    if parallelism < 1:
        raise ConfigError('parallelism', 'parallelism must be a positive integer')
    cells = spec.cells() if cells is None else cells
    work_items = [(cell_index, cell, replicate_index)
                  for cell_index, cell in enumerate(cells)
                  for replicate_index in range(spec.replicates)]

    results = {}

    def collect(batch_results):
        for cell_index, replicate_index, outcomes in batch_results:
            results[(cell_index, replicate_index)] = outcomes

    batch_work_executor = BatchWorkExecutor(
        batch_size or _default_batch_size(spec.replicates, parallelism), parallelism,
        use_processes=use_processes, progress_name='Monte Carlo grid', progress_unit='replicates')
    try:
        batch_work_executor.execute(
            work_items,
            functools.partial(run_replicate_batch, base_seed=spec.base_seed, estimators=estimators),
            total_items=len(work_items),
            result_handler=collect)
    finally:
        batch_work_executor.shutdown()
    if len(results) != len(work_items):
        raise RuntimeError('{} of {} replicates returned no result'.format(len(work_items) - len(results),
                                                                          len(work_items)))

    cell_stats = []
    for cell_index, cell in enumerate(cells):
        replicate_outcomes = [results[(cell_index, replicate_index)] for replicate_index in range(spec.replicates)]
        try:
            cell_stats.append(aggregate_cell(cell, replicate_outcomes, keep_all=keep_all))
        except EmptyCellError as e:
            logger.warning(str(e))
            cell_stats.append(empty_cell_stats(cell, replicate_outcomes))
    return cell_stats


def failure_rates(cell_stats, group_by='looks'):
    """Failure percentage per estimator over all cells sharing the group_by value and contamination."""
    groups = {}
    for stats in cell_stats:
        key = (getattr(stats.cell, group_by),) + stats.cell.contamination.key
        group = groups.setdefault(key, {
            'value': getattr(stats.cell, group_by),
            'contamination': stats.cell.contamination,
            'replicates': 0,
            'cells': 0,
            'failures': dict((estimator, 0) for estimator in EstimatorType.ALL),
        })
        group['replicates'] += stats.replicates
        group['cells'] += 1
        for estimator, estimator_stats in stats.estimators.items():
            group['failures'][estimator] += estimator_stats.failures

    rates = []
    for key in sorted(groups, key=_sort_key):
        group = groups[key]
        for estimator in EstimatorType.ALL:
            rates.append(FailureRate(
                group_by=group_by,
                group_value=group['value'],
                contamination=group['contamination'],
                estimator=estimator,
                failures=group['failures'][estimator],
                replicates=group['replicates'],
                cells=group['cells']))
    return rates


def mean_times(cell_stats):
    """[(cell, estimator, mean seconds per call)]"""
    return [(stats.cell, estimator, stats.estimators[estimator].mean_elapsed)
            for stats in cell_stats
            for estimator in EstimatorType.ALL
            if estimator in stats.estimators]


def estimate_runtime(spec, parallelism=1, estimators=DEFAULT_ESTIMATORS,
                     calibration_replicates=CALIBRATION_REPLICATES):
    """Seconds the grid is expected to take, extrapolated from a calibration run on the first cell.

    Cost is taken as linear in the sample size.
    """
    cells = spec.cells()
    if not cells:
        return 0.0
    first = cells[0]
    start = time.perf_counter()
    for replicate_index in range(calibration_replicates):
        run_replicate(first, replicate_index, spec.base_seed, estimators)
    per_replicate = (time.perf_counter() - start) / calibration_replicates
    scale = sum(cell.n for cell in cells) / float(first.n)
    return per_replicate * scale * spec.replicates / parallelism


def is_large_run(spec):
    return len(spec.cells()) * spec.replicates > LARGE_RUN_REPLICATES


def _converged(outcomes, estimator):
    outcome = outcomes.get(estimator)
    return outcome is not None and outcome.converged


def _default_batch_size(replicates, parallelism):
    return max(1, min(replicates, 50) // parallelism)


def _sort_key(key):
    return tuple((value is None, '' if value is None else value) for value in key)

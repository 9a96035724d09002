import numpy as np

from gi0est.domain.contamination_spec import NO_CONTAMINATION
from gi0est.domain.gi0_params import Gi0Params
from gi0est.domain.sample import Sample, SampleProvenance
from gi0est.enumeration.contamination_case import ContaminationCase
from gi0est.misc.domain_error import DomainError
from gi0est.service.gi0_model import gi0_cdf, unit_mean_params, unit_mean_scale, validate_params
from gi0est.service.gi0_sampler import (BERNOULLI_STREAM, CONTAMINANT_STREAM, draw_gi0, make_generator)


def validate_contamination(spec):
    if spec.case not in ContaminationCase.ALL:
        raise ValueError('Unknown contamination case {}'.format(spec.case))
    # epsilon = 1 is admitted for saturation experiments
    if not 0 <= spec.epsilon <= 1:
        raise ValueError('epsilon must lie in [0, 1], got {}'.format(spec.epsilon))
    expected = {
        ContaminationCase.NONE: (),
        ContaminationCase.CASE1: ('alpha2',),
        ContaminationCase.CASE2: ('c_value',),
        ContaminationCase.CASE3: ('k_exponent',),
    }[spec.case]
    for field in ('alpha2', 'c_value', 'k_exponent'):
        present = getattr(spec, field) is not None
        if present != (field in expected):
            raise ValueError('{} must be {} for contamination {}'.format(
                field, 'set' if field in expected else 'unset', spec.case))
    if spec.case == ContaminationCase.CASE1 and not spec.alpha2 < -1:
        raise ValueError('alpha2 must be < -1, got {}'.format(spec.alpha2))
    if spec.case == ContaminationCase.CASE2 and not spec.c_value > 0:
        raise ValueError('C must be positive, got {}'.format(spec.c_value))
    if spec.case == ContaminationCase.CASE3 and not (int(spec.k_exponent) == spec.k_exponent and spec.k_exponent > 0):
        raise ValueError('k must be a positive integer, got {}'.format(spec.k_exponent))


def contaminant_params(base, spec):
    if spec.case == ContaminationCase.CASE1:
        return unit_mean_params(spec.alpha2, base.looks)
    if spec.case == ContaminationCase.CASE3:
        return Gi0Params(base.alpha, 10.0 ** spec.k_exponent * unit_mean_scale(base.alpha), base.looks)
    return None


def sample_contaminated(base, spec, n, seed):
    """(1 - B) W + B U with B ~ Bernoulli(epsilon) drawn per observation.

    W comes from the same stream gi0_sample uses; B and U come from their own substreams.
    """
    validate_params(base)
    validate_contamination(spec)
    if base.gamma != unit_mean_scale(base.alpha):
        raise DomainError('The base model must use the unit-mean scale, got {}'.format(base))
    if n < 1:
        raise ValueError('Sample size must be at least 1, got {}'.format(n))

    values = draw_gi0(base, n, make_generator(seed))
    if spec.case != ContaminationCase.NONE and spec.epsilon > 0:
        replaced = make_generator(seed, BERNOULLI_STREAM).random(n) < spec.epsilon
        if spec.case == ContaminationCase.CASE2:
            contaminants = np.full(n, float(spec.c_value))
        else:
            contaminants = draw_gi0(contaminant_params(base, spec), n, make_generator(seed, CONTAMINANT_STREAM))
        values = np.where(replaced, contaminants, values)
    return Sample(values, provenance=SampleProvenance(seed=seed, params=base, contamination=spec))


def count_replaced(spec, n, seed):
    if spec.case == ContaminationCase.NONE or spec.epsilon == 0:
        return 0
    return int(np.count_nonzero(make_generator(seed, BERNOULLI_STREAM).random(n) < spec.epsilon))


def mixture_cdf(z, base, spec=NO_CONTAMINATION):
    validate_contamination(spec)
    base_cdf = gi0_cdf(z, base)
    if spec.case == ContaminationCase.NONE or spec.epsilon == 0:
        return base_cdf
    if spec.case == ContaminationCase.CASE2:
        atom = np.where(np.asarray(z) >= spec.c_value, 1.0, 0.0)
        return (1.0 - spec.epsilon) * base_cdf + spec.epsilon * atom
    return (1.0 - spec.epsilon) * base_cdf + spec.epsilon * gi0_cdf(z, contaminant_params(base, spec))

import numpy as np

from gi0est.domain.sample import Sample, SampleProvenance
from gi0est.service.gi0_model import validate_params

# Substreams derived from one seed. VALUES is the plain G_I^0 stream, so a contaminated
# sample with epsilon=0 reproduces gi0_sample bitwise.
VALUES_STREAM = None
BERNOULLI_STREAM = 1
CONTAMINANT_STREAM = 2


def make_generator(seed, stream=VALUES_STREAM):
    if seed is None or seed < 0:
        raise ValueError('Seed must be a nonnegative integer, got {}'.format(seed))
    spawn_key = () if stream is None else (stream,)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(int(seed), spawn_key=spawn_key)))


def draw_gi0(params, n, generator):
    """Z = X * Y with X = gamma / Gamma(-alpha, 1) and Y ~ Gamma(L, rate L)."""
    backscatter = params.gamma / generator.standard_gamma(-params.alpha, size=n)
    speckle = generator.standard_gamma(params.looks, size=n) / params.looks
    return backscatter * speckle


def gi0_sample(params, n, seed):
    validate_params(params)
    if n < 1:
        raise ValueError('Sample size must be at least 1, got {}'.format(n))
    values = draw_gi0(params, n, make_generator(seed))
    return Sample(values, provenance=SampleProvenance(seed=seed, params=params))

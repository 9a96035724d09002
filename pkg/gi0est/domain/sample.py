import numpy as np

from gi0est.misc.degenerate_sample_error import DegenerateSampleError


class SampleProvenance(object):
    """Everything needed to regenerate a sample bitwise."""

    def __init__(self, seed, params, contamination=None):
        self.seed = seed
        self.params = params
        self.contamination = contamination


class Sample(object):
    def __init__(self, values, provenance=None):
        values = np.asarray(values, dtype=np.float64).ravel()
        if values.size == 0:
            raise DegenerateSampleError('A sample must contain at least one value')
        if not np.all(np.isfinite(values)) or np.any(values <= 0):
            raise DegenerateSampleError('Sample values must be finite and positive')
        values.setflags(write=False)
        self.values = values
        self.provenance = provenance

    @property
    def n(self):
        return self.values.size

    def __len__(self):
        return self.values.size

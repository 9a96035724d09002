class DensityEstimate(object):
    """Asymmetric-kernel density estimate backed by a sample. Immutable once built."""

    def __init__(self, kernel, bandwidth, sample):
        self._kernel = kernel
        self._bandwidth = bandwidth
        self._sample = sample

    @property
    def kernel(self):
        return self._kernel

    @property
    def bandwidth(self):
        return self._bandwidth

    @property
    def sample(self):
        return self._sample

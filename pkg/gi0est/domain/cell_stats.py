class EstimatorStats(object):
    def __init__(self, estimator):
        self.estimator = estimator
        self.mean_alpha_hat = None
        self.bias = None
        self.mse = None
        self.ci95_halfwidth = None
        # estimates entering mean/bias/mse
        self.used = 0
        # failures over all replicates, before any discard
        self.failures = 0
        self.mean_elapsed = None


class CellStats(object):
    def __init__(self, cell, replicates):
        self.cell = cell
        self.replicates = replicates
        self.used_replicates = 0
        self.discarded_replicates = 0
        self.empty = False
        self.estimators = {}

    def get(self, estimator):
        return self.estimators[estimator]

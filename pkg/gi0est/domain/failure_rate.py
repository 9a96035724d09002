class FailureRate(object):
    def __init__(self, group_by, group_value, contamination, estimator, failures, replicates, cells):
        self.group_by = group_by
        self.group_value = group_value
        self.contamination = contamination
        self.estimator = estimator
        self.failures = failures
        self.replicates = replicates
        self.cells = cells

    @property
    def percentage(self):
        if self.replicates == 0:
            return None
        return 100.0 * self.failures / self.replicates

class DistanceValue(object):
    def __init__(self, value, est_abs_error, evaluations):
        self.value = value
        self.est_abs_error = est_abs_error
        self.evaluations = evaluations

    def __repr__(self):
        return 'DistanceValue(value={}, est_abs_error={}, evaluations={})'.format(
            self.value, self.est_abs_error, self.evaluations)

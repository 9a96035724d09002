from gi0est.enumeration.outcome_status import OutcomeStatus


class EstimateOutcome(object):
    def __init__(self, estimator, status, alpha_hat=None, objective_value=None, iterations=0, elapsed=0.0,
                 at_boundary=False):
        self.estimator = estimator
        self.status = status
        # None unless converged, this is the "NA" of the reports
        self.alpha_hat = alpha_hat if status == OutcomeStatus.CONVERGED else None
        self.objective_value = objective_value
        self.iterations = iterations
        self.elapsed = elapsed
        self.at_boundary = at_boundary

    @property
    def converged(self):
        return self.status == OutcomeStatus.CONVERGED

    def __repr__(self):
        return 'EstimateOutcome(estimator={}, status={}, alpha_hat={})'.format(
            self.estimator, self.status, self.alpha_hat)

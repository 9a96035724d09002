class KsReport(object):
    def __init__(self, status, estimator, n_x, n_y=0, statistic=None, p_value=None, alpha_hat=None,
                 estimate_status=None, seed=None):
        self.status = status
        self.estimator = estimator
        self.n_x = n_x
        self.n_y = n_y
        self.statistic = statistic
        self.p_value = p_value
        self.alpha_hat = alpha_hat
        self.estimate_status = estimate_status
        self.seed = seed

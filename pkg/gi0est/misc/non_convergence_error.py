class NonConvergenceError(ArithmeticError):
    def __init__(self, message, value=None, est_abs_error=None):
        self.value = value
        self.est_abs_error = est_abs_error
        super(NonConvergenceError, self).__init__(message)

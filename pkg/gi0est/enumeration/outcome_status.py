class OutcomeStatus:
    CONVERGED = 'converged'
    NO_SIGN_CHANGE = 'no_sign_change'
    MAX_ITERATIONS = 'max_iterations'
    DEGENERATE_SAMPLE = 'degenerate_sample'

    ALL = [CONVERGED, NO_SIGN_CHANGE, MAX_ITERATIONS, DEGENERATE_SAMPLE]

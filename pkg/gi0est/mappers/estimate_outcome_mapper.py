class EstimateOutcomeMapper(object):
    def outcome_to_dict(self, outcome, include_elapsed=False):
        result = {
            'type': 'estimate',
            'estimator': outcome.estimator,
            'status': outcome.status,
            'alpha_hat': outcome.alpha_hat,
            'objective_value': _float_or_none(outcome.objective_value),
            'iterations': int(outcome.iterations),
            'at_boundary': bool(outcome.at_boundary),
        }
        if include_elapsed:
            result['elapsed_seconds'] = outcome.elapsed
        return result


def _float_or_none(value):
    return None if value is None else float(value)

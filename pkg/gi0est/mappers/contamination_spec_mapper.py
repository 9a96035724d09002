from gi0est.domain.contamination_spec import ContaminationSpec
from gi0est.enumeration.contamination_case import ContaminationCase
from gi0est.misc.config_error import ConfigError

CASE_FIELDS = {
    ContaminationCase.NONE: (),
    ContaminationCase.CASE1: ('alpha2',),
    ContaminationCase.CASE2: ('c',),
    ContaminationCase.CASE3: ('k',),
}
KNOWN_FIELDS = {'case', 'epsilon', 'alpha2', 'c', 'k'}


class ContaminationSpecMapper(object):
    def dict_to_contamination_spec(self, value, field='contamination'):
        if not isinstance(value, dict):
            raise ConfigError(field, 'expected an object, got {}'.format(type(value).__name__))
        unknown = sorted(set(value.keys()) - KNOWN_FIELDS)
        if unknown:
            raise ConfigError('{}.{}'.format(field, unknown[0]), 'unknown field')

        case = value.get('case', ContaminationCase.NONE)
        if case not in CASE_FIELDS:
            raise ConfigError(field + '.case', 'expected one of {}, got {}'.format(ContaminationCase.ALL, case))
        for name in ('alpha2', 'c', 'k'):
            if (name in value) != (name in CASE_FIELDS[case]):
                raise ConfigError('{}.{}'.format(field, name), 'must be {} for case {}'.format(
                    'given' if name in CASE_FIELDS[case] else 'omitted', case))

        epsilon = _number(value.get('epsilon', 0.0), field + '.epsilon')
        if not 0 <= epsilon <= 1:
            raise ConfigError(field + '.epsilon', 'must lie in [0, 1], got {}'.format(epsilon))
        spec = ContaminationSpec(case=case, epsilon=epsilon)
        if case == ContaminationCase.CASE1:
            spec.alpha2 = _number(value['alpha2'], field + '.alpha2')
            if not spec.alpha2 < -1:
                raise ConfigError(field + '.alpha2', 'must be < -1, got {}'.format(spec.alpha2))
        elif case == ContaminationCase.CASE2:
            spec.c_value = _number(value['c'], field + '.c')
            if not spec.c_value > 0:
                raise ConfigError(field + '.c', 'must be positive, got {}'.format(spec.c_value))
        elif case == ContaminationCase.CASE3:
            k = value['k']
            if isinstance(k, bool) or not isinstance(k, int) or k < 1:
                raise ConfigError(field + '.k', 'must be a positive integer, got {}'.format(k))
            spec.k_exponent = k
        return spec

    def contamination_spec_to_dict(self, spec):
        return {
            'case': spec.case,
            'epsilon': spec.epsilon,
            'alpha2': spec.alpha2,
            'C': spec.c_value,
            'k': spec.k_exponent,
        }


def _number(value, field):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(field, 'expected a number, got {}'.format(repr(value)))
    return float(value)

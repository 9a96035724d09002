import json

from gi0est.domain.grid_spec import GridSpec
from gi0est.mappers.contamination_spec_mapper import ContaminationSpecMapper
from gi0est.misc.config_error import ConfigError

KNOWN_FIELDS = {'alphas', 'looks', 'sizes', 'contamination', 'replicates', 'base_seed', 'include_uncontaminated'}


class GridSpecMapper(object):
    def __init__(self):
        self.contamination_spec_mapper = ContaminationSpecMapper()

    def json_to_grid_spec(self, text):
        try:
            value = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError('line {} column {}'.format(e.lineno, e.colno), e.msg)
        return self.dict_to_grid_spec(value)

    def dict_to_grid_spec(self, value):
        """Missing keys take the GridSpec defaults."""
        if not isinstance(value, dict):
            raise ConfigError('grid', 'expected a JSON object')
        unknown = sorted(set(value.keys()) - KNOWN_FIELDS)
        if unknown:
            raise ConfigError(unknown[0], 'unknown field')

        contamination = None
        if 'contamination' in value:
            if not isinstance(value['contamination'], list):
                raise ConfigError('contamination', 'expected a list')
            contamination = [
                self.contamination_spec_mapper.dict_to_contamination_spec(item, 'contamination[{}]'.format(index))
                for index, item in enumerate(value['contamination'])]

        return GridSpec(
            alphas=_numbers(value, 'alphas'),
            looks=_numbers(value, 'looks'),
            sizes=_integers(value, 'sizes'),
            contamination=contamination,
            replicates=_integer(value.get('replicates', 1000), 'replicates'),
            base_seed=_integer(value.get('base_seed', 0), 'base_seed'),
            include_uncontaminated=bool(value.get('include_uncontaminated', True)))

    def grid_spec_to_dict(self, spec):
        return {
            'alphas': spec.alphas,
            'looks': spec.looks,
            'sizes': spec.sizes,
            'contamination': [self._contamination_to_config(c) for c in spec.contamination],
            'replicates': spec.replicates,
            'base_seed': spec.base_seed,
            'include_uncontaminated': spec.include_uncontaminated,
        }

    def _contamination_to_config(self, spec):
        config = self.contamination_spec_mapper.contamination_spec_to_dict(spec)
        config['c'] = config.pop('C')
        return dict((key, value) for key, value in config.items() if value is not None)


def _numbers(value, field):
    if field not in value:
        return None
    if not isinstance(value[field], list) or len(value[field]) == 0:
        raise ConfigError(field, 'expected a nonempty list')
    for index, item in enumerate(value[field]):
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise ConfigError('{}[{}]'.format(field, index), 'expected a number, got {}'.format(repr(item)))
    return [float(item) for item in value[field]]


def _integers(value, field):
    if field not in value:
        return None
    if not isinstance(value[field], list) or len(value[field]) == 0:
        raise ConfigError(field, 'expected a nonempty list')
    return [_integer(item, '{}[{}]'.format(field, index)) for index, item in enumerate(value[field])]


def _integer(item, field):
    if isinstance(item, bool) or not isinstance(item, int):
        raise ConfigError(field, 'expected an integer, got {}'.format(repr(item)))
    return item

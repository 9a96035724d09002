import math

MISSING_VALUE = 'NA'


class MissingValueItemConverter:
    """Renders None and NaN as NA, the way estimator failures are reported."""

    def __init__(self, fields=None):
        self.fields = fields

    def convert_item(self, item):
        return {
            key: self.convert_field(key, value) for key, value in item.items()
        }

    def convert_field(self, key, value):
        if self.fields is not None and key not in self.fields:
            return value
        if value is None or (isinstance(value, float) and math.isnan(value)):
            return MISSING_VALUE
        return value

class ConfigError(ValueError):
    """Invalid configuration. The message starts with the offending field path."""

    def __init__(self, field, message):
        self.field = field
        super(ConfigError, self).__init__('{}: {}'.format(field, message))

class CliException(Exception):
    pass


class ConfigError(CliException, ValueError):
    pass

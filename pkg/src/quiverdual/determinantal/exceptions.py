class DeterminantalException(Exception):
    pass


class UnknownScenario(DeterminantalException, KeyError):
    pass


class ScenarioParameterError(DeterminantalException, TypeError):
    pass

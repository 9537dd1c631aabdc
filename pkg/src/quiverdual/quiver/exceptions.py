class QuiverException(Exception):
    pass


class QuiverDefinitionError(QuiverException, ValueError):
    pass


class NotGaugeNode(QuiverException, ValueError):
    pass


class RankError(QuiverException, ValueError):
    pass


class SuperpotentialCycleRemovedWarning(UserWarning):
    pass

class HypergeometricException(Exception):
    pass


class FactorSpecError(HypergeometricException, ValueError):
    pass

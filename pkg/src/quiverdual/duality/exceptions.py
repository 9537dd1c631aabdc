class DualityException(Exception):
    pass


class CaseMismatch(DualityException, ValueError):
    pass


class TruncationTooSmall(DualityException, ValueError):
    pass


class AmplenessDiscrepancyWarning(UserWarning):
    pass

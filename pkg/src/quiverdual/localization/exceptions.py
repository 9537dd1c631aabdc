class LocalizationException(Exception):
    pass


class IndexOutOfRange(LocalizationException, IndexError):
    pass


class ShapeMismatch(LocalizationException, ValueError):
    pass


class InvalidFixedPoint(LocalizationException, ValueError):
    pass

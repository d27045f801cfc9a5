"""Exception types shared across the library."""


class LimitgenError(Exception):
    """Base class for all library-specific errors."""


class Exhausted(LimitgenError):
    """A finite language has no member left outside the excluded set."""


class InvalidEnumeration(LimitgenError):
    """An explicit enumeration contains an element outside its language."""


class IterationCap(LimitgenError):
    """A safety cap on an iterative search was reached.

    On shipped fixtures this signals a bug (a bad certificate or a broken
    fixture), never expected behaviour.
    """


class BitBoundExceeded(LimitgenError):
    """A token machine read more random bits in one step than it declared."""


class DiscoveryCap(LimitgenError):
    """Bit-bound discovery gave up before finding a halting bound."""


class ConfigError(LimitgenError):
    """An experiment configuration references unknown names or a bad grid."""


class InsufficientData(LimitgenError):
    """Too few positive-error rows to fit a rate curve."""

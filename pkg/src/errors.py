"""Exception hierarchy shared by every module; the CLI maps these to exit codes."""


class QoECachingError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(QoECachingError, ValueError):
    pass


class MissingDescriptorError(QoECachingError, KeyError):
    def __str__(self) -> str:
        # KeyError quotes its argument; keep the plain message
        return str(self.args[0]) if self.args else "missing descriptor"


class NotARecipientError(QoECachingError):
    pass


class PlacementViolationError(QoECachingError):
    pass


class TooLargeForExactError(QoECachingError, RuntimeError):
    pass


class DocumentError(QoECachingError):
    """An instance or experiment document could not be read or failed validation."""

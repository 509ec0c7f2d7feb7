"""Exception types shared across the package."""


class EoradiusError(Exception):
    """Base class for all package-specific errors."""


class ShapeError(EoradiusError, ValueError):
    """Operand has the wrong shape (non-square, mismatched sizes, ...)."""


class DomainError(EoradiusError, ValueError):
    """Scalar argument outside its mathematical domain."""


class PreconditionError(EoradiusError, ValueError):
    """A hypothesis required by a formula does not hold for the inputs."""


class ConfigError(EoradiusError, ValueError):
    """Invalid configuration values."""


class UnsupportedError(EoradiusError, ValueError):
    """Requested operation lies outside the supported parameter range."""


class ParseError(EoradiusError, ValueError):
    """Malformed input file."""

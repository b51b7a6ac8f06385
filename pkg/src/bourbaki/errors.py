"""Exception taxonomy shared across the package.

Every error raised on purpose derives from BourbakiError so callers (and the
CLI) can distinguish rejected input from genuine bugs.
"""


class BourbakiError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(BourbakiError, ValueError):
    """An argument lies outside the mathematical domain (usually [0, 1])."""


class DigitError(BourbakiError, ValueError):
    """A base-3 digit outside {0, 1, 2}."""


class ParameterError(BourbakiError, ValueError):
    """A structural parameter is invalid (family parameter, case tag, index)."""


class ParseError(BourbakiError, ValueError):
    """Malformed textual input (rationals, decimals, CLI arguments)."""


class OrderError(BourbakiError, ValueError):
    """Interval endpoints supplied in the wrong order."""


class EmptyInputError(BourbakiError, ValueError):
    """A nonempty collection was required."""


class SingularMapError(BourbakiError, ZeroDivisionError):
    """Fixed point requested for an affine map with slope 1."""


class ResourceLimitError(BourbakiError):
    """A refinement level beyond the supported table size."""


class ConsistencyError(BourbakiError, RuntimeError):
    """Internal cross-check failed; indicates an implementation bug."""

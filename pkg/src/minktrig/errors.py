"""Exception hierarchy shared by the whole package."""


class MinktrigError(Exception):
    """Base class for all package errors."""

    kind = "error"


class ConfigError(MinktrigError):
    """Invalid norm specification or builder configuration."""

    kind = "config"


class DomainError(MinktrigError):
    """Input outside an operation's mathematical domain (zero vectors, interior points, ...)."""

    kind = "domain"


class UnsupportedOperationError(MinktrigError):
    """Operation requires a plane property the context does not have (e.g. Radon)."""

    kind = "unsupported"


class NumericalError(MinktrigError):
    """A search or refinement failed to converge; indicates a genuinely bad input or a bug."""

    kind = "numerical"


class OutputError(MinktrigError):
    """Filesystem or transport failure while emitting results."""

    kind = "io"

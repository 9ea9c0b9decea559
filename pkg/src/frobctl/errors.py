"""Exception hierarchy shared by the library and the CLI."""


class FrobctlError(Exception):
    """Base class for all errors raised by frobctl."""


class ConfigurationError(FrobctlError, ValueError):
    """Invalid root-system type, rank, prime or job parameter."""


class PreconditionError(FrobctlError, ValueError):
    """An operation was called outside its domain (e.g. a non-dominant weight)."""


class DomainError(FrobctlError, ValueError):
    """Input data does not have the structure an operation needs."""


class ResourceError(FrobctlError, RuntimeError):
    """A configured size cap (Weyl group order, path count, ...) was exceeded."""

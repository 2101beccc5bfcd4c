class TvRoughError(Exception):
    pass


class UniverseMismatch(TvRoughError, ValueError):
    pass


class InvalidPair(TvRoughError, ValueError):
    """Lower component is not contained in the upper component."""


class InvalidTopology(TvRoughError, ValueError):
    pass


class NotAQuasiorder(TvRoughError, ValueError):
    pass


class PreconditionError(TvRoughError, ValueError):
    """An operation was given an argument outside its domain.

    ``witness`` carries the concrete violation when one is available.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(TvRoughError, ValueError):
    pass


class InvariantViolation(TvRoughError, RuntimeError):
    """A result contradicted a property that must always hold."""

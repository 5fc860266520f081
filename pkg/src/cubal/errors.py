"""Exception types shared across the library."""


class CubalError(Exception):
    """Base class for all library errors."""


class MixedAlgebraError(CubalError):
    """Operands belong to different algebra instances."""


class SizeCapError(CubalError):
    """Requested construction or sweep exceeds the enumeration caps."""


class UndefinedDeltaError(CubalError):
    """delta(x, y) was asked for a pair with y not below x."""


class PreconditionError(CubalError):
    """An operation's precondition does not hold for the given arguments."""


class LawViolationError(CubalError):
    """A structural law that the construction relies on failed.

    Carries a witness so the offending elements can be inspected.
    """

    def __init__(self, message, witness=None):
        super().__init__(message if witness is None else f"{message}; witness={witness!r}")
        self.witness = witness


class NoGCoverError(CubalError):
    """The algebra has no g-cover, so the requested construction is impossible."""

"""Exception types shared across the library."""


class DegenerateBasisError(ValueError):
    """Raised when a matrix meant to generate a lattice is singular."""


class UnsupportedDimensionError(ValueError):
    """Raised when an operation is asked for a dimension above its cap."""


class CapExceededError(RuntimeError):
    """Raised when a computation would exceed a configured work cap.

    The offending cap value is kept on the ``cap`` attribute so callers
    (and the CLI exit-code mapping) can report it.
    """

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = int(cap)

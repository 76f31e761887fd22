"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Inputs violate a documented precondition."""


class CapExceeded(RuntimeError):
    """A requested enumeration or pairwise job exceeds its configured cap."""


class VerificationError(AssertionError):
    """An internal self-check failed; carries a witness when available."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness

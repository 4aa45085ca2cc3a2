class VerificationError(RuntimeError):
    """Two computations that must agree by a theorem disagreed."""


class GuardError(ValueError):
    """Input exceeds a configured enumeration cap."""

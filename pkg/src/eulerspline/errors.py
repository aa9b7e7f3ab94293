class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class VerificationError(AssertionError):
    """Two routes that must agree exactly did not (or an integrality check failed)."""

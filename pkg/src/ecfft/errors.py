"""Exception types shared across the package."""


class EcfftError(Exception):
    """Base class for all library errors."""


class PreconditionError(EcfftError, ValueError):
    """An argument violates a documented precondition (CLI exit code 2)."""


class ValidationError(EcfftError):
    """A built or loaded structure fails its invariants (CLI exit code 1)."""


class SearchExhaustedError(EcfftError):
    """A randomized search ran out of budget; retry with another seed."""

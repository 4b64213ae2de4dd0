"""Exception types shared across the library."""


class InputError(ValueError):
    """Invalid user-supplied data: bad rank, non-dominant weight, unknown
    family label, non-regular highest weight, malformed CLI argument."""


class CharacterError(RuntimeError):
    """A claimed character failed to decompose: nonzero residual, negative
    intermediate multiplicity, or broken Weyl invariance."""


class VerificationError(RuntimeError):
    """An internal verification suite detected a mismatch."""

"""Exception types shared across the package."""


class BoundExceededError(ValueError):
    """An argument exceeds the configured exhaustive or exact-evaluation bound."""


class PatternContainedError(ValueError):
    """A permutation that was required to avoid a pattern contains it."""


class MalformedPathError(ValueError):
    """A step string is not a valid Dyck path."""


class TableauError(ValueError):
    """A tableau (or tableau pair) violates the standard-tableau contract."""


class LawMismatchError(ValueError):
    """A limit law was paired with a pattern family it does not describe."""

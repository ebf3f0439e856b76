"""Exception types shared across the package."""


class SubentError(Exception):
    """Base class for every error raised by this package."""


class InputError(SubentError):
    """A caller-supplied value violates a precondition.

    Covers bad shapes, non-orthonormal bases, matrices that fail projector
    validation, out-of-domain parameters and malformed documents.
    """


class NumericalError(SubentError):
    """A computation lost more accuracy than its contract allows."""

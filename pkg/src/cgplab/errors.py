"""Exception hierarchy.

Everything a caller can fix by passing different input derives from
:class:`ValidationError`; the CLI maps those to exit status 2.
"""


class CgplabError(Exception):
    pass


class ValidationError(CgplabError, ValueError):
    pass


class DimensionError(ValidationError):
    pass


class NonUnitaryError(ValidationError):
    pass


class InvalidStateError(ValidationError):
    pass


class DegeneracyError(ValidationError):
    pass


class TrackingError(ValidationError):
    """Eigenvector levels could not be matched across neighbouring points."""

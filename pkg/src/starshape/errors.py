"""Exception types shared across the package."""


class StarshapeError(Exception):
    """Base class for all computation errors raised by this package."""


class SchemeFormatError(StarshapeError):
    """Malformed or inconsistent point-scheme input."""


class DegenerateConfigurationError(StarshapeError):
    """Hyperplane family failed the star-configuration validity checks."""


class GenericityError(StarshapeError):
    """Independently seeded coordinate changes kept disagreeing, or a
    structural invariant of a generic initial ideal failed."""


class UnboundedRegionError(StarshapeError):
    """The staircase complement is unbounded (missing pure power)."""

"""Exception types shared across the package."""


class ParameterDomainError(ValueError):
    """A special-function parameter lies outside its admissible domain."""


class LabelError(ValueError):
    """Quantum-number labels are inconsistent (parity, range, triangle rule)."""


class UnphysicalParameterError(ValueError):
    """A parameter choice that has no physical counterpart (e.g. p = 0)."""


class CatalogueError(KeyError):
    """Requested operator is not in the coordinate-form catalogue."""


class UnsupportedDimensionError(ValueError):
    """Operation only defined for specific dimensions (typically D = 2)."""


class CoordinateSystemError(ValueError):
    """Mixing objects that live in different coordinate systems."""

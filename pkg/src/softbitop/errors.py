"""Exception hierarchy shared across the package."""


class SoftBitopError(Exception):
    """Base class for all package errors."""


class InputError(SoftBitopError, ValueError):
    """Malformed or shape-mismatched input."""


class CapacityError(SoftBitopError):
    """An enumeration guard was exceeded."""


class NotACoverError(SoftBitopError):
    """A family presented as a cover does not cover its target."""


class NoSoftElementsError(SoftBitopError):
    """A soft set with an empty section has no soft elements."""

class InputError(ValueError):
    """Bad argument: out-of-range element id, invalid descriptor, unknown id."""


class CapacityError(RuntimeError):
    """Requested group exceeds the configured engine capacity."""

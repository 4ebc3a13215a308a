class BilliardError(ValueError):
    """Invalid input: bad generator, malformed rational, unsupported request."""


class OddPeriodError(BilliardError):
    """Requested an odd period. Periodic orbits on rectangles always have even period."""


class ConsistencyError(RuntimeError):
    """Two computations that must agree did not. Indicates a bug, not bad input."""

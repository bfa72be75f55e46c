"""Exception types shared across the package."""


class MonomialIdealError(ValueError):
    """Invalid monomial ideal input (empty, mixed lengths, negative exponents)."""


class DimensionMismatch(MonomialIdealError):
    pass


class NotZeroDimensional(MonomialIdealError):
    """The ideal does not contain a pure power of every variable."""


class ResourceExceeded(RuntimeError):
    """A configured cost ceiling was hit before the computation finished."""


class InconsistencyError(AssertionError):
    """Two routes that must agree mathematically produced different answers."""

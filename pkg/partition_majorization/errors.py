"""Exception hierarchy.

``InputError`` subclasses describe bad input and map to CLI exit code 2;
``EngineDefect`` subclasses mean the engine broke one of its own invariants
and map to exit code 3.
"""


class MajorizationError(Exception):
    """Base class for every error raised by this package."""


class InputError(MajorizationError):
    """The caller handed over something the operation cannot accept."""


class EngineDefect(MajorizationError):
    """An internal invariant failed; this is a bug, not bad input."""


class NotNonincreasing(InputError):
    def __init__(self, index: int, name: str = "sequence"):
        self.index = index
        self.name = name
        super().__init__(f"{name} is not nonincreasing at index {index}")


class LengthMismatch(InputError):
    pass


class MixedInfinities(InputError):
    def __init__(self, lo: int, hi: int, length: int):
        self.lo, self.hi, self.length = lo, hi, length
        super().__init__(
            f"range [{lo}, {hi}] reaches both below 1 and past length {length}"
        )


class IndexOutOfBand(InputError):
    pass


class PreconditionViolated(InputError):
    pass


class InfiniteValueError(InputError):
    pass


class InternalInvariantViolated(EngineDefect):
    pass


class NegativeOmega(EngineDefect):
    def __init__(self, omega: int):
        self.omega = omega
        super().__init__(f"homogenization surplus is negative: {omega}")


class InfeasibleHomogenization(EngineDefect):
    pass


class ExtendedArithmeticError(EngineDefect):
    pass

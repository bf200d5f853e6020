"""Exception types raised by the exact kernels."""

from __future__ import annotations


class WallCFError(Exception):
    """Base class for domain errors."""


class ReciprocalOfZeroConstantTerm(WallCFError, ZeroDivisionError):
    pass


class NonSquareAtom(WallCFError, ValueError):
    def __init__(self, location):
        super().__init__(f"atom location {location} is not the square of a rational")
        self.location = location


class RepresentationError(WallCFError):
    """A conversion between representations cannot be carried out."""


class NotSFractionRepresentable(RepresentationError):
    """The residual series at ``level`` has zero constant term but a nonzero tail.

    ``partial`` holds the coefficients alpha_0..alpha_{level-1} found before
    the breakdown and ``residual`` the offending series coefficients.
    """

    def __init__(self, level: int, partial=(), residual=()):
        super().__init__(f"no S-fraction: degenerate residual at level {level}")
        self.level = level
        self.partial = tuple(partial)
        self.residual = tuple(residual)


class NotJFractionRepresentable(RepresentationError):
    def __init__(self, level: int):
        super().__init__(f"no J-fraction: degenerate residual at level {level}")
        self.level = level


class UncontractionBreakdown(RepresentationError):
    def __init__(self, index: int):
        super().__init__(
            f"cannot uncontract: alpha'_{2 * index - 1} = 0 while beta_{index} != 0"
        )
        self.index = index


class PatternViolation(RepresentationError):
    """alpha'_{2k} + alpha'_{2k+1} != 1 (or alpha'_1 != 1) on the proof route."""

    def __init__(self, index: int, value):
        super().__init__(f"pattern broken at pair {index}: sum is {value}")
        self.index = index
        self.value = value


class GOutOfRange(WallCFError, ValueError):
    def __init__(self, index: int, value):
        super().__init__(f"g_{index} = {value} is outside [0, 1]")
        self.index = index
        self.value = value


class AlphaOutOfRange(WallCFError, ValueError):
    def __init__(self, index: int, value):
        super().__init__(f"alpha_{index} = {value} is outside [0, 1]")
        self.index = index
        self.value = value

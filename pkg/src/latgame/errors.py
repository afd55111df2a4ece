"""Exception types shared across the engine."""


class LatgameError(Exception):
    """Base class for all engine errors."""


class DimensionMismatch(LatgameError):
    pass


class DimensionTooLarge(LatgameError):
    pass


class PositionOffBoard(LatgameError):
    pass


class RegionTooLarge(LatgameError):
    pass


class DegenerateDenominator(LatgameError):
    pass


class DegenerateWeight(LatgameError):
    pass


class NotASetGF(LatgameError):
    pass


class UnsupportedSemigroup(LatgameError):
    pass


class OverlappingTranslates(LatgameError):
    pass


class OverlappingStrata(LatgameError):
    pass


class UnsupportedGeometry(LatgameError):
    pass


class ContainmentViolated(LatgameError):
    pass


class RuleSetAxiomViolation(LatgameError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class StrategyOracleMismatch(LatgameError):
    pass

"""Exception types raised by lagstab operations."""


class LagstabError(ValueError):
    """Base class for all lagstab input errors."""


class DimensionMismatch(LagstabError):
    pass


class NonPositiveRadius(LagstabError):
    pass


class NonPositiveEntry(LagstabError):
    pass


class NonPositiveGeodesicRadius(LagstabError):
    pass


class SimplexNotNormalized(LagstabError):
    pass


class PointOutsideBall(LagstabError):
    pass


class IndexOutOfRange(LagstabError):
    pass


class IndicesNotDistinct(LagstabError):
    pass


class RequiresDimensionAtLeast3(LagstabError):
    pass


class InvalidOrder(LagstabError):
    pass


class GridTooCoarse(LagstabError):
    pass


class InvalidModeBound(LagstabError):
    pass

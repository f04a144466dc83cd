"""Exception hierarchy shared by every module in the package."""


class ShapeAssocError(Exception):
    """Base class for all errors raised by this package."""


class LengthError(ShapeAssocError, ValueError):
    """A series is too short for the requested operation."""


class ShapeError(ShapeAssocError, ValueError):
    """Two operands have incompatible lengths or shapes."""


class SpecError(ShapeAssocError, ValueError):
    """A spec object is malformed or its parameters are out of range."""


class ConstantSeriesError(ShapeAssocError, ValueError):
    """A constant series was passed where scale information is required."""


class DomainError(ShapeAssocError, ValueError):
    """An input value lies outside the mathematical domain of a transform."""


class DatasetError(ShapeAssocError, ValueError):
    """A dataset file could not be parsed; message carries line/column."""

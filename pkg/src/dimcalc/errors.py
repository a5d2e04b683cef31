"""Exception types raised by the dimcalc engine."""


class DimcalcError(Exception):
    """Base class for every error raised by dimcalc."""


# intlinalg / dimension
class DependentColumns(DimcalcError):
    pass


class IndexOutOfRange(DimcalcError, IndexError):
    pass


# quantity
class InadmissibleMeasure(DimcalcError, ValueError):
    pass


class SpaceMismatch(DimcalcError):
    pass


class NotInvertible(DimcalcError, ZeroDivisionError):
    pass


class NotEquidimensional(DimcalcError):
    pass


class ModeForbidsNegation(DimcalcError):
    pass


class NotABasis(DimcalcError):
    pass


class ExponentsNotDivisible(DimcalcError):
    pass


class MeasureNotPerfectPower(DimcalcError):
    pass


class NonPositiveMeasure(DimcalcError):
    pass


# analysis
class UnknownName(DimcalcError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class DuplicateName(DimcalcError):
    pass


class LengthMismatch(DimcalcError):
    pass


class ModelInvalid(DimcalcError):
    pass


# units
class DuplicateUnit(DimcalcError):
    pass


class UnknownUnit(DimcalcError):
    pass


# parsing
class ParseError(DimcalcError):
    """Syntax error with an optional 1-based line/column position."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(message)

    def __str__(self):
        if self.line is None:
            if self.column is None:
                return self.message
            return f"column {self.column}: {self.message}"
        return f"line {self.line}, column {self.column or 1}: {self.message}"


class SemanticError(ParseError):
    pass


class UnknownVariable(DimcalcError):
    pass

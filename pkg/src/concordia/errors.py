"""Exception hierarchy.  Every domain failure derives from ConcordiaError so
the CLI can map it to exit code 1."""


class ConcordiaError(Exception):
    """Base class for domain errors."""


class BadParameter(ConcordiaError, ValueError):
    pass


class NotSeifert(ConcordiaError, ValueError):
    pass


class NotFound(ConcordiaError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "not found"


class DimensionMismatch(ConcordiaError, ValueError):
    pass


class AxisWithNonzeroWinding(ConcordiaError, ValueError):
    pass


class PrecisionExhausted(ConcordiaError, ArithmeticError):
    pass


class BadReduction(ConcordiaError, ArithmeticError):
    pass


class TrivialPairing(ConcordiaError, ValueError):
    pass


class DegeneratePresentation(ConcordiaError, ValueError):
    pass


class RealizationBudgetExceeded(ConcordiaError, RuntimeError):
    pass


class UnitAlexander(ConcordiaError, ValueError):
    pass


class ParseError(ConcordiaError, ValueError):
    def __init__(self, msg, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{msg}{where}")
        self.line = line
        self.column = column


class SchemaError(ConcordiaError, ValueError):
    def __init__(self, field, msg):
        super().__init__(f"{field}: {msg}")
        self.field = field

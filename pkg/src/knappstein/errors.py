"""Exception types raised across the package."""


class KnappSteinError(Exception):
    """Base class for all library errors."""


class UnsupportedRank(KnappSteinError, ValueError):
    pass


class ForeignRoot(KnappSteinError, ValueError):
    pass


class DimensionMismatch(KnappSteinError, ValueError):
    pass


class EnumerationBoundExceeded(KnappSteinError):
    pass


class UnsupportedRankOne(KnappSteinError):
    pass


class UnsupportedFamily(KnappSteinError):
    pass


class UnsupportedCocycle(KnappSteinError):
    pass


class SubRootSystemViolation(KnappSteinError):
    """A zero rule produced a set that is not closed under its reflections."""


class DecompositionViolation(KnappSteinError):
    """An R-group report failed one of its structural invariants."""

    def __init__(self, message, forensic=None):
        super().__init__(message)
        self.forensic = forensic or {}


class NonAbelianR(KnappSteinError):
    pass


class InvalidGroupTable(KnappSteinError, ValueError):
    pass


class CensusMismatch(KnappSteinError):
    pass


class RamifiedComponent(KnappSteinError, ValueError):
    pass


class InconsistentInput(KnappSteinError, ValueError):
    pass


class NotSelfDual(KnappSteinError, ValueError):
    pass


class ProblemError(KnappSteinError):
    exit_code = 1

    def __init__(self, message, key=None, line=None):
        where = ""
        if key is not None:
            where += f" [key {key}"
            where += f", line {line}]" if line is not None else "]"
        super().__init__(message + where)
        self.key = key
        self.line = line


class ParseError(ProblemError):
    exit_code = 2


class ValidationError(ProblemError):
    exit_code = 3

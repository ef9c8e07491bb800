"""Exception hierarchy shared by every module."""


class MtcalcError(Exception):
    """Base class; the CLI maps it to exit code 2."""


class DegreeError(MtcalcError, ValueError):
    pass


class ContextMismatch(MtcalcError, ValueError):
    pass


class SymmetryViolation(MtcalcError, ValueError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedError(MtcalcError, ValueError):
    pass


class InvariantViolation(MtcalcError, AssertionError):
    """Internal consistency failure; exit code 3 at the CLI."""

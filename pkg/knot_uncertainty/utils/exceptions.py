"""Exception types raised by the library and mapped to exit codes by the CLI."""


class KnotUncertaintyError(Exception):
    """Base class for every error raised by knot_uncertainty."""


class DegenerateTorus(KnotUncertaintyError):
    pass


class NotCoprime(KnotUncertaintyError):
    pass


class NonPositive(KnotUncertaintyError):
    pass


class DuplicateMode(KnotUncertaintyError):
    pass


class ZeroState(KnotUncertaintyError):
    pass


class NoConvergence(KnotUncertaintyError):
    pass


class PeriodMismatch(KnotUncertaintyError):
    pass


class NegativeVariance(KnotUncertaintyError):
    pass


class NonRealExpectation(KnotUncertaintyError):
    """Imaginary part of a real-operator expectation exceeded tolerance."""


class ZeroMRL(KnotUncertaintyError):
    pass


class UnsupportedChoice(KnotUncertaintyError):
    pass


class InvalidInput(KnotUncertaintyError):
    pass


class NonFiniteValue(KnotUncertaintyError):
    pass

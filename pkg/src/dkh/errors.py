"""Exception hierarchy shared by every module of the package."""


class DKhError(Exception):
    """Base class for all errors raised by :mod:`dkh`."""


class DiagramError(DKhError, ValueError):
    pass


class GaussSyntaxError(DiagramError):
    """The text is not a well-formed signed Gauss code."""


class UnmatchedCrossing(DiagramError):
    """A crossing id is not seen exactly twice, once Over and once Under."""


class SignMismatch(DiagramError):
    """The two occurrences of a crossing carry different signs."""


class UnknownCrossing(DiagramError, KeyError):
    pass


class NotAKnot(DiagramError):
    """An operation that needs a one-component diagram got something else."""


class BadArc(DiagramError):
    pass


class BadBasepoint(DiagramError):
    pass


class ResourceLimit(DKhError, RuntimeError):
    """The cube of smoothings would exceed the configured crossing cap."""


class VariantMismatch(DKhError, ValueError):
    pass


class ArityMismatch(DKhError, ValueError):
    pass


class CycleNotFree(DKhError, ValueError):
    """A death was requested on a cycle that meets a crossing."""


class NotDivisible(DKhError, ArithmeticError):
    """Euler characteristic not divisible by (1 + q^-1): a homology bug."""


class S2Mismatch(DKhError, ValueError):
    pass


class DeathOnKnottedComponent(DKhError, ValueError):
    pass


class MultiComponentSaddle(DKhError, ValueError):
    pass


class BadMove(DKhError, ValueError):
    pass


class NotAChainComplex(DKhError, ValueError):
    """The cube of the diagram does not square to zero, so there is no homology."""

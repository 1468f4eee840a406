"""Exception types shared across the package."""


class HeckeTraceError(Exception):
    """Base class for all errors raised by hecketrace."""


class ParseError(HeckeTraceError, ValueError):
    """Malformed braid word or polynomial text."""


class RankError(HeckeTraceError, ValueError):
    """A generator index does not fit the braid rank."""


class DomainError(HeckeTraceError, ValueError):
    """An argument lies outside the domain of an operation."""


class RankMismatch(HeckeTraceError, ValueError):
    """Hecke elements of different ranks were combined."""


class NotDivisible(HeckeTraceError, ArithmeticError):
    """Exact division of Laurent polynomials has no solution."""

"""
Exception hierarchy for the engine.

Every error raised on purpose by the engine derives from UmbraError, so the
command line front end can turn any of them into a usage/input error.
Identity mismatches are never exceptions: they are report data.
"""


class UmbraError(Exception):
    """Base class for all engine errors."""


# Scalars

class DivisionByZero(UmbraError, ZeroDivisionError):
    pass


class VariantMismatch(UmbraError, TypeError):
    pass


class ExcludedLambda(UmbraError, ValueError):
    pass


class PoleError(UmbraError, ValueError):
    pass


# Series

class SeriesDomainError(UmbraError, ValueError):
    pass


class NotInvertible(SeriesDomainError):
    pass


class NotDelta(SeriesDomainError):
    pass


class QuotientNotSeries(SeriesDomainError):
    pass


class OrderUndefined(SeriesDomainError):
    pass


class PrecisionError(UmbraError, ValueError):
    pass


# Polynomials / umbral operators

class TransferDomainError(UmbraError, ValueError):
    pass


class InternalConsistencyError(UmbraError, AssertionError):
    """Two routes that must agree by construction did not: an engine bug."""


# Families / identities

class UnknownFamily(UmbraError, LookupError):
    pass


class FamilyParameterError(UmbraError, ValueError):
    pass


class UnknownIdentity(UmbraError, LookupError):
    pass


class IdentityParameterError(UmbraError, ValueError):
    pass

"""Exception hierarchy shared by every module."""


class HermSeriesError(Exception):
    """Base class for all errors raised by this package."""


class ContractViolation(HermSeriesError):
    """An operation was called outside its stated preconditions.

    Examples: multiplying series of different orders, asking for a
    coefficient past the truncation order.
    """


class SeriesDomainError(HermSeriesError, ValueError):
    """A mathematically undefined request (non-invertible constant term,
    exp of a series with nonzero constant, division by t of a series with
    nonzero low coefficients, ...)."""


class UnknownSymbolError(HermSeriesError, KeyError):
    pass


class UnknownIdentityError(HermSeriesError, KeyError):
    pass


class RegistryConfigError(HermSeriesError):
    pass

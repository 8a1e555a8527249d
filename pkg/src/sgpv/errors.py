"""Semantic exception types shared across the package."""


class SgpvError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInterval(SgpvError, ValueError):
    """An interval violates its constraints (NaN endpoint, lo > hi, ...)."""


class TruncationEmpty(SgpvError):
    """Truncation bounds do not intersect the interval."""


class InvalidScale(SgpvError, ValueError):
    """A scale parameter (standard error, variance, sd) is not positive."""


class InvalidProbability(SgpvError, ValueError):
    """A probability-like argument lies outside its required range."""


class InvalidProportion(SgpvError, ValueError):
    """A proportion lies outside [0, 1]."""


class InvalidOdds(SgpvError, ValueError):
    """Prior odds must be strictly positive and finite."""


class UnboundedEstimate(SgpvError):
    """The interval estimate covers the whole real line; truncate it first."""


class DegenerateDesign(SgpvError):
    """A design probability vanished where a Bayes ratio requires it positive."""


class InvalidSummary(SgpvError, ValueError):
    """A group summary has n < 2 or a non-positive standard deviation."""


class InvalidSeries(SgpvError, ValueError):
    """A series or grid input is empty or not strictly increasing."""


class MissingComparator(SgpvError):
    """An operation needs classical p-values that the report does not carry."""


class InvalidConfig(SgpvError, ValueError):
    """A run or simulation configuration value is out of range."""

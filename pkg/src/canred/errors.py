"""Exception types raised by the library."""


class EmptyGenerators(ValueError):
    """No generators were supplied."""


class GcdNotOne(ValueError):
    """The generators do not define a numerical semigroup (gcd != 1)."""


class NotAMember(ValueError):
    """An operation required an element of the semigroup."""


class RegularRing(ValueError):
    """The semigroup is all of the nonnegative integers, which this
    operation excludes."""


class BaseMismatch(ValueError):
    """Two relative ideals over different semigroups were combined."""


class NotContained(ValueError):
    """An ideal violated a required containment."""


class CeilingExceeded(ValueError):
    """The requested genus is beyond the enumeration ceiling."""


class OracleTooLarge(ValueError):
    """The naive enumeration oracle was asked for an infeasible genus."""


class InternalError(RuntimeError):
    """An internal consistency guarantee failed; indicates a bug."""


class InternalDisagreement(InternalError):
    """Two independent computations of the same quantity disagree."""

"""Exception types shared across the package."""


class CoxbraidError(Exception):
    """Base class for all library errors."""


class NotSphericalType(CoxbraidError):
    """An operation needed a finite (spherical type) parabolic and got an infinite one."""


class NotReduced(CoxbraidError):
    """A precondition required a coset-reduced element."""


class NotSimpleRoot(CoxbraidError):
    """A root sequence term had to be plus or minus a simple root."""


class NotPositive(CoxbraidError):
    """A word had to be positive (no inverse letters)."""


class NotBiclosed(CoxbraidError):
    """A set of positive roots failed the biclosed test."""


class CaseNotApplicable(CoxbraidError):
    """None of the hypotheses of a case-split operation holds."""


class NotConjugatePositive(CoxbraidError):
    """A conjugate that had to stay in the positive monoid does not."""


class OracleUnavailable(CoxbraidError):
    """No equality or conjugacy oracle covers the requested instance."""


class LcmBoundExceeded(CoxbraidError):
    """No common right-multiple was found within the completion bound."""


class BoundExceeded(CoxbraidError):
    """A brute-force enumeration exceeded its configured bound."""

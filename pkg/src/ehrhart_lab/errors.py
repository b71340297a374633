"""Exception types shared across the package."""


class EhrhartLabError(Exception):
    """Base class for every error raised on purpose by this package."""


class ZeroPolynomial(EhrhartLabError, ValueError):
    pass


class DuplicateAbscissa(EhrhartLabError, ValueError):
    pass


class NonpositiveLeadingCoefficient(EhrhartLabError, ValueError):
    pass


class NonpositiveEvaluation(EhrhartLabError, ValueError):
    pass


class InexactDivision(EhrhartLabError, ArithmeticError):
    pass


class NotPalindromic(EhrhartLabError, ValueError):
    pass


class DegreeTooLarge(EhrhartLabError, ValueError):
    pass


class BadParameter(EhrhartLabError, ValueError):
    pass


class DimensionTooLarge(EhrhartLabError, ValueError):
    pass


class OriginNotVertex(EhrhartLabError, ValueError):
    pass


class AmbientMismatch(EhrhartLabError, ValueError):
    pass


class NotASimplex(EhrhartLabError, ValueError):
    pass


class NoUniqueInteriorPoint(EhrhartLabError, ValueError):
    pass


class NotFullRankData(EhrhartLabError, ValueError):
    pass


class EmptyGraph(EhrhartLabError, ValueError):
    pass


class TooManyLinearExtensions(EhrhartLabError, RuntimeError):
    pass


class ScaleLimit(EhrhartLabError, RuntimeError):
    """An enumeration would exceed its configured budget."""

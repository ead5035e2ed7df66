"""Exception hierarchy shared by every module of the package."""


class ImaginarityError(ValueError):
    """Base class for all domain errors raised by :mod:`imaginarity`."""


class NotHermitian(ImaginarityError):
    pass


class NotPSD(ImaginarityError):
    pass


class InvalidExponent(ImaginarityError):
    pass


class DimMismatch(ImaginarityError):
    pass


class NoConvergence(ImaginarityError, RuntimeError):
    pass


class BlochOutOfBall(ImaginarityError):
    pass


class ParamOutOfRange(ImaginarityError):
    pass


class SupportError(ImaginarityError):
    """supp(rho) is not contained in supp(sigma)."""


class NotNormalized(ImaginarityError):
    pass


class PreconditionViolated(ImaginarityError):
    pass


class SingularDenominator(ImaginarityError):
    pass


class UnknownCheck(ImaginarityError, KeyError):
    pass

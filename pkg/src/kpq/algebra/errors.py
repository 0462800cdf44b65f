"""Exception types shared across the package."""


class KpqError(Exception):
    pass


class DivisionByZero(KpqError, ZeroDivisionError):
    pass


class UntrackedDenominator(KpqError):
    pass


class InsufficientParameters(KpqError):
    pass


class DenominatorVanishes(KpqError):
    pass


class OddSize(KpqError):
    pass


class NotPolynomial(KpqError):
    pass


class NotDivisible(KpqError):
    pass


class NotInSpan(KpqError):
    pass


class NotSymmetric(KpqError):
    pass


class RankTooLarge(KpqError):
    pass


class RankTooSmall(KpqError):
    pass


class OddNegativeCount(KpqError):
    pass


class InvalidRoot(KpqError):
    pass


class OutOfRank(KpqError):
    pass

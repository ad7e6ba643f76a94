"""Exception types shared across the package."""


class KneserChromaError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(KneserChromaError):
    pass


class DegreeOutOfRange(KneserChromaError):
    pass


class NotASubfieldDegree(KneserChromaError):
    pass


class DuplicateElement(KneserChromaError):
    pass


class SetTooLarge(KneserChromaError):
    pass


class NotDisjoint(KneserChromaError):
    pass


class TooLarge(KneserChromaError):
    pass


class NotRegular(KneserChromaError):
    pass


class ArithmeticMismatch(KneserChromaError):
    pass


class SubfieldTooSmall(KneserChromaError):
    pass


class NoPrimeInInterval(KneserChromaError):
    """The cited prime-gap theorem failed on an instance; report loudly."""


class NotAClique(KneserChromaError):
    pass

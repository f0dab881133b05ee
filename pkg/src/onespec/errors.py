"""Exception taxonomy shared by the whole package."""


class OnespecError(Exception):
    """Base class for all library errors."""


class NotPrime(OnespecError):
    pass


class ReducibleModulus(OnespecError):
    pass


class UnsupportedSize(OnespecError):
    pass


class DivisionByZero(OnespecError):
    pass


class FieldMismatch(OnespecError):
    pass


class SizeMismatch(OnespecError):
    pass


class NotMonic(OnespecError):
    pass


class SingularConjugator(OnespecError):
    pass


class TooLarge(OnespecError):
    pass


class ZeroVector(OnespecError):
    pass


class KindParamMismatch(OnespecError):
    pass


class WrongCharacteristic(OnespecError):
    pass


class WrongDimension(OnespecError):
    pass


class NotNilpotent(OnespecError):
    pass


class NotTriangularizable(OnespecError):
    pass


class PreconditionViolated(OnespecError):
    pass


class GroupTooLarge(OnespecError):
    pass


class DimMismatch(OnespecError):
    pass


class BudgetExceeded(OnespecError):
    pass


class UnsupportedField(OnespecError):
    pass


class ParseError(OnespecError):
    pass

"""Exception hierarchy shared by every hypercx module."""


class HypercxError(Exception):
    """Base class for all library errors."""


class InvalidDimension(HypercxError, ValueError):
    pass


class UnknownPreset(HypercxError, KeyError):
    pass


class UnknownConjugation(HypercxError, KeyError):
    pass


class AlgebraMismatch(HypercxError, TypeError):
    pass


class ModeMismatch(HypercxError, TypeError):
    pass


class ZeroDivisorError(HypercxError, ZeroDivisionError):
    """Raised when an element without an inverse is used as a divisor."""


class NearSingular(ZeroDivisorError):
    """A divisor lies closer to the singular set than a caller-imposed guard."""


class DomainError(HypercxError, ValueError):
    pass


class ExprSyntaxError(HypercxError, SyntaxError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownSymbol(HypercxError, NameError):
    pass


class UnknownOperator(HypercxError, KeyError):
    pass


class UnknownGoldenId(HypercxError, KeyError):
    pass


class EliminationFailed(HypercxError, ArithmeticError):
    pass


class AllPointsRejected(HypercxError, RuntimeError):
    pass


class OnCone(HypercxError, ValueError):
    """Point lies on the light cone x^2 = y^2."""


class TailBoundFailed(HypercxError, RuntimeError):
    pass


class CharacterizationMismatch(HypercxError, AssertionError):
    pass


class Singular(HypercxError, ZeroDivisionError):
    pass

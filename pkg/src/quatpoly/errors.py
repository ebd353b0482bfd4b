"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""


class QuatPolyError(Exception):
    code = "E_GENERIC"


class DivisionByZero(QuatPolyError, ZeroDivisionError):
    code = "E_DIV_ZERO"


class ZeroImaginaryPart(QuatPolyError, ValueError):
    code = "E_ZERO_IMAG"


class NotUnitQuaternion(QuatPolyError, ValueError):
    code = "E_NOT_UNIT"


class BothZero(QuatPolyError, ValueError):
    code = "E_BOTH_ZERO"


class ZeroPolynomial(QuatPolyError, ValueError):
    code = "E_ZERO_POLY"


class DegreeZero(QuatPolyError, ValueError):
    code = "E_DEGREE_ZERO"


class BadDivisor(QuatPolyError, ValueError):
    code = "E_BAD_DIVISOR"


class NotARoot(QuatPolyError, ValueError):
    code = "E_NOT_A_ROOT"


class NotPrimitive(QuatPolyError, ValueError):
    code = "E_NOT_PRIMITIVE"


class ParseError(QuatPolyError, ValueError):
    code = "E_PARSE"

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class NonConvergence(QuatPolyError, ArithmeticError):
    code = "E_NONCONVERGENCE"

    def __init__(self, message, residual=float("nan")):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


class PatternViolation(QuatPolyError, AssertionError):
    code = "E_PATTERN"

    def __init__(self, message, entries=()):
        super().__init__(message)
        self.entries = list(entries)


class RootExtractionInconsistency(QuatPolyError, ArithmeticError):
    code = "E_ROOT_EXTRACTION"

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}

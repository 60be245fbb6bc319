"""Exception hierarchy.  CLI exit codes are attached to the classes that map to one."""


class ConformalError(Exception):
    exit_code = 1


class NotNull(ConformalError, ValueError):
    """Vector is not on the null cone."""


class ZeroVector(ConformalError, ValueError):
    pass


class DecompositionError(ConformalError, ArithmeticError):
    """Homogeneous matrix could not be split back into (alpha, A, v)."""


class ModelMismatch(ConformalError, TypeError):
    pass


class NotASubalgebra(ConformalError):
    exit_code = 2

    def __init__(self, message: str, residual: float | None = None):
        super().__init__(message)
        self.residual = residual


class DimensionTooSmall(ConformalError):
    exit_code = 3


class InternalInconsistency(ConformalError):
    """A rank or branch decision contradicted the classification; the tolerance is wrong."""

    exit_code = 4


class UnknownLabel(ConformalError, KeyError):
    exit_code = 5

    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class MissingParameter(ConformalError, ValueError):
    pass


class UnknownInvariant(ConformalError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class SingularCase(ConformalError, ZeroDivisionError):
    pass


class ZeroInput(ConformalError, ValueError):
    pass


class OutsideIdentityComponent(ConformalError, ValueError):
    pass

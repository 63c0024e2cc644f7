"""Exceptions raised by rwrs. Every exception carries the values needed to reproduce the message."""

from typing import Optional


class RwrsError(Exception):
    """Base class of all errors raised by rwrs."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)

    def __reduce__(self):
        return self.__class__, (self.message,)


class InadmissibleParameters(RwrsError):
    """Stable law parameters violate `0 < a1` or `|a2/a1| <= |tan(pi beta / 2)|`."""

    def __init__(self, beta: float, a1: float, a2: float, reason: str):
        self.beta = beta
        self.a1 = a1
        self.a2 = a2
        self.reason = reason
        super().__init__(
            f"Inadmissible stable parameters (beta={beta}, a1={a1}, a2={a2}): {reason}"
        )

    def __reduce__(self):
        return InadmissibleParameters, (self.beta, self.a1, self.a2, self.reason)


class DomainError(RwrsError):
    """An operation was called outside of its mathematical domain."""

    def __init__(self, operation: str, detail: str):
        self.operation = operation
        self.detail = detail
        super().__init__(f"{operation}: {detail}")

    def __reduce__(self):
        return DomainError, (self.operation, self.detail)


class RegimeMismatch(RwrsError):
    """The (alpha, beta) pair does not belong to the regime the caller asked for."""

    def __init__(self, alpha: float, beta: float, detail: str):
        self.alpha = alpha
        self.beta = beta
        self.detail = detail
        super().__init__(f"alpha={alpha}, beta={beta}: {detail}")

    def __reduce__(self):
        return RegimeMismatch, (self.alpha, self.beta, self.detail)


class QuadratureFailure(RwrsError):
    def __init__(self, what: str, error_estimate: float, tolerance: float):
        self.what = what
        self.error_estimate = error_estimate
        self.tolerance = tolerance
        super().__init__(
            f"Quadrature of {what} failed: error {error_estimate:.3e} "
            f"exceeds tolerance {tolerance:.3e}"
        )

    def __reduce__(self):
        return QuadratureFailure, (self.what, self.error_estimate, self.tolerance)


class TruncationError(RwrsError):
    def __init__(self, n_max: int, bound: float, tolerance: float):
        self.n_max = n_max
        self.bound = bound
        self.tolerance = tolerance
        super().__init__(
            f"Tail bound {bound:.3e} after n_max={n_max} terms "
            f"exceeds tolerance {tolerance:.3e}"
        )

    def __reduce__(self):
        return TruncationError, (self.n_max, self.bound, self.tolerance)


class FitError(RwrsError):
    pass


class ConfigError(RwrsError):
    def __init__(self, field: Optional[str], detail: str):
        self.field = field
        self.detail = detail
        prefix = f"'{field}': " if field else ""
        super().__init__(f"{prefix}{detail}")

    def __reduce__(self):
        return ConfigError, (self.field, self.detail)


class OutputError(RwrsError):
    def __init__(self, path: str, detail: str):
        self.path = path
        self.detail = detail
        super().__init__(f"{path}: {detail}")

    def __reduce__(self):
        return OutputError, (self.path, self.detail)

class IrregError(Exception):
    """Base class for errors raised by this package."""


class GraphParseError(IrregError, ValueError):
    def __init__(self, reason: str, offset: int | None = None, line: int | None = None):
        self.reason = reason
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{reason} ({', '.join(where)})" if where else reason)


class UnsupportedSizeError(IrregError, ValueError):
    pass


class NotConnectedError(IrregError, ValueError):
    pass


class EmptyGraphError(IrregError, ValueError):
    """Raised when a measure that divides by the edge count sees m = 0."""


class DomainError(IrregError, ValueError):
    pass


class ConvergenceError(IrregError, ArithmeticError):
    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (residual {residual:.3e})")

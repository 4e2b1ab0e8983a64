from typing import Any, List, Sequence


class InnerDistanceException(Exception):
    pass


class DomainError(InnerDistanceException):
    pass


class ParseError(InnerDistanceException):
    pass


class InvalidGridError(DomainError):
    def __init__(self, violations: Sequence[Any]):
        self.violations: List[Any] = list(violations)
        lines = ["invalid Latin rectangle:"]
        lines.extend(f"  {v}" for v in self.violations)
        super().__init__("\n".join(lines))


class InvalidPairError(DomainError):
    def __init__(self, violations: Sequence[Any]):
        self.violations: List[Any] = list(violations)
        lines = ["invalid difference matrices:"]
        lines.extend(f"  {v}" for v in self.violations)
        super().__init__("\n".join(lines))


class GuardExceeded(InnerDistanceException):
    pass


class ConsistencyError(InnerDistanceException):
    pass


class StructureError(InnerDistanceException):
    def __init__(self, msg: str, grid: Any = None):
        self.grid = grid
        super().__init__(msg)

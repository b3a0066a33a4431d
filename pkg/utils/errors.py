"""
Исключения библиотеки.

Каждый класс несёт код выхода, который CLI возвращает процессу:
2 - ошибка использования, 3 - бюджет перебора, 4 - не выполнена гипотеза теоремы,
5 - нарушение внутреннего инварианта.
"""
from typing import Any, Optional


class HdxError(Exception):
    exit_code = 5


class InvalidInput(HdxError, ValueError):
    exit_code = 2


class BudgetExceeded(HdxError):
    """Перебор не помещается в бюджет; вызывающий должен уменьшить задачу или поднять бюджет."""
    exit_code = 3

    def __init__(self, needed: int, budget: int, what: str = "enumeration"):
        self.needed = needed
        self.budget = budget
        self.what = what
        super().__init__(f"{what} needs {needed} steps, budget is {budget}")


class DegenerateSpace(HdxError):
    """C^k = B^k (или C_k = B_k): минимизировать не по чему."""
    exit_code = 4


class HypothesisFailed(HdxError):
    exit_code = 4


class NotPure(HypothesisFailed):
    pass


class NotHomogeneous(HypothesisFailed):
    pass


class NotASubcomplex(InvalidInput):
    pass


class NotACycle(InvalidInput):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"family member {index} has nonzero boundary")


class ZeroEvaluation(InvalidInput):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"cochain evaluates to 0 on family member {index}")


class FillIdentityViolated(HdxError):
    def __init__(self, s: Any, sigma: Any, detail: Optional[str] = None):
        self.s = s
        self.sigma = sigma
        message = f"fill identity fails for s={s!r}, sigma={sigma!r}"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class InvariantBreach(HdxError):
    exit_code = 5

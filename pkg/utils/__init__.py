"""
Пакет утилит: ошибки, настройки, журнал и просмотр прогонов
"""

from .errors import (
    HdxError,
    InvalidInput,
    BudgetExceeded,
    DegenerateSpace,
    HypothesisFailed,
    NotPure,
    NotHomogeneous,
    NotASubcomplex,
    NotACycle,
    ZeroEvaluation,
    FillIdentityViolated,
    InvariantBreach,
)
from .notifier import RunNotifier, get_notifier

__all__ = [
    'HdxError',
    'InvalidInput',
    'BudgetExceeded',
    'DegenerateSpace',
    'HypothesisFailed',
    'NotPure',
    'NotHomogeneous',
    'NotASubcomplex',
    'NotACycle',
    'ZeroEvaluation',
    'FillIdentityViolated',
    'InvariantBreach',
    'RunNotifier',
    'get_notifier',
]

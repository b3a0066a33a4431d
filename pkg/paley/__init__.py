"""
Пакет коцепей Пэли
"""

from .characters import CharTable, is_odd_prime, legendre, chung_bound, character_sum, chung_sum_check
from .cochains import (
    paley_cochain,
    expected_norm,
    explicit_lower_bound,
    paley_csy_experiment,
    paley_sweep,
    rows_to_csv,
)

__all__ = [
    'CharTable',
    'is_odd_prime',
    'legendre',
    'chung_bound',
    'character_sum',
    'chung_sum_check',
    'paley_cochain',
    'expected_norm',
    'explicit_lower_bound',
    'paley_csy_experiment',
    'paley_sweep',
    'rows_to_csv',
]

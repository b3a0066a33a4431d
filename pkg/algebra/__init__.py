"""
Пакет линейной алгебры над Z₂
"""

from .gf2 import (
    BitVec,
    GF2Matrix,
    CosetProblem,
    SpanTable,
    row_reduce,
    reduce_vector,
    in_row_space,
    rank_of_rows,
    coset_min_weight,
    enumerate_coset_reps,
    free_coordinates,
    gray_scan,
    lex_key,
    weight,
)

__all__ = [
    'BitVec',
    'GF2Matrix',
    'CosetProblem',
    'SpanTable',
    'row_reduce',
    'reduce_vector',
    'in_row_space',
    'rank_of_rows',
    'coset_min_weight',
    'enumerate_coset_reps',
    'free_coordinates',
    'gray_scan',
    'lex_key',
    'weight',
]

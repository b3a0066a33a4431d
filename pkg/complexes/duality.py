"""
Двойственность Александера для симплициальных комплексов на вершинах [n].
"""
from itertools import combinations
from typing import List, Tuple

from utils.errors import InvalidInput

from .builders import from_simplices
from .cells import ComplexZ2, RelativePair, relative_pair


def _dual_name(name: str) -> str:
    if name.startswith("dual(") and name.endswith(")"):
        return name[5:-1]
    return f"dual({name})"


def _check_on_vertex_set(x: ComplexZ2, n: int) -> None:
    if not x.is_simplicial():
        raise InvalidInput(f"{x.name} is not simplicial")
    for (v,) in x.cells(0):
        if not 0 <= v < n:
            raise InvalidInput(f"vertex {v} of {x.name} is outside [0, {n})")


def _has_simplex(x: ComplexZ2, s: Tuple[int, ...]) -> bool:
    if not s:
        return x.has_empty if x.reduced else x.top_dim >= 0
    return x.contains(len(s) - 1, s)


def alexander_dual(x: ComplexZ2, n: int) -> ComplexZ2:
    """X∨ = {σ ⊆ [n] : [n] \\ σ ∉ X}. Двойственный к двойственному совпадает с X."""
    if n < 1:
        raise InvalidInput("alexander_dual needs n >= 1")
    _check_on_vertex_set(x, n)
    full = tuple(range(n))
    simplices: List[Tuple[int, ...]] = []
    for size in range(n + 1):
        for s in combinations(full, size):
            complement = tuple(v for v in full if v not in s)
            if not _has_simplex(x, complement):
                simplices.append(s)
    return from_simplices(_dual_name(x.name), simplices, reduced=True)


def dual_pair(x: ComplexZ2, y: ComplexZ2, n: int) -> RelativePair:
    """Для Y ⊆ X возвращает пару (Y∨, X∨)."""
    for k in range(0, y.top_dim + 1):
        for label in y.cells(k):
            if not x.contains(k, label):
                raise InvalidInput(f"{y.name} is not a subcomplex of {x.name}")
    y_dual = alexander_dual(y, n)
    x_dual = alexander_dual(x, n)
    return relative_pair(y_dual, x_dual)

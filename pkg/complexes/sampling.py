"""
Случайные комплексы: Y(n, p) и случайные подкомплексы симплекса.
"""
from itertools import combinations
from math import comb
from typing import List, Optional, Tuple, Union

import numpy as np

from utils.errors import InvalidInput

from .builders import from_simplices
from .cells import ComplexZ2

SeedLike = Union[int, np.random.Generator, None]


def _rng(seed: SeedLike) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_Ynp(n: int, p: float, seed: SeedLike = 0) -> ComplexZ2:
    """Полный 1-остов Δ^{n-1} и каждый треугольник независимо с вероятностью p."""
    if n < 3:
        raise InvalidInput("Y(n, p) needs n >= 3")
    if not 0.0 <= p <= 1.0:
        raise InvalidInput(f"probability out of range: {p}")
    rng = _rng(seed)
    triangles = list(combinations(range(n), 3))
    keep = rng.random(comb(n, 3)) < p
    chosen = [t for t, flag in zip(triangles, keep) if flag]
    return from_simplices(f"Y({n},{p:g})", list(combinations(range(n), 2)) + chosen)


def random_subcomplex(n: int, seed: SeedLike = 0, max_facets: Optional[int] = None,
                      max_size: Optional[int] = None) -> ComplexZ2:
    """
    Замыкание вниз нескольких случайных подмножеств [n].

    Число порождающих симплексов равновероятно от 0 до max_facets; при нуле получается
    {∅} или пустой комплекс.
    """
    rng = _rng(seed)
    max_facets = n if max_facets is None else max_facets
    max_size = n - 1 if max_size is None else max_size
    count = int(rng.integers(0, max_facets + 1))
    simplices: List[Tuple[int, ...]] = []
    for _ in range(count):
        size = int(rng.integers(1, max_size + 1))
        members = rng.choice(n, size=size, replace=False)
        simplices.append(tuple(sorted(int(v) for v in members)))
    if not simplices and rng.random() < 0.5:
        return from_simplices("void", [])
    return from_simplices(f"random-sub(n={n})", simplices or [()])

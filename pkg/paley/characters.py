"""
Квадратичный характер F_p и проверка оценки характерных сумм по множествам W(R_0, …, R_k).
"""
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from sympy.ntheory.primetest import isprime

from utils.errors import InvalidInput

# запас на ошибку округления float при сравнении с оценкой
CHUNG_SLACK = 1e-9


def is_odd_prime(p: int) -> bool:
    return isinstance(p, int) and p > 2 and isprime(p)


def _require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise InvalidInput(f"{p} is not an odd prime")


def legendre(x: int, p: int) -> int:
    """Символ Лежандра по критерию Эйлера."""
    _require_odd_prime(p)
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


@dataclass(frozen=True)
class CharTable:
    p: int
    values: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        _require_odd_prime(self.p)
        object.__setattr__(self, "values", tuple(legendre(x, self.p) for x in range(self.p)))

    def __call__(self, x: int) -> int:
        return self.values[x % self.p]

    def residues(self) -> List[int]:
        return [x for x, v in enumerate(self.values) if v == 1]

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.int64)

    def check(self) -> bool:
        """χ(x)χ(y) = χ(xy), Σχ = 0 и ровно (p-1)/2 вычетов."""
        p = self.p
        if sum(self.values) != 0 or len(self.residues()) != (p - 1) // 2:
            return False
        return all(self.values[x] * self.values[y] == self.values[x * y % p]
                   for x in range(p) for y in range(p))


def chung_bound(p: int, k: int, sizes: List[int]) -> float:
    """2^{(k-1)2^{-(k-1)}} · p^{1-2^{-k}} · (Π|R_i|)^{1/(k+1)}."""
    prod = float(np.prod(np.array(sizes, dtype=np.float64))) if sizes else 0.0
    return 2.0 ** ((k - 1) * 2.0 ** (-(k - 1))) * p ** (1 - 2.0 ** (-k)) * prod ** (1.0 / (k + 1))


def _codes(points: np.ndarray, p: int, drop: int) -> np.ndarray:
    kept = np.delete(points, drop, axis=1)
    weights = p ** np.arange(kept.shape[1] - 1, -1, -1, dtype=np.int64)
    return kept @ weights


def character_sum(table: CharTable, k: int, members: List[np.ndarray]) -> int:
    """Σ χ(x_0 + ⋯ + x_k) по x ∈ F_p^{k+1} с π_i(x) ∈ R_i; members[i] - маска R_i длины p^k."""
    p = table.p
    points = np.array(list(product(range(p), repeat=k + 1)), dtype=np.int64)
    inside = np.ones(len(points), dtype=bool)
    for i, mask in enumerate(members):
        inside &= mask[_codes(points, p, i)]
    sums = points[inside].sum(axis=1) % p
    return int(table.as_array()[sums].sum())


def chung_sum_check(p: int, k: int, trials: int = 100, seed: int = 0,
                    density: Optional[float] = None) -> Dict[str, Any]:
    """
    Прямое суммирование характерной суммы по случайным R_0, …, R_k ⊆ F_p^k
    и сравнение с оценкой; нарушения означают ошибку реализации.
    """
    _require_odd_prime(p)
    if k < 1:
        raise InvalidInput("chung_sum_check needs k >= 1")
    table = CharTable(p)
    cells = p ** k
    violations = []
    worst = 0.0
    for trial in range(trials):
        rng = np.random.default_rng(np.random.SeedSequence([seed, trial]))
        q = rng.random() if density is None else density
        members = [rng.random(cells) < q for _ in range(k + 1)]
        total = character_sum(table, k, members)
        bound = chung_bound(p, k, [int(m.sum()) for m in members])
        if bound > 0:
            worst = max(worst, abs(total) / bound)
        if abs(total) > bound + CHUNG_SLACK:
            violations.append({"trial": trial, "sum": total, "bound": bound})
    return {
        "p": p,
        "k": k,
        "trials": trials,
        "violations": violations,
        "max_ratio": worst,
    }

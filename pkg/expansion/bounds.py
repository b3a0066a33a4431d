"""
Оценки в замкнутой форме: λ_k (две стороны), верхняя оценка h^k через степень,
оценка для произведения с симплексом.

Корни возвращаются рациональными отрезками-включениями ширины не более 10^-9.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, Optional, Union

from utils.errors import DegenerateSpace, InvalidInput

from .cheeger import cheeger_co

Number = Union[int, Fraction]
SQRT_SCALE = 10 ** 9


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    @classmethod
    def exact(cls, x: Number) -> "Interval":
        return cls(Fraction(x), Fraction(x))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x: Number) -> bool:
        return self.lo <= x <= self.hi

    def _lift(self, other) -> "Interval":
        return other if isinstance(other, Interval) else Interval.exact(other)

    def __add__(self, other) -> "Interval":
        o = self._lift(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other) -> "Interval":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Interval":
        return self._lift(other) - self

    def __mul__(self, other) -> "Interval":
        o = self._lift(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def to_dict(self) -> Dict[str, str]:
        return {"lo": str(self.lo), "hi": str(self.hi)}


def sqrt_enclosure(x: Number) -> Interval:
    """√x с шагом 1/(знаменатель·10^9); точный ответ для полных квадратов."""
    x = Fraction(x)
    if x < 0:
        raise InvalidInput(f"square root of a negative number {x}")
    a, b = x.numerator, x.denominator
    target = a * b * SQRT_SCALE * SQRT_SCALE
    r = isqrt(target)
    scale = b * SQRT_SCALE
    if r * r == target:
        return Interval.exact(Fraction(r, scale))
    return Interval(Fraction(r, scale), Fraction(r + 1, scale))


def sqrt_interval(iv: Interval) -> Interval:
    return Interval(sqrt_enclosure(iv.lo).lo, sqrt_enclosure(iv.hi).hi)


def root_2k(x: Number, times: int) -> Interval:
    """x^{1/2^times} повторным извлечением корня."""
    out = Interval.exact(x)
    for _ in range(times):
        out = sqrt_interval(out)
    return out


def bound_blam(f_k: int, f_km1: int) -> Dict[str, Any]:
    """
    (1 − 20√(f_{k−1}/f_k))·f_k/2 ≤ λ_k ≤ f_k/2.

    Нижняя оценка вакуумна, если её отрезок не лежит целиком выше нуля.
    failure_probability - (4/5)^{f_{k−1}} из вероятностного аргумента.
    """
    if f_k <= 0 or f_km1 <= 0:
        raise InvalidInput("bound_blam needs positive f_k and f_{k-1}")
    half = Fraction(f_k, 2)
    lower = (1 - 20 * sqrt_enclosure(Fraction(f_km1, f_k))) * half
    return {
        "lower": lower,
        "upper": half,
        "vacuous": lower.lo <= 0,
        "failure_probability": Fraction(4, 5) ** f_km1,
    }


def bound_uphk(D: int, k: int) -> Dict[str, Any]:
    """(1 + 50√((k+1)/D))·D/(k+2); hypothesis - выполнено ли D ≥ 40²(k+1)."""
    if D <= 0 or k < 0:
        raise InvalidInput("bound_uphk needs D > 0 and k >= 0")
    value = (1 + 50 * sqrt_enclosure(Fraction(k + 1, D))) * Fraction(D, k + 2)
    return {"value": value, "hypothesis": D >= 1600 * (k + 1)}


def bound_prod(h: Optional[Number], n: int, k: int) -> Fraction:
    """min{h^k(X), max{1, n/(k+2)}}; h=None означает +∞ (C^k(X) = B^k(X))."""
    if n < 2 or k < 0:
        raise InvalidInput("bound_prod needs n >= 2 and k >= 0")
    cap = max(Fraction(1), Fraction(n, k + 2))
    return cap if h is None else min(Fraction(h), cap)


def bound_prod_gromov(h: Optional[Number], n: int, k: int) -> Fraction:
    """Более слабая форма min{h^k(X), (n−k−1)/(k+2)}."""
    if n < 2 or k < 0:
        raise InvalidInput("bound_prod_gromov needs n >= 2 and k >= 0")
    cap = Fraction(n - k - 1, k + 2)
    return cap if h is None else min(Fraction(h), cap)


def verify_product_bound(x, n: int, k: int, budget: Optional[int] = None,
                         workers: int = 1) -> Dict[str, Any]:
    """Считает h^k(X × Δ^{n−1}) и min{h^k(X), max{1, n/(k+2)}} точно и сравнивает."""
    from complexes.builders import product_with_simplex

    try:
        h_x: Optional[Fraction] = cheeger_co(x, k, budget, workers).value
    except DegenerateSpace:
        h_x = None
    product = product_with_simplex(x, n)
    try:
        left: Optional[Fraction] = cheeger_co(product, k, budget, workers).value
    except DegenerateSpace:
        left = None
    right = bound_prod(h_x, n, k)
    return {
        "complex": x.name,
        "n": n,
        "k": k,
        "h_x": h_x,
        "h_product": left,
        "bound": right,
        "gromov_bound": bound_prod_gromov(h_x, n, k),
        "passed": left is None or left >= right,
    }

"""
Нормы, систолические и косистолические нормы цепей и коцепей.
"""
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

import numpy as np

from algebra.gf2 import BitVec, CosetProblem, coset_min_weight, reduce_vector
from complexes.cells import as_view
from utils.config import DEFAULT_BUDGET
from utils.errors import BudgetExceeded, InvalidInput

from .chains import Chain, Cochain, Source


def norm(v) -> int:
    return v.weight()


def is_coboundary(phi: Cochain) -> bool:
    reduced, pivots, _ = phi.view.coboundary_space(phi.k)
    return reduce_vector(reduced, pivots, phi.bits.bits) == 0


def is_boundary(c: Chain) -> bool:
    reduced, pivots, _ = c.view.boundary_space(c.k)
    return reduce_vector(reduced, pivots, c.bits.bits) == 0


def cosystolic_norm(phi: Cochain, budget: Optional[int] = None,
                    workers: int = 1) -> Tuple[int, Cochain]:
    """‖φ‖_csy = min ‖φ + dψ‖ и косистолическая форма, на которой он достигается."""
    reduced, _, _ = phi.view.coboundary_space(phi.k)
    w, bits = coset_min_weight(CosetProblem(phi.length, reduced, phi.bits), budget, workers)
    return w, Cochain(phi.view, phi.k, bits)


def systolic_norm(c: Chain, budget: Optional[int] = None,
                  workers: int = 1) -> Tuple[int, Chain]:
    reduced, _, _ = c.view.boundary_space(c.k)
    w, bits = coset_min_weight(CosetProblem(c.length, reduced, c.bits), budget, workers)
    return w, Chain(c.view, c.k, bits)


def random_cochain(source: Source, k: int, rng: np.random.Generator) -> Cochain:
    view = as_view(source)
    length = view.dim(k)
    draws = rng.integers(0, 2, size=length)
    bits = 0
    for i, b in enumerate(draws):
        if b:
            bits |= 1 << i
    return Cochain(view, k, BitVec(length, bits))


def random_chain(source: Source, k: int, rng: np.random.Generator) -> Chain:
    phi = random_cochain(source, k, rng)
    return Chain(phi.view, k, phi.bits)


def random_cosystole_stats(source: Source, k: int, trials: int = 100, seed: int = 0,
                           budget: Optional[int] = None) -> Dict[str, Any]:
    """
    Статистика ‖φ‖_csy / (f_k/2) для равномерно случайных k-коцепей.

    below_threshold - доля коцепей, у которых ‖φ‖_csy не дотягивает до нижней оценки
    λ_k из bound_blam (при вакуумной оценке она нулевая).
    """
    from .bounds import bound_blam

    view = as_view(source)
    budget = DEFAULT_BUDGET if budget is None else budget
    _, _, rank = view.coboundary_space(k)
    if trials * (1 << rank) > budget:
        raise BudgetExceeded(trials * (1 << rank), budget, "random cosystole sampling")
    f_k, f_km1 = view.dim(k), view.dim(k - 1)
    if f_k == 0:
        raise InvalidInput(f"no {k}-cells in {view.name}")
    half = Fraction(f_k, 2)
    threshold = bound_blam(f_k, max(f_km1, 1))["lower"].lo if f_km1 else Fraction(0)
    rng = np.random.default_rng(seed)
    ratios = []
    below = 0
    for _ in range(trials):
        value, _ = cosystolic_norm(random_cochain(view, k, rng), budget)
        ratios.append(Fraction(value) / half)
        if value < threshold:
            below += 1
    return {
        "k": k,
        "f_k": f_k,
        "trials": trials,
        "mean": float(sum(ratios, Fraction(0)) / trials) if trials else 0.0,
        "min": min(ratios) if ratios else None,
        "max": max(ratios) if ratios else None,
        "threshold": threshold,
        "below_threshold": Fraction(below, trials) if trials else Fraction(0),
    }

"""
Нижние оценки косистолической нормы через детектирующие циклы.
"""
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from complexes.builders import hypercube, simplex_skeleton
from complexes.cells import ChainView, ComplexZ2, as_view
from expansion.chains import Chain, Cochain, boundary, evaluate
from utils.errors import InvalidInput, NotACycle, ZeroEvaluation

from .piercing import piercing_number


@dataclass(frozen=True)
class CycleFamily:
    view: ChainView
    k: int
    cycles: Tuple[Chain, ...]
    supports: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        for i, c in enumerate(self.cycles):
            if c.view is not self.view or c.k != self.k:
                raise InvalidInput(f"family member {i} is not a {self.k}-chain of {self.view.name}")
            if not boundary(c).is_zero():
                raise NotACycle(i)
        object.__setattr__(self, "supports", tuple(c.bits.bits for c in self.cycles))

    def __len__(self) -> int:
        return len(self.cycles)

    def support_sets(self) -> List[List[int]]:
        return [c.bits.indices() for c in self.cycles]

    def to_dict(self) -> Dict[str, Any]:
        return {"k": self.k, "supports": [c.bits.to_hex() for c in self.cycles]}


def boundary_family(view: ChainView, k: int, simplices: Sequence[Tuple[int, ...]]) -> CycleFamily:
    """Семейство ∂τ для (k+1)-симплексов τ."""
    cycles = tuple(boundary(Chain.from_labels(view, k + 1, [s])) for s in simplices)
    return CycleFamily(view, k, cycles)


def cycle_detection_bound(phi: Cochain, fam: CycleFamily,
                          budget: Optional[int] = None) -> Tuple[int, List[int]]:
    """
    τ({supp α_i}) - гарантированная нижняя оценка ‖φ‖_csy.

    Возвращает оценку и протыкающее множество (индексы k-клеток).
    """
    if phi.k != fam.k:
        raise InvalidInput(f"cochain of dimension {phi.k} against a {fam.k}-cycle family")
    for i, c in enumerate(fam.cycles):
        if not evaluate(phi, c):
            raise ZeroEvaluation(i)
    tau, witness = piercing_number(fam.support_sets(), budget)
    return tau, sorted(witness)


def tripartite_example(m: int, k: int) -> Tuple[ComplexZ2, Cochain, CycleFamily]:
    """
    Полный (k+1)-остов на n = (k+2)m вершинах, φ = S* для S = V_0 × … × V_k и
    семейство ∂[v_0..v_{k+1}] с Σ r_i ≡ 0 (mod m); носители попарно не пересекаются.
    """
    if m < 2 or k < 0:
        raise InvalidInput("tripartite example needs m >= 2 and k >= 0")
    n = (k + 2) * m
    x = simplex_skeleton(n, k + 1)
    view = as_view(x)
    parts = [[i * m + r for r in range(m)] for i in range(k + 2)]
    s_cells = [tuple(choice) for choice in product(*parts[:k + 1])]
    phi = Cochain.from_labels(view, k, s_cells)
    tops = []
    for residues in product(range(m), repeat=k + 1):
        last = (-sum(residues)) % m
        tops.append(tuple(parts[i][r] for i, r in enumerate(residues)) + (parts[k + 1][last],))
    return x, phi, boundary_family(view, k, tops)


def hypercube_witness(d: int, k: int) -> Tuple[ComplexZ2, Cochain, CycleFamily]:
    """
    Коцепь E клеток (x̄, *^k, −) на Q_d и непересекающиеся детектирующие циклы ∂(x̄, *^{k+1}).

    ‖E‖_csy = ‖dE‖ = 2^{d−k−1}, так что h^k(Q_d) ≤ 1.
    """
    if not 0 <= k <= d - 1:
        raise InvalidInput(f"hypercube witness needs 0 <= k <= d-1, got d={d}, k={k}")
    x = hypercube(d)
    view = as_view(x)
    prefixes = ["".join(w) for w in product("-+", repeat=d - k - 1)]
    phi = Cochain.from_labels(view, k, [p + "*" * k + "-" for p in prefixes])
    cycles = tuple(boundary(Chain.from_labels(view, k + 1, [p + "*" * (k + 1)])) for p in prefixes)
    return x, phi, CycleFamily(view, k, cycles)


def triangle_family(view: ChainView, phi: Cochain) -> CycleFamily:
    """Границы треугольников ∂[x, y, z], на которых 1-коцепь φ равна 1."""
    x = view.complex
    chosen = []
    for tri in combinations(range(x.f(0)), 3):
        if not x.contains(2, tri):
            continue
        c = boundary(Chain.from_labels(view, 2, [tri]))
        if evaluate(phi, c):
            chosen.append(c)
    return CycleFamily(view, 1, tuple(chosen))

"""
Нижние оценки h^k через коцепную гомотопию.

Схема - вероятностное пространство S и цепи c_{s,σ} для σ ∈ X(k) ∪ X(k−1), у которых
∂c_{s,σ} = σ + Σ_j c_{s,σ_j} для всех σ ∈ X(k). Тогда
h^k(X) ≥ 1 / max_τ E[δ_s(τ)], где δ_s(τ) - число σ ∈ X(k) с τ ∈ supp c_{s,σ}.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Hashable, List, Sequence, Tuple

from complexes.builders import cone_closure
from complexes.cells import ChainView, ComplexZ2, Label, as_view
from expansion.chains import Chain, boundary
from utils.errors import DegenerateSpace, FillIdentityViolated, InvalidInput

ChainKey = Tuple[Hashable, int, Label]


@dataclass
class HomotopyScheme:
    view: ChainView
    k: int
    samples: Tuple[Hashable, ...]
    weights: Tuple[Fraction, ...]
    chains: Dict[ChainKey, Chain]

    def __post_init__(self):
        if len(self.samples) != len(self.weights) or not self.samples:
            raise InvalidInput("scheme needs one weight per sample and at least one sample")
        if sum(self.weights, Fraction(0)) != 1 or any(w < 0 for w in self.weights):
            raise InvalidInput("scheme weights must be non-negative and sum to 1")

    @classmethod
    def uniform(cls, view: ChainView, k: int, samples: Sequence[Hashable],
                chains: Dict[ChainKey, Chain]) -> "HomotopyScheme":
        w = Fraction(1, len(samples)) if samples else Fraction(0)
        return cls(view, k, tuple(samples), tuple(w for _ in samples), chains)

    def chain(self, s: Hashable, dim: int, label: Label) -> Chain:
        try:
            return self.chains[(s, dim, label)]
        except KeyError:
            raise FillIdentityViolated(s, label, "no chain assigned") from None

    def validate(self) -> None:
        """Проверяет тождество заполнения для всех (s, σ), σ ∈ X(k)."""
        x = self.view.complex
        k = self.k
        for s in self.samples:
            for sigma in self.view.labels(k):
                lhs = boundary(self.chain(s, k, sigma))
                acc = Chain.from_labels(self.view, k, [sigma]).bits.bits
                for face in x.faces(k, x.index(k, sigma)):
                    acc ^= self.chain(s, k - 1, x.cells(k - 1)[face]).bits.bits
                if lhs.bits.bits != acc:
                    raise FillIdentityViolated(s, sigma)

    def deltas(self) -> List[Fraction]:
        """E[δ_s(τ)] для каждой (k+1)-клетки τ."""
        out = [Fraction(0)] * self.view.dim(self.k + 1)
        for s, w in zip(self.samples, self.weights):
            for sigma in self.view.labels(self.k):
                for t in self.chain(s, self.k, sigma).bits.indices():
                    out[t] += w
        return out

    def delta_counts(self) -> List[int]:
        """δ(τ) = Σ_s δ_s(τ)."""
        out = [0] * self.view.dim(self.k + 1)
        for s in self.samples:
            for sigma in self.view.labels(self.k):
                for t in self.chain(s, self.k, sigma).bits.indices():
                    out[t] += 1
        return out

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "samples": [repr(s) for s in self.samples],
            "weights": [str(w) for w in self.weights],
            "chains": len(self.chains),
        }


def homotopy_bound(scheme: HomotopyScheme, check: bool = True) -> Fraction:
    """(max_τ E[δ_s(τ)])^{−1}; при check=True сначала проверяется тождество заполнения."""
    if check:
        scheme.validate()
    deltas = scheme.deltas()
    peak = max(deltas, default=Fraction(0))
    if peak == 0:
        raise DegenerateSpace(f"scheme on {scheme.view.name} touches no {scheme.k + 1}-cell")
    return 1 / peak


def uniform_bound(scheme: HomotopyScheme, check: bool = True) -> Fraction:
    """|S| / max_τ δ(τ) для равномерной меры."""
    if check:
        scheme.validate()
    peak = max(scheme.delta_counts(), default=0)
    if peak == 0:
        raise DegenerateSpace(f"scheme on {scheme.view.name} touches no {scheme.k + 1}-cell")
    return Fraction(len(scheme.samples), peak)


def _cone_chain(view: ChainView, apex: int, dim: int, sigma: Tuple[int, ...]) -> Chain:
    if apex in sigma:
        return Chain.zeros(view, dim + 1)
    return Chain.from_labels(view, dim + 1, [tuple(sorted(sigma + (apex,)))])


def cone_scheme(x: ComplexZ2, k: int, apexes: Sequence[int]) -> HomotopyScheme:
    """
    Равномерная схема из конусов: c_{a,σ} = a∗σ (ноль, если a ∈ σ).

    X должен быть замкнут относительно взятия конуса с каждой вершиной a
    на симплексах размерностей k−1 и k.
    """
    if not x.reduced or not x.is_simplicial():
        raise InvalidInput("cone schemes need a reduced simplicial complex")
    if not apexes:
        raise InvalidInput("cone scheme needs at least one apex")
    view = as_view(x)
    chains: Dict[ChainKey, Chain] = {}
    for a in apexes:
        if not x.contains(0, (a,)):
            raise InvalidInput(f"apex {a} is not a vertex of {x.name}")
        missing = [s for s in cone_closure(x, a) if len(s) - 1 in (k - 1, k)]
        if missing:
            raise FillIdentityViolated(a, missing[0], "cone over the apex leaves the complex")
        for dim in (k - 1, k):
            for sigma in x.cells(dim):
                chains[(a, dim, sigma)] = _cone_chain(view, a, dim, sigma)
    return HomotopyScheme.uniform(view, k, list(apexes), chains)

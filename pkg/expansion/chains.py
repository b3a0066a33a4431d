"""
Цепи и коцепи как битовые векторы над клетками одной размерности (комплекса или пары).
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Union

from algebra.gf2 import BitVec, xor_rows
from complexes.cells import ChainView, ComplexZ2, Label, RelativePair, as_view
from complexes.duality import dual_pair
from utils.errors import InvalidInput

Source = Union[ComplexZ2, RelativePair, ChainView]


@dataclass(frozen=True, eq=False)
class GradedVector:
    view: ChainView
    k: int
    bits: BitVec

    def __post_init__(self):
        if not -1 <= self.k <= max(self.view.top_dim, -1) + 1:
            raise InvalidInput(f"dimension {self.k} out of range for {self.view.name}")
        if self.bits.length != self.view.dim(self.k):
            raise InvalidInput(f"vector length {self.bits.length} != {self.view.dim(self.k)} "
                               f"cells of dimension {self.k}")

    @classmethod
    def zeros(cls, source: Source, k: int):
        view = as_view(source)
        return cls(view, k, BitVec.zeros(view.dim(k)))

    @classmethod
    def from_bits(cls, source: Source, k: int, bits: int):
        view = as_view(source)
        return cls(view, k, BitVec(view.dim(k), bits))

    @classmethod
    def from_labels(cls, source: Source, k: int, labels: Iterable[Label]):
        view = as_view(source)
        return cls(view, k, BitVec.from_indices(view.dim(k), (view.index_of(k, lab) for lab in labels)))

    @property
    def length(self) -> int:
        return self.bits.length

    def weight(self) -> int:
        return self.bits.weight()

    def support(self) -> List[Label]:
        labels = self.view.labels(self.k)
        return [labels[i] for i in self.bits.indices()]

    def is_zero(self) -> bool:
        return self.bits.bits == 0

    def _same_space(self, other: "GradedVector") -> None:
        if other.view is not self.view or other.k != self.k:
            raise InvalidInput("vectors live on different cell spaces")

    def __add__(self, other):
        self._same_space(other)
        return type(self)(self.view, self.k, self.bits ^ other.bits)

    def __eq__(self, other) -> bool:
        return (type(other) is type(self) and other.view is self.view
                and other.k == self.k and other.bits == self.bits)

    def __hash__(self) -> int:
        return hash((id(self.view), self.k, self.bits))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(k={self.k}, weight={self.weight()}, on={self.view.name!r})"


class Cochain(GradedVector):
    """φ ∈ C^k(X, Y): функция на активных k-клетках."""


class Chain(GradedVector):
    """c ∈ C_k(X, Y)."""


def _check_range(v: GradedVector) -> None:
    if not -1 <= v.k <= v.view.top_dim:
        raise InvalidInput(f"dimension {v.k} out of range for {v.view.name}")


def coboundary(phi: Cochain) -> Cochain:
    _check_range(phi)
    bits = xor_rows(phi.view.coboundary_rows(phi.k), phi.bits.bits)
    return Cochain(phi.view, phi.k + 1, BitVec(phi.view.dim(phi.k + 1), bits))


def boundary(c: Chain) -> Chain:
    _check_range(c)
    if c.k == -1:
        return Chain(c.view, -1, BitVec.zeros(c.view.dim(-1)))
    bits = xor_rows(c.view.boundary_rows(c.k), c.bits.bits)
    return Chain(c.view, c.k - 1, BitVec(c.view.dim(c.k - 1), bits))


def evaluate(phi: Cochain, c: Chain) -> int:
    """⟨φ, c⟩ ∈ {0, 1}."""
    if phi.view.complex is not c.view.complex or phi.k != c.k or phi.length != c.length:
        raise InvalidInput("cochain and chain live on different cell spaces")
    return (phi.bits.bits & c.bits.bits).bit_count() & 1


def complement(simplex: Iterable[int], n: int) -> tuple:
    members = set(simplex)
    return tuple(v for v in range(n) if v not in members)


def alexander_map(c: Chain, n: int, target: Optional[ChainView] = None) -> Cochain:
    """
    Изоморфизм C_k(X, Y) → C^{n-k-2}(Y∨, X∨): σ ↦ (дополнение σ)*.

    target - вид пары (Y∨, X∨); если не задан, строится по паре цепи.
    """
    if target is None:
        pair = c.view.pair
        if pair is None:
            x = c.view.complex
            y = ComplexZ2("void", [], [], reduced=x.reduced, empty_cell=False)
        else:
            x, y = pair.ambient, pair.subcomplex()
        target = as_view(dual_pair(x, y, n))
    dim = n - c.k - 2
    indices = [target.index_of(dim, complement(label, n)) for label in c.support()]
    return Cochain(target, dim, BitVec.from_indices(target.dim(dim), indices))

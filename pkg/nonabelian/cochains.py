"""
G-значные 1-коцепи на симплициальном комплексе, кограница d₁ и действие C⁰(X; G).

Ребро хранится как (u, v) с u < v; значение на (v, u) - обратный элемент.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from complexes.cells import ComplexZ2
from expansion.chains import Cochain
from utils.errors import InvalidInput

from .groups import FiniteGroup

Edge = Tuple[int, int]
Triangle = Tuple[int, int, int]
VertexMap = Sequence[int]


def _check_host(x: ComplexZ2) -> None:
    if not x.is_simplicial():
        raise InvalidInput(f"{x.name} is not simplicial")
    if x.top_dim > 2:
        raise InvalidInput("non-abelian cochains need a complex of dimension <= 2")
    if x.cells(0) != tuple((i,) for i in range(x.f(0))):
        raise InvalidInput("vertices must be numbered 0..f0-1")


@dataclass(frozen=True)
class NonAbCochain1:
    complex: ComplexZ2
    group: FiniteGroup
    values: Tuple[int, ...]
    _edge_index: Dict[Edge, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.values) != self.complex.f(1):
            raise InvalidInput(f"expected {self.complex.f(1)} edge values, got {len(self.values)}")
        if any(not 0 <= g < self.group.order for g in self.values):
            raise InvalidInput(f"values must be elements of {self.group.name}")
        object.__setattr__(self, "_edge_index", {e: i for i, e in enumerate(self.complex.cells(1))})

    @classmethod
    def identity(cls, x: ComplexZ2, group: FiniteGroup) -> "NonAbCochain1":
        _check_host(x)
        return cls(x, group, tuple(group.identity for _ in range(x.f(1))))

    @classmethod
    def from_edges(cls, x: ComplexZ2, group: FiniteGroup, assignment: Dict[Edge, int]) -> "NonAbCochain1":
        """Значения на ориентированных рёбрах; не указанные рёбра получают единицу."""
        _check_host(x)
        values = [group.identity] * x.f(1)
        index = {e: i for i, e in enumerate(x.cells(1))}
        for (u, v), g in assignment.items():
            if (min(u, v), max(u, v)) not in index:
                raise InvalidInput(f"({u}, {v}) is not an edge of {x.name}")
            values[index[(min(u, v), max(u, v))]] = g if u < v else group.inv(g)
        return cls(x, group, tuple(values))

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return self.complex.cells(1)

    def value(self, u: int, v: int) -> int:
        """φ(u, v) с φ(v, u) = φ(u, v)^{-1}."""
        if u < v:
            return self.values[self._edge_index[(u, v)]]
        return self.group.inv(self.values[self._edge_index[(v, u)]])

    def support(self) -> List[Edge]:
        e = self.group.identity
        return [edge for edge, g in zip(self.edges, self.values) if g != e]

    def norm(self) -> int:
        return len(self.support())

    def to_dict(self) -> Dict[str, object]:
        return {"group": self.group.name, "values": list(self.values)}


def d1(phi: NonAbCochain1) -> Dict[Triangle, int]:
    """(d₁φ)(u, v, w) = φ(u, v) φ(v, w) φ(w, u) для u < v < w."""
    g = phi.group
    out = {}
    for u, v, w in phi.complex.cells(2):
        out[(u, v, w)] = g.mul(g.mul(phi.value(u, v), phi.value(v, w)), phi.value(w, u))
    return out


def d1_norm(phi: NonAbCochain1) -> int:
    e = phi.group.identity
    return sum(1 for g in d1(phi).values() if g != e)


def is_cocycle(phi: NonAbCochain1) -> bool:
    return d1_norm(phi) == 0


def act(psi: VertexMap, phi: NonAbCochain1) -> NonAbCochain1:
    """(ψ.φ)(u, v) = ψ(u) φ(u, v) ψ(v)^{-1}."""
    if len(psi) != phi.complex.f(0):
        raise InvalidInput(f"vertex map needs {phi.complex.f(0)} values")
    g = phi.group
    values = tuple(g.mul(g.mul(psi[u], h), g.inv(psi[v])) for (u, v), h in zip(phi.edges, phi.values))
    return NonAbCochain1(phi.complex, g, values)


def multiply_maps(group: FiniteGroup, psi1: VertexMap, psi2: VertexMap) -> Tuple[int, ...]:
    """Поточечное произведение (ψ₁ψ₂)(v) = ψ₁(v)ψ₂(v)."""
    return tuple(group.mul(a, b) for a, b in zip(psi1, psi2))


def one_skeleton(x: ComplexZ2) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(x.f(0)))
    graph.add_edges_from(x.cells(1))
    return graph


def spanning_forest(x: ComplexZ2) -> List[Edge]:
    """Рёбра BFS-леса из наименьшей вершины каждой компоненты (на полном графе - звезда)."""
    graph = one_skeleton(x)
    tree = []
    for component in sorted(nx.connected_components(graph), key=min):
        for u, v in nx.bfs_edges(graph, min(component), sort_neighbors=sorted):
            tree.append((u, v))
    return tree


def tree_gauge(phi: NonAbCochain1) -> Tuple[int, ...]:
    """ψ, при котором ψ.φ ≡ 1 на остовном лесе: ψ(child) = ψ(parent) φ(parent, child)."""
    g = phi.group
    psi = [g.identity] * phi.complex.f(0)
    for parent, child in spanning_forest(phi.complex):
        psi[child] = g.mul(psi[parent], phi.value(parent, child))
    return tuple(psi)


def random_cochain(x: ComplexZ2, group: FiniteGroup, rng: np.random.Generator) -> NonAbCochain1:
    _check_host(x)
    values = tuple(int(v) for v in rng.integers(0, group.order, size=x.f(1)))
    return NonAbCochain1(x, group, values)


def to_z2_cochain(phi: NonAbCochain1) -> Cochain:
    """Для G порядка 2: та же коцепь как элемент C¹(X; Z₂)."""
    if phi.group.order != 2:
        raise InvalidInput("only groups of order 2 map to Z2 cochains")
    return Cochain.from_labels(phi.complex, 1, phi.support())


def abelian_h1_dim(x: ComplexZ2, m: int) -> int:
    """dim H¹(X; Z_m) для простого m по рангам знаковых матриц d₀ и d₁ над F_m."""
    from complexes.posets import rref_mod_q

    if m < 2 or any(m % d == 0 for d in range(2, int(m ** 0.5) + 1)):
        raise InvalidInput(f"{m} is not prime")
    _check_host(x)
    vertices, edges, triangles = x.f(0), x.cells(1), x.cells(2)
    edge_index = {e: i for i, e in enumerate(edges)}
    d0_rows = []
    for u, v in edges:
        row = [0] * vertices
        row[u] = (row[u] - 1) % m
        row[v] = (row[v] + 1) % m
        d0_rows.append(tuple(row))
    d1_rows = []
    for u, v, w in triangles:
        row = [0] * len(edges)
        row[edge_index[(u, v)]] += 1
        row[edge_index[(v, w)]] += 1
        row[edge_index[(u, w)]] = (row[edge_index[(u, w)]] - 1) % m
        d1_rows.append(tuple(row))
    rank0 = len(rref_mod_q(d0_rows, m)) if d0_rows else 0
    rank1 = len(rref_mod_q(d1_rows, m)) if d1_rows else 0
    return len(edges) - rank0 - rank1

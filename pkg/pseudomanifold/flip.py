"""
Граф флипов чистого n-мерного комплекса и характеризация h^{n-1} через его диаметр.

Вершины графа - n-клетки, рёбра - пары n-клеток с общей (n-1)-гранью.
Для коцепи φ ∈ C^{n-1} подграф G_φ состоит из рёбер, чьи общие грани лежат в supp φ,
и supp dφ совпадает с множеством вершин нечётной степени в G_φ.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import networkx as nx

from complexes.cells import ChainView, ComplexZ2, as_view
from expansion.chains import Cochain, coboundary
from utils.errors import HypothesisFailed, InvalidInput, NotPure


@dataclass
class FlipGraph:
    complex: ComplexZ2
    n: int
    graph: nx.Graph
    ridges: Dict[int, Tuple[int, ...]]
    pseudomanifold: bool
    _diameter: Optional[int] = field(default=None, repr=False)

    @property
    def view(self) -> ChainView:
        return as_view(self.complex)

    def diameter(self) -> int:
        """Диаметр по BFS из каждой вершины."""
        if self._diameter is None:
            if not nx.is_connected(self.graph):
                raise HypothesisFailed(f"flip graph of {self.complex.name} is disconnected")
            self._diameter = max(nx.eccentricity(self.graph).values())
        return self._diameter

    def distances(self, source: int) -> Dict[int, int]:
        return dict(nx.single_source_shortest_path_length(self.graph, source))

    def diametral_pair(self) -> Tuple[int, int]:
        """Лексикографически первая пара вершин на расстоянии диаметра."""
        diam = self.diameter()
        for u in sorted(self.graph.nodes):
            dist = self.distances(u)
            far = sorted(v for v, d in dist.items() if d == diam)
            if far:
                return u, far[0]
        raise HypothesisFailed("flip graph has no diametral pair")

    def to_edgelist_text(self) -> str:
        """Рёбра в формате 'u v ridge=r' по одной паре на строку."""
        lines = nx.generate_edgelist(self.graph, data=["ridge"])
        return "\n".join(lines) + "\n"


def _check_pure(x: ComplexZ2, n: int) -> None:
    for k in range(0, n):
        for i in range(x.f(k)):
            if not x.cofaces(k, i):
                raise NotPure(f"{k}-cell {x.cells(k)[i]!r} of {x.name} is maximal")


def flip_graph(x: ComplexZ2) -> FlipGraph:
    """Граф флипов; pseudomanifold - каждая (n-1)-клетка ровно в двух n-клетках и граф связен."""
    n = x.top_dim
    if n < 1:
        raise InvalidInput("flip graph needs a complex of dimension >= 1")
    _check_pure(x, n)
    graph = nx.Graph()
    graph.add_nodes_from(range(x.f(n)))
    ridges: Dict[int, Tuple[int, ...]] = {}
    exact_two = True
    for r in range(x.f(n - 1)):
        owners = x.cofaces(n - 1, r)
        ridges[r] = owners
        if len(owners) != 2:
            exact_two = False
        for a_pos, a in enumerate(owners):
            for b in owners[a_pos + 1:]:
                graph.add_edge(a, b, ridge=r)
    pseudo = exact_two and nx.is_connected(graph)
    return FlipGraph(x, n, graph, ridges, pseudo)


def cheeger_top_via_diameter(x: ComplexZ2) -> Fraction:
    """h^{n-1}(X) = 2 / diam(G_X) для псевдомногообразия с H^{n-1}(X; Z₂) = 0."""
    fg = flip_graph(x)
    if not fg.pseudomanifold:
        raise HypothesisFailed(f"{x.name} is not a pseudomanifold")
    if as_view(x).cohomology_dim(fg.n - 1) != 0:
        raise HypothesisFailed(f"H^{fg.n - 1}({x.name}; Z2) is nonzero")
    return Fraction(2, fg.diameter())


def _require_absolute(phi: Cochain) -> None:
    if phi.view.pair is not None:
        raise InvalidInput("flip subgraphs are defined for absolute complexes only")


def cochain_flip_subgraph(phi: Cochain, fg: Optional[FlipGraph] = None) -> nx.Graph:
    """G_φ: все n-клетки как вершины и рёбра графа флипов по граням из supp φ."""
    _require_absolute(phi)
    fg = fg or flip_graph(phi.view.complex)
    if not fg.pseudomanifold:
        raise HypothesisFailed(f"{fg.complex.name} is not a pseudomanifold")
    if phi.k != fg.n - 1:
        raise InvalidInput(f"flip subgraph needs an {fg.n - 1}-cochain, got dimension {phi.k}")
    sub = nx.Graph()
    sub.add_nodes_from(fg.graph.nodes)
    for r in phi.bits.indices():
        a, b = fg.ridges[r]
        sub.add_edge(a, b, ridge=r)
    return sub


def odd_degree_support(sub: nx.Graph) -> List[int]:
    return sorted(v for v, deg in sub.degree() if deg % 2)


def odd_degree_identity_holds(phi: Cochain, fg: Optional[FlipGraph] = None) -> bool:
    """supp dφ = {σ : deg_{G_φ}(σ) нечётна}."""
    sub = cochain_flip_subgraph(phi, fg)
    return odd_degree_support(sub) == coboundary(phi).bits.indices()


def is_forest(sub: nx.Graph) -> bool:
    if sub.number_of_nodes() == 0:
        return True
    return nx.is_forest(sub)


def geodesic_cochain(fg: FlipGraph) -> Cochain:
    """Грани вдоль кратчайшего пути между диаметральной парой; ‖dφ‖/‖φ‖ = 2/diam."""
    u, v = fg.diametral_pair()
    path = nx.shortest_path(fg.graph, u, v)
    ridges = [fg.graph.edges[a, b]["ridge"] for a, b in zip(path, path[1:])]
    bits = 0
    for r in ridges:
        bits |= 1 << r
    return Cochain.from_bits(fg.complex, fg.n - 1, bits)

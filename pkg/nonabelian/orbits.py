"""
Перечисление H¹(X; G) как множества орбит, Hom(π₁(X), G)/G по копредставлению
и точная косистолическая норма G-значных коцепей.

Калибровка по остовному лесу оставляет свободными только рёбра вне леса;
оставшееся действие C⁰ - константы на компонентах связности.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple, Union

import networkx as nx

from complexes.cells import ComplexZ2
from utils.config import DEFAULT_BUDGET
from utils.errors import BudgetExceeded, InvalidInput

from .cochains import NonAbCochain1, _check_host, act, d1_norm, one_skeleton, spanning_forest
from .groups import FiniteGroup


@dataclass(frozen=True)
class OrbitSet:
    representatives: Tuple[NonAbCochain1, ...]

    @property
    def count(self) -> int:
        return len(self.representatives)

    def __len__(self) -> int:
        return self.count


def _pow_check(base: int, exponent: int, budget: int, what: str) -> None:
    needed = base ** exponent
    if needed > budget:
        raise BudgetExceeded(needed, budget, what)


class _GaugeSearch:
    """Перебор коциклов, равных единице на остовном лесе, с проверкой треугольников по ходу."""

    def __init__(self, x: ComplexZ2, group: FiniteGroup):
        _check_host(x)
        self.x = x
        self.group = group
        self.edges = x.cells(1)
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        tree = set(spanning_forest(x))
        tree = {(min(u, v), max(u, v)) for u, v in tree}
        self.free = [i for i, e in enumerate(self.edges) if e not in tree]
        position = {edge_i: pos for pos, edge_i in enumerate(self.free)}
        # треугольник проверяется, когда назначено последнее из его свободных рёбер
        self.checks: List[List[Tuple[int, int, int]]] = [[] for _ in self.free]
        self.closed: List[Tuple[int, int, int]] = []
        for u, v, w in x.cells(2):
            ids = (self.edge_index[(u, v)], self.edge_index[(v, w)], self.edge_index[(u, w)])
            last = max((position[i] for i in ids if i in position), default=None)
            if last is None:
                self.closed.append(ids)
            else:
                self.checks[last].append(ids)

    def _triangle_ok(self, values: List[int], ids: Tuple[int, int, int]) -> bool:
        g = self.group
        uv, vw, uw = (values[i] for i in ids)
        return g.mul(g.mul(uv, vw), g.inv(uw)) == g.identity

    def cocycles(self, node_budget: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
        g = self.group
        values = [g.identity] * len(self.edges)
        if not all(self._triangle_ok(values, ids) for ids in self.closed):
            return
        nodes = 0

        def walk(pos: int) -> Iterator[Tuple[int, ...]]:
            nonlocal nodes
            if pos == len(self.free):
                yield tuple(values)
                return
            edge = self.free[pos]
            for h in g.elements():
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    raise BudgetExceeded(nodes, node_budget, "gauge-fixed cocycle search")
                values[edge] = h
                if all(self._triangle_ok(values, ids) for ids in self.checks[pos]):
                    yield from walk(pos + 1)
            values[edge] = g.identity

        yield from walk(0)

    def components(self) -> List[List[int]]:
        """Вершины компонент, содержащих хотя бы одно ребро."""
        graph = one_skeleton(self.x)
        return [sorted(c) for c in sorted(nx.connected_components(graph), key=min) if len(c) > 1]

    def canonical(self, values: Tuple[int, ...], components: List[List[int]]) -> Tuple[int, ...]:
        """Минимум по сопряжению константами на компонентах."""
        g = self.group
        owner = {}
        for ci, comp in enumerate(components):
            for v in comp:
                owner[v] = ci
        best = values
        for consts in product(g.elements(), repeat=len(components)):
            moved = tuple(g.conjugate(consts[owner[u]], h) for (u, _), h in zip(self.edges, values))
            if moved < best:
                best = moved
        return best


def h1_orbits(x: ComplexZ2, group: FiniteGroup, budget: Optional[int] = None) -> OrbitSet:
    """H¹(X; G): коциклы в калибровке леса по модулю остаточного сопряжения."""
    budget = DEFAULT_BUDGET if budget is None else budget
    search = _GaugeSearch(x, group)
    _pow_check(group.order, len(search.free), budget, "H1 enumeration")
    components = search.components()
    _pow_check(group.order, len(components), budget, "residual conjugation")
    seen = set()
    for values in search.cocycles():
        seen.add(search.canonical(values, components))
    reps = tuple(NonAbCochain1(x, group, v) for v in sorted(seen))
    return OrbitSet(reps)


def h1_orbits_raw(x: ComplexZ2, group: FiniteGroup, budget: Optional[int] = None) -> OrbitSet:
    """Прямой перебор Z¹ и полных орбит C⁰; только для крошечных комплексов."""
    budget = DEFAULT_BUDGET if budget is None else budget
    _check_host(x)
    _pow_check(group.order, x.f(1), budget, "raw Z1 enumeration")
    _pow_check(group.order, x.f(0), budget, "raw C0 enumeration")
    gauges = list(product(group.elements(), repeat=x.f(0)))
    seen = set()
    reps = []
    for values in product(group.elements(), repeat=x.f(1)):
        if values in seen:
            continue
        phi = NonAbCochain1(x, group, values)
        if d1_norm(phi):
            continue
        orbit = {act(psi, phi).values for psi in gauges}
        seen |= orbit
        reps.append(NonAbCochain1(x, group, min(orbit)))
    reps.sort(key=lambda c: c.values)
    return OrbitSet(tuple(reps))


def has_nontrivial_h1(x: ComplexZ2, group: FiniteGroup, budget: Optional[int] = None) -> bool:
    """Есть ли коцикл, не эквивалентный единичному; останов на первом найденном."""
    budget = DEFAULT_BUDGET if budget is None else budget
    search = _GaugeSearch(x, group)
    for values in search.cocycles(node_budget=budget):
        if any(h != group.identity for h in values):
            return True
    return False


# --- копредставление π₁ ---------------------------------------------------------

def _require_complete_skeleton(x: ComplexZ2) -> int:
    _check_host(x)
    n = x.f(0)
    if x.cells(1) != tuple(combinations(range(n), 2)):
        raise InvalidInput("the pi1 presentation needs the complete 1-skeleton")
    return n


def pi1_generators(n: int) -> List[Tuple[int, int]]:
    """Порождающие e_ij, 1 ≤ i < j ≤ n-1; e_ji = e_ij^{-1}."""
    return list(combinations(range(1, n), 2))


def hom_pi1_orbits(x: ComplexZ2, group: FiniteGroup, budget: Optional[int] = None) -> int:
    """
    |Hom(π₁(X), G)/G| по образующим e_ij (петля 0 → i → j → 0) и соотношениям:
    e_ij = 1 для треугольника (0, i, j) и e_ij e_jk e_ki = 1 для (i, j, k).
    """
    budget = DEFAULT_BUDGET if budget is None else budget
    n = _require_complete_skeleton(x)
    gens = pi1_generators(n)
    g = group
    triangles = set(x.cells(2))
    forced = {e for e in gens if (0,) + e in triangles}
    free = [e for e in gens if e not in forced]
    _pow_check(g.order, len(free), budget, "Hom(pi1, G) enumeration")
    relations = [t for t in triangles if t[0] != 0]

    def value(assign: Dict[Tuple[int, int], int], i: int, j: int) -> int:
        return assign[(i, j)] if i < j else g.inv(assign[(j, i)])

    seen = set()
    for choice in product(g.elements(), repeat=len(free)):
        assign = {e: g.identity for e in forced}
        assign.update(zip(free, choice))
        if any(g.product([value(assign, i, j), value(assign, j, k), value(assign, k, i)]) != g.identity
               for i, j, k in relations):
            continue
        images = tuple(assign[e] for e in gens)
        seen.add(min(tuple(g.conjugate(c, h) for h in images) for c in g.elements()))
    return len(seen)


# --- косистолическая норма ------------------------------------------------------

def nonab_cosystole(phi: NonAbCochain1, budget: Optional[int] = None) -> Tuple[int, Tuple[int, ...]]:
    """min_ψ ‖ψ.φ‖ по всем ψ ∈ C⁰ (включая значение в базовой вершине) и оптимальный ψ."""
    budget = DEFAULT_BUDGET if budget is None else budget
    x, g = phi.complex, phi.group
    n = x.f(0)
    _pow_check(g.order, n, budget, "non-abelian cosystole search")
    # рёбра, замыкаемые при назначении вершины v (второй конец уже назначен)
    closing: List[List[Tuple[int, int, int]]] = [[] for _ in range(n)]
    for (u, v), h in zip(phi.edges, phi.values):
        closing[v].append((u, v, h))
    best = [phi.norm() + 1, tuple(g.identity for _ in range(n))]
    psi = [g.identity] * n

    def walk(v: int, cost: int) -> None:
        if cost >= best[0]:
            return
        if v == n:
            best[0], best[1] = cost, tuple(psi)
            return
        for a in g.elements():
            psi[v] = a
            extra = sum(1 for u, _, h in closing[v]
                        if g.mul(g.mul(psi[u], h), g.inv(a)) != g.identity)
            walk(v + 1, cost + extra)

    walk(0, 0)
    return best[0], best[1]


def nonab_csy(phi: NonAbCochain1, budget: Optional[int] = None) -> int:
    return nonab_cosystole(phi, budget)[0]


def bw1_check(phi: NonAbCochain1, budget: Optional[int] = None) -> Dict[str, object]:
    """‖d₁φ‖ ≥ n‖φ‖_csy/3 на полном 2-остове n-вершинного симплекса."""
    n = _require_complete_skeleton(phi.complex)
    if phi.complex.f(2) != len(list(combinations(range(n), 3))):
        raise InvalidInput("the inequality is stated for the full 2-skeleton")
    csy = nonab_csy(phi, budget)
    lhs = d1_norm(phi)
    rhs = Fraction(n * csy, 3)
    return {"d1_norm": lhs, "csy": csy, "bound": rhs, "holds": lhs >= rhs, "tight": lhs == rhs}


def union_bound(n: int, group: FiniteGroup, p: Union[float, Fraction],
                budget: Optional[int] = None) -> Union[float, Fraction]:
    """
    Σ (1-p)^{‖d₁φ‖} по нетривиальным классам H¹ полного графа на n вершинах,
    где ‖d₁φ‖ считается по всем треугольникам Δ^{n-1}.
    """
    from complexes.builders import simplex_skeleton

    budget = DEFAULT_BUDGET if budget is None else budget
    if n < 3:
        raise InvalidInput("union bound needs n >= 3")
    full = simplex_skeleton(n, 2)
    gens = pi1_generators(n)
    _pow_check(group.order, len(gens), budget, "union bound enumeration")
    g = group
    q = 1 - p
    total: Union[float, Fraction] = Fraction(0) if isinstance(p, Fraction) else 0.0
    seen = set()
    for images in product(g.elements(), repeat=len(gens)):
        if all(h == g.identity for h in images):
            continue
        canon = min(tuple(g.conjugate(c, h) for h in images) for c in g.elements())
        if canon in seen:
            continue
        seen.add(canon)
        phi = NonAbCochain1.from_edges(full, g, dict(zip(gens, canon)))
        total += q ** d1_norm(phi)
    return total

"""
Частично упорядоченные множества: булева решётка, решётки подпространств F_q^n,
собственная часть, соединения и атомы.
"""
from itertools import combinations, product
from typing import Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from utils.errors import InvalidInput


class Poset:
    """
    Конечное ЧУМ. elements задают порядок вершин order_complex; relations - пары a < b
    (любые, не обязательно покрытия); покрытия вычисляются транзитивной редукцией.
    """

    def __init__(self, elements: Sequence[Hashable], relations: Iterable[Tuple[Hashable, Hashable]],
                 rank: Optional[Dict[Hashable, int]] = None):
        self.elements: Tuple[Hashable, ...] = tuple(elements)
        self._pos = {e: i for i, e in enumerate(self.elements)}
        if len(self._pos) != len(self.elements):
            raise InvalidInput("poset elements must be distinct")
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.elements)))
        for a, b in relations:
            graph.add_edge(self.position(a), self.position(b))
        if not nx.is_directed_acyclic_graph(graph):
            raise InvalidInput("order relation has a cycle")
        reduction = nx.transitive_reduction(graph)
        self.covers: Tuple[Tuple[int, int], ...] = tuple(sorted(reduction.edges()))
        closure = nx.transitive_closure_dag(graph)
        up = [1 << i for i in range(len(self.elements))]
        for a, b in closure.edges():
            up[a] |= 1 << b
        self._up = up
        self._rank: Optional[Tuple[int, ...]] = None
        if rank is not None:
            self._rank = tuple(rank[e] for e in self.elements)
            for a, b in self.covers:
                if self._rank[b] != self._rank[a] + 1:
                    raise InvalidInput(f"rank does not increase by one along {self.elements[a]!r} < {self.elements[b]!r}")

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, e: Hashable) -> int:
        try:
            return self._pos[e]
        except KeyError:
            raise InvalidInput(f"{e!r} is not an element of the poset") from None

    def leq(self, a: Hashable, b: Hashable) -> bool:
        return bool(self._up[self.position(a)] >> self.position(b) & 1)

    def less(self, a: Hashable, b: Hashable) -> bool:
        return a != b and self.leq(a, b)

    def up_mask(self, i: int) -> int:
        return self._up[i]

    def rank_of(self, e: Hashable) -> int:
        if self._rank is None:
            raise InvalidInput("poset has no rank function")
        return self._rank[self.position(e)]

    @property
    def ranked(self) -> bool:
        return self._rank is not None

    def minimal(self) -> List[Hashable]:
        has_lower = {b for _, b in self.covers}
        return [e for i, e in enumerate(self.elements) if i not in has_lower]

    def maximal(self) -> List[Hashable]:
        has_upper = {a for a, _ in self.covers}
        return [e for i, e in enumerate(self.elements) if i not in has_upper]

    def bottom(self) -> Optional[Hashable]:
        low = self.minimal()
        return low[0] if len(low) == 1 else None

    def top(self) -> Optional[Hashable]:
        high = self.maximal()
        return high[0] if len(high) == 1 else None

    def atoms(self) -> List[Hashable]:
        b = self.bottom()
        if b is None:
            return self.minimal()
        i = self.position(b)
        return [self.elements[y] for x, y in self.covers if x == i]

    def atoms_below(self, v: Hashable) -> List[Hashable]:
        return [a for a in self.atoms() if self.leq(a, v)]

    def join(self, a: Hashable, b: Hashable) -> Hashable:
        common = self._up[self.position(a)] & self._up[self.position(b)]
        mask = common
        while mask:
            low = mask & -mask
            c = low.bit_length() - 1
            if self._up[c] & common == common:
                return self.elements[c]
            mask ^= low
        raise InvalidInput(f"{a!r} and {b!r} have no join")

    def meet(self, a: Hashable, b: Hashable) -> Hashable:
        ia, ib = self.position(a), self.position(b)
        common = [c for c in range(len(self.elements)) if self._up[c] >> ia & 1 and self._up[c] >> ib & 1]
        for c in common:
            if all(self._up[d] >> c & 1 for d in common):
                return self.elements[c]
        raise InvalidInput(f"{a!r} and {b!r} have no meet")

    def join_all(self, items: Sequence[Hashable]) -> Hashable:
        if not items:
            b = self.bottom()
            if b is None:
                raise InvalidInput("empty join without a bottom element")
            return b
        out = items[0]
        for x in items[1:]:
            out = self.join(out, x)
        return out

    def maximal_chains(self) -> List[Tuple[int, ...]]:
        """Максимальные цепи как кортежи позиций, снизу вверх."""
        succ: Dict[int, List[int]] = {}
        for a, b in self.covers:
            succ.setdefault(a, []).append(b)
        chains: List[Tuple[int, ...]] = []
        stack = [(self.position(e),) for e in reversed(self.minimal())]
        while stack:
            chain = stack.pop()
            nxt = succ.get(chain[-1])
            if not nxt:
                chains.append(chain)
                continue
            for b in reversed(nxt):
                stack.append(chain + (b,))
        return chains

    def subposet(self, keep: Iterable[Hashable]) -> "Poset":
        keep_set = set(keep)
        kept = [e for e in self.elements if e in keep_set]
        idx = [self.position(e) for e in kept]
        relations = [(self.elements[a], self.elements[b]) for a in idx for b in idx
                     if a != b and self._up[a] >> b & 1]
        rank = {e: self.rank_of(e) for e in kept} if self.ranked else None
        return Poset(kept, relations, rank)


def proper_part(p: Poset) -> Poset:
    """L̄ = L без нуля и единицы."""
    b, t = p.bottom(), p.top()
    if b is None or t is None:
        raise InvalidInput("proper part needs a bounded poset")
    return p.subposet(e for e in p.elements if e != b and e != t)


def chain_poset(labels: Sequence[Hashable]) -> Poset:
    return Poset(labels, list(zip(labels, labels[1:])))


def boolean_lattice(n: int) -> Poset:
    """Подмножества {0..n-1}, метка - отсортированный кортеж; ранг - мощность."""
    if n < 1:
        raise InvalidInput("boolean lattice needs n >= 1")
    elements = [s for size in range(n + 1) for s in combinations(range(n), size)]
    relations = []
    for s in elements:
        for v in range(n):
            if v not in s:
                relations.append((s, tuple(sorted(s + (v,)))))
    return Poset(elements, relations, {s: len(s) for s in elements})


# --- подпространства F_q^n ------------------------------------------------------

Vector = Tuple[int, ...]
Basis = Tuple[Vector, ...]


def rref_mod_q(rows: Iterable[Vector], q: int) -> Basis:
    """Приведённый ступенчатый базис над F_q (q простое)."""
    work = [list(r) for r in rows]
    if not work:
        return ()
    n = len(work[0])
    out: List[List[int]] = []
    col = 0
    while work and col < n:
        pivot = next((r for r in work if r[col] % q), None)
        if pivot is None:
            col += 1
            continue
        work.remove(pivot)
        inv = pow(pivot[col], q - 2, q)
        pivot = [(x * inv) % q for x in pivot]
        work = [[(x - r[col] * y) % q for x, y in zip(r, pivot)] for r in work]
        work = [r for r in work if any(r)]
        out = [[(x - r[col] * y) % q for x, y in zip(r, pivot)] for r in out]
        out.append(pivot)
        col += 1
    return tuple(tuple(r) for r in out)


def span_mod_q(basis: Basis, q: int, n: int) -> FrozenSet[Vector]:
    vectors = set()
    for coeffs in product(range(q), repeat=len(basis)):
        v = [0] * n
        for c, row in zip(coeffs, basis):
            if c:
                v = [(x + c * y) % q for x, y in zip(v, row)]
        vectors.add(tuple(v))
    return frozenset(vectors)


def subspace_lattice(q: int, n: int) -> Poset:
    """Все подпространства F_q^n по включению; метка - RREF-базис, ранг - размерность."""
    if q not in (2, 3) or not 2 <= n <= 4:
        raise InvalidInput("subspace lattice supports q in {2, 3} and 2 <= n <= 4")
    vectors = [v for v in product(range(q), repeat=n) if any(v)]
    levels: List[Dict[Basis, FrozenSet[Vector]]] = [{(): frozenset({(0,) * n})}]
    relations = []
    for d in range(n):
        nxt: Dict[Basis, FrozenSet[Vector]] = {}
        for basis, space in levels[-1].items():
            for v in vectors:
                if v in space:
                    continue
                bigger = rref_mod_q(basis + (v,), q)
                if bigger not in nxt:
                    nxt[bigger] = span_mod_q(bigger, q, n)
                relations.append((basis, bigger))
        levels.append(nxt)
    elements = [b for level in levels for b in sorted(level)]
    rank = {b: d for d, level in enumerate(levels) for b in level}
    return Poset(elements, set(relations), rank)


def subspace_image(basis: Basis, g: Sequence[Sequence[int]], q: int) -> Basis:
    """Образ подпространства под действием матрицы g (v ↦ g·v)."""
    images = [tuple(sum(g[i][j] * v[j] for j in range(len(v))) % q for i in range(len(g)))
              for v in basis]
    return rref_mod_q(images, q)

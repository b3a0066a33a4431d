"""
Конечные группы таблицей умножения с элементами 0..|G|-1 (0 - единица).
"""
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import primerange

from utils.errors import InvalidInput, InvariantBreach

Permutation = Tuple[int, ...]
EXHAUSTIVE_ASSOCIATIVITY = 24
SAMPLED_TRIPLES = 2000
PRIMES_UP_TO_61 = tuple(int(p) for p in primerange(2, 62))


@dataclass(frozen=True)
class FiniteGroup:
    name: str
    table: Tuple[Tuple[int, ...], ...]
    identity: int = 0
    inverses: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n = len(self.table)
        if n == 0 or any(len(row) != n for row in self.table):
            raise InvalidInput(f"{self.name}: multiplication table must be square and non-empty")
        e = self.identity
        for a in range(n):
            if self.table[e][a] != a or self.table[a][e] != a:
                raise InvalidInput(f"{self.name}: {e} is not a two-sided identity")
        inverses = []
        for a in range(n):
            row = self.table[a]
            try:
                inv = row.index(e)
            except ValueError:
                raise InvalidInput(f"{self.name}: element {a} has no inverse") from None
            if self.table[inv][a] != e:
                raise InvalidInput(f"{self.name}: left and right inverses of {a} differ")
            inverses.append(inv)
        object.__setattr__(self, "inverses", tuple(inverses))
        self._check_associative()

    def _check_associative(self) -> None:
        n = self.order
        t = self.table
        if n <= EXHAUSTIVE_ASSOCIATIVITY:
            triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
        else:
            rng = np.random.default_rng(n)
            triples = (tuple(int(v) for v in rng.integers(0, n, size=3)) for _ in range(SAMPLED_TRIPLES))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise InvalidInput(f"{self.name}: ({a}{b}){c} != {a}({b}{c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def product(self, items: Sequence[int]) -> int:
        out = self.identity
        for g in items:
            out = self.table[out][g]
        return out

    def conjugate(self, g: int, h: int) -> int:
        """g h g^{-1}."""
        return self.table[self.table[g][h]][self.inverses[g]]

    @property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a∘b)(i) = a(b(i))."""
    return tuple(a[i] for i in b)


def from_permutations(name: str, generators: Sequence[Permutation]) -> FiniteGroup:
    """Замыкание набора перестановок; элемент 0 - тождественная перестановка."""
    if not generators:
        raise InvalidInput("at least one generator is required")
    degree = len(generators[0])
    ident = tuple(range(degree))
    for g in generators:
        if len(g) != degree or sorted(g) != list(ident):
            raise InvalidInput(f"{g!r} is not a permutation of degree {degree}")
    elements: List[Permutation] = [ident]
    index: Dict[Permutation, int] = {ident: 0}
    queue = deque([ident])
    while queue:
        cur = queue.popleft()
        for g in generators:
            nxt = compose(cur, g)
            if nxt not in index:
                index[nxt] = len(elements)
                elements.append(nxt)
                queue.append(nxt)
    table = tuple(tuple(index[compose(a, b)] for b in elements) for a in elements)
    return FiniteGroup(name, table)


def cyclic_group(m: int) -> FiniteGroup:
    if m < 1:
        raise InvalidInput("cyclic group order must be positive")
    return FiniteGroup(f"Z{m}", tuple(tuple((a + b) % m for b in range(m)) for a in range(m)))


def _cycle(points: Sequence[int], degree: int) -> Permutation:
    perm = list(range(degree))
    for a, b in zip(points, list(points[1:]) + [points[0]]):
        perm[a] = b
    return tuple(perm)


def symmetric_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidInput("symmetric group needs n >= 1")
    if n == 1:
        return from_permutations("S1", [(0,)])
    return from_permutations(f"S{n}", [_cycle([0, 1], n), _cycle(list(range(n)), n)])


def alternating_group(n: int) -> FiniteGroup:
    """A_n = ⟨(0 1 2), (0 … n-1)⟩ при нечётном n и ⟨(0 1 2), (1 … n-1)⟩ при чётном."""
    if n < 3:
        raise InvalidInput("alternating group needs n >= 3")
    long_cycle = list(range(n)) if n % 2 else list(range(1, n))
    return from_permutations(f"A{n}", [_cycle([0, 1, 2], n), _cycle(long_cycle, n)])


def _gl32_permutation(matrix: Sequence[Sequence[int]]) -> Permutation:
    """Действие матрицы над F_2 на 7 ненулевых векторах (вектор v ↦ позиция v-1)."""
    images = []
    for v in range(1, 8):
        bits = [(v >> j) & 1 for j in range(3)]
        w = sum((sum(matrix[i][j] * bits[j] for j in range(3)) % 2) << i for i in range(3))
        images.append(w - 1)
    return tuple(images)


def psl27() -> FiniteGroup:
    """PSL(2,7) ≅ GL(3,2), порождённая трансвекцией и циклической перестановкой базиса."""
    transvection = [[1, 1, 0], [0, 1, 0], [0, 0, 1]]
    rotation = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    group = from_permutations("PSL(2,7)", [_gl32_permutation(transvection), _gl32_permutation(rotation)])
    if group.order != 168:
        raise InvariantBreach(f"GL(3,2) closure has order {group.order}, expected 168")
    return group


def simple_groups(max_order: int) -> List[FiniteGroup]:
    """Простые группы порядка ≤ max_order из списка Z_p (p ≤ 61), A5, PSL(2,7)."""
    out = [cyclic_group(p) for p in PRIMES_UP_TO_61 if p <= max_order]
    if max_order >= 60:
        out.append(alternating_group(5))
    if max_order >= 168:
        out.append(psl27())
    return out


def group_by_name(name: str) -> FiniteGroup:
    """Zm, Sn, An или PSL(2,7)."""
    text = name.strip().upper()
    if text in ("PSL(2,7)", "PSL27", "GL(3,2)"):
        return psl27()
    makers = {"Z": cyclic_group, "S": symmetric_group, "A": alternating_group}
    if text[:1] in makers and text[1:].isdigit():
        return makers[text[:1]](int(text[1:]))
    raise InvalidInput(f"unknown group {name!r}; expected Zm, Sn, An or PSL(2,7)")

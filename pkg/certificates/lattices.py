"""
Геометрические решётки: цепи K(b₁, …, b_m), гомотопии c_{s,σ} по порядкам на атомах
и оценка h^{n−3} для однородных решёток.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from complexes.builders import order_complex
from complexes.cells import ChainView, ComplexZ2, as_view
from complexes.posets import Poset, boolean_lattice, proper_part, subspace_image, subspace_lattice
from expansion.chains import Chain
from utils.errors import BudgetExceeded, InvalidInput, NotHomogeneous

from .homotopy import ChainKey, HomotopyScheme

Automorphism = Dict[Hashable, Hashable]
ORDERING_CAP = 50_000


def is_geometric(lattice: Poset) -> bool:
    """Ранжированная атомная решётка с полумодулярным неравенством рангов."""
    if not lattice.ranked or lattice.bottom() is None or lattice.top() is None:
        return False
    atoms = lattice.atoms()
    for e in lattice.elements:
        below = lattice.atoms_below(e)
        if e != lattice.bottom() and lattice.join_all(below) != e:
            return False
    for a in lattice.elements:
        for b in lattice.elements:
            if lattice.rank_of(a) + lattice.rank_of(b) < (lattice.rank_of(lattice.join(a, b))
                                                          + lattice.rank_of(lattice.meet(a, b))):
                return False
    return bool(atoms)


@dataclass(frozen=True)
class LatticeScheme:
    lattice: Poset
    proper: Poset
    complex: ComplexZ2
    view: ChainView
    orderings: Tuple[Tuple[Hashable, ...], ...]

    @property
    def rank(self) -> int:
        return self.lattice.rank_of(self.lattice.top())

    def vertex(self, element: Hashable) -> int:
        return self.proper.position(element)

    def chain_elements(self, label: Tuple[int, ...]) -> List[Hashable]:
        """Вершины симплекса σ как элементы L, по возрастанию."""
        elements = [self.proper.elements[i] for i in label]
        return sorted(elements, key=self.lattice.rank_of)

    def selectors(self, s: int, sigma: Sequence[Hashable]) -> List[Hashable]:
        """a_{s,0}(σ), …, a_{s,k}(σ), a_{s,k+1}(σ) - ≺_s-минимальные атомы под v_i и min A."""
        order = self.orderings[s]
        position = {a: i for i, a in enumerate(order)}
        out = [min(self.lattice.atoms_below(v), key=position.__getitem__) for v in sigma]
        out.append(order[0])
        return out


def _default_order(lattice: Poset) -> Tuple[Hashable, ...]:
    return tuple(lattice.atoms())


def _orbit_orderings(base: Tuple[Hashable, ...], generators: Sequence[Automorphism],
                     cap: int) -> Tuple[Tuple[Hashable, ...], ...]:
    seen = {base: None}
    queue = deque([base])
    while queue:
        cur = queue.popleft()
        for g in generators:
            nxt = tuple(g[a] for a in cur)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise BudgetExceeded(len(seen) + 1, cap, "atom ordering orbit")
                seen[nxt] = None
                queue.append(nxt)
    return tuple(seen)


def lattice_scheme(lattice: Poset, base_order: Optional[Sequence[Hashable]] = None,
                   generators: Sequence[Automorphism] = (), cap: int = ORDERING_CAP) -> LatticeScheme:
    """Порядки ≺_s = s(≺) для s из замыкания генераторов автоморфизмов."""
    if not is_geometric(lattice):
        raise InvalidInput("lattice is not geometric")
    base = tuple(base_order) if base_order is not None else _default_order(lattice)
    if sorted(map(repr, base)) != sorted(map(repr, lattice.atoms())):
        raise InvalidInput("base order must list every atom exactly once")
    proper = proper_part(lattice)
    x = order_complex(proper, name="order-complex(L)")
    return LatticeScheme(lattice, proper, x, as_view(x), _orbit_orderings(base, generators, cap))


def _k_terms(ls: LatticeScheme, atoms: Sequence[Hashable]) -> List[List[Hashable]]:
    """Цепи [b_π(1), b_π(1)∨b_π(2), …] по всем перестановкам."""
    out = []
    for perm in permutations(atoms):
        chain = [perm[0]]
        for b in perm[1:]:
            chain.append(ls.lattice.join(chain[-1], b))
        out.append(chain)
    return out


def _add_simplex(acc: Dict[Tuple[int, ...], int], ls: LatticeScheme, elements: List[Hashable]) -> None:
    bottom, top = ls.lattice.bottom(), ls.lattice.top()
    for e in elements:
        if e == bottom or e == top:
            return
    for lower, upper in zip(elements, elements[1:]):
        if not ls.lattice.less(lower, upper):
            return
    label = tuple(sorted(ls.vertex(e) for e in elements))
    acc[label] = acc.get(label, 0) ^ 1


def _to_chain(ls: LatticeScheme, dim: int, acc: Dict[Tuple[int, ...], int]) -> Chain:
    return Chain.from_labels(ls.view, dim, [label for label, bit in acc.items() if bit])


def join_chain(ls: LatticeScheme, atoms: Sequence[Hashable]) -> Chain:
    """K(b₁, …, b_m) ∈ C_{m−1}(L̄); вырожденные цепи дают ноль."""
    if not atoms or len(atoms) > ls.rank - 1:
        raise InvalidInput(f"K needs between 1 and {ls.rank - 1} atoms")
    acc: Dict[Tuple[int, ...], int] = {}
    for chain in _k_terms(ls, atoms):
        _add_simplex(acc, ls, chain)
    return _to_chain(ls, len(atoms) - 1, acc)


def lattice_chains(ls: LatticeScheme, s: int, sigma: Tuple[int, ...]) -> Chain:
    """c_{s,σ} = Σ_{j=0}^{k+1} K(a_{s,0}, …, a_{s,j}) ∗ [v_j, …, v_k]."""
    k = len(sigma) - 1
    if not -1 <= k <= ls.rank - 3:
        raise InvalidInput(f"simplex dimension {k} outside -1..{ls.rank - 3}")
    vs = ls.chain_elements(sigma)
    a = ls.selectors(s, vs)
    acc: Dict[Tuple[int, ...], int] = {}
    for j in range(k + 2):
        tail = vs[j:]
        for head in _k_terms(ls, a[:j + 1]):
            _add_simplex(acc, ls, head + tail)
    return _to_chain(ls, k + 1, acc)


def lattice_homotopy_scheme(ls: LatticeScheme, k: int) -> HomotopyScheme:
    """Равномерная схема по всем порядкам ls для σ ∈ L̄(k) ∪ L̄(k−1)."""
    if not 0 <= k <= ls.rank - 3:
        raise InvalidInput(f"k must lie in 0..{ls.rank - 3}")
    chains: Dict[ChainKey, Chain] = {}
    for s in range(len(ls.orderings)):
        for dim in (k - 1, k):
            for sigma in ls.complex.cells(dim):
                chains[(s, dim, sigma)] = lattice_chains(ls, s, sigma)
    return HomotopyScheme.uniform(ls.view, k, list(range(len(ls.orderings))), chains)


def _apply(g: Automorphism, ls_proper: Poset, label: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(sorted(ls_proper.position(g[ls_proper.elements[i]]) for i in label))


def is_homogeneous(lattice: Poset, generators: Sequence[Automorphism]) -> bool:
    """Группа, порождённая generators, транзитивна на L̄(n−2)."""
    proper = proper_part(lattice)
    x = order_complex(proper)
    n = lattice.rank_of(lattice.top())
    tops = x.cells(n - 2)
    if not tops:
        return False
    orbit = {tops[0]}
    queue = deque([tops[0]])
    while queue:
        cur = queue.popleft()
        for g in generators:
            nxt = _apply(g, proper, cur)
            if nxt not in orbit:
                orbit.add(nxt)
                queue.append(nxt)
    return len(orbit) == len(tops)


def lattice_bound(lattice: Poset, generators: Sequence[Automorphism]) -> Fraction:
    """f_{n−2}(L̄) / (f_{n−3}(L̄) · Σ_{j=1}^{n−1} j!) для однородной решётки ранга n."""
    if not is_geometric(lattice):
        raise InvalidInput("lattice is not geometric")
    n = lattice.rank_of(lattice.top())
    if n < 3:
        raise InvalidInput("lattice bound needs rank n >= 3")
    if not is_homogeneous(lattice, generators):
        raise NotHomogeneous("automorphisms are not transitive on the top simplices")
    x = order_complex(proper_part(lattice))
    factorials = sum(factorial(j) for j in range(1, n))
    return Fraction(x.f(n - 2), x.f(n - 3) * factorials)


def boolean_automorphisms(n: int) -> List[Automorphism]:
    """Транспозиция (0 1) и цикл (0 1 … n−1), действующие на подмножествах."""
    lattice = boolean_lattice(n)
    perms = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return [{s: tuple(sorted(p[v] for v in s)) for s in lattice.elements} for p in perms]


def _gl_generators(q: int, n: int) -> List[List[List[int]]]:
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    swap = [row[:] for row in ident]
    swap[0], swap[1] = swap[1], swap[0]
    cycle = [[int(j == (i + 1) % n) for j in range(n)] for i in range(n)]
    shear = [row[:] for row in ident]
    shear[0][1] = 1
    gens = [swap, cycle, shear]
    if q > 2:
        scale = [row[:] for row in ident]
        scale[0][0] = 2
        gens.append(scale)
    return gens


def subspace_automorphisms(q: int, n: int) -> List[Automorphism]:
    """Образующие GL(n, q), действующие на решётке подпространств."""
    lattice = subspace_lattice(q, n)
    return [{b: subspace_image(b, g, q) for b in lattice.elements} for g in _gl_generators(q, n)]

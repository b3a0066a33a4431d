"""
Построители комплексов: симплексы, кубы, произведения с симплексом, порядковые
комплексы и комплексы Кокстера типов A и B.
"""
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from utils.config import DEFAULT_BUDGET
from utils.errors import BudgetExceeded, InvalidInput

from .cells import ComplexZ2
from .posets import Poset, boolean_lattice, proper_part

Simplex = Tuple[int, ...]


def from_simplices(name: str, simplices: Iterable[Sequence[int]], reduced: bool = True,
                   vertex_names: Optional[Sequence[Any]] = None) -> ComplexZ2:
    """
    Симплициальный комплекс - замыкание вниз данного списка симплексов.

    Метки - отсортированные кортежи вершин, внутри размерности в лексикографическом порядке.
    Пустой кортеж в списке означает пустую клетку: так задаётся комплекс {∅}.
    """
    seen = set()
    stack = []
    wants_empty = False
    for s in simplices:
        t = tuple(sorted(set(s)))
        if len(t) != len(tuple(s)):
            raise InvalidInput(f"repeated vertex in simplex {tuple(s)!r}")
        if not t:
            wants_empty = True
            continue
        if t not in seen:
            seen.add(t)
            stack.append(t)
    while stack:
        t = stack.pop()
        if len(t) == 1:
            continue
        for j in range(len(t)):
            face = t[:j] + t[j + 1:]
            if face not in seen:
                seen.add(face)
                stack.append(face)
    top = max((len(t) for t in seen), default=0) - 1
    levels: List[List[Simplex]] = [sorted(t for t in seen if len(t) == k + 1) for k in range(top + 1)]
    index: List[Dict[Simplex, int]] = [{t: i for i, t in enumerate(level)} for level in levels]
    boundary: List[List[Tuple[int, ...]]] = [[] for _ in levels]
    for k in range(1, top + 1):
        boundary[k] = [tuple(index[k - 1][t[:j] + t[j + 1:]] for j in range(k + 1)) for t in levels[k]]
    empty = reduced and (bool(levels) or wants_empty)
    return ComplexZ2(name, levels, boundary, reduced=reduced, empty_cell=empty,
                     vertex_names=vertex_names)


def simplex_skeleton(n: int, k: int, reduced: bool = True) -> ComplexZ2:
    """k-остов симплекса на вершинах 0..n-1."""
    if n < 1 or not 0 <= k <= n - 1:
        raise InvalidInput(f"need 0 <= k <= n-1, got n={n}, k={k}")
    return from_simplices(f"simplex(n={n},k={k})", combinations(range(n), k + 1), reduced)


def skeleton(x: ComplexZ2, k: int) -> ComplexZ2:
    levels = [x.cells(j) for j in range(0, min(k, x.top_dim) + 1)]
    boundary = [[x.faces(j, i) for i in range(x.f(j))] for j in range(len(levels))]
    return ComplexZ2(f"{x.name}^({k})", levels, boundary, reduced=x.reduced,
                     empty_cell=x.has_empty, vertex_names=x.vertex_names)


_CUBE_ORDER = {"-": 0, "+": 1, "*": 2}


def cube_key(word: str) -> Tuple[int, ...]:
    return tuple(_CUBE_ORDER[ch] for ch in word)


def hypercube(d: int, reduced: bool = True) -> ComplexZ2:
    """Куб Q_d: клетки - слова над {-,+,*}, размерность - число звёздочек."""
    if d < 1:
        raise InvalidInput("hypercube needs d >= 1")
    words = ["".join(w) for w in product("-+*", repeat=d)]
    levels: List[List[str]] = [[] for _ in range(d + 1)]
    for w in words:
        levels[w.count("*")].append(w)
    for level in levels:
        level.sort(key=cube_key)
    index = [{w: i for i, w in enumerate(level)} for level in levels]
    boundary: List[List[Tuple[int, ...]]] = [[] for _ in levels]
    for k in range(1, d + 1):
        rows = []
        for w in levels[k]:
            faces = []
            for pos, ch in enumerate(w):
                if ch == "*":
                    for sign in "-+":
                        faces.append(index[k - 1][w[:pos] + sign + w[pos + 1:]])
            rows.append(tuple(faces))
        boundary[k] = rows
    return ComplexZ2(f"Q{d}", levels, boundary, reduced=reduced)


def product_with_simplex(x: ComplexZ2, n: int) -> ComplexZ2:
    """
    X × Δ^{n-1}: клетки α×β, граница по правилу Лейбница mod 2.

    Метка клетки - пара (метка α, вершины β).
    """
    if n < 2:
        raise InvalidInput("product with a simplex needs n >= 2")
    simplex_levels = [list(combinations(range(n), j + 1)) for j in range(n)]
    top = x.top_dim + n - 1
    keys: List[List[Tuple[int, int, Tuple[int, ...]]]] = [[] for _ in range(top + 1)]
    for i in range(0, x.top_dim + 1):
        for a in range(x.f(i)):
            for j in range(n):
                for beta in simplex_levels[j]:
                    keys[i + j].append((i, a, beta))
    for level in keys:
        level.sort()
    position = [{key: p for p, key in enumerate(level)} for level in keys]
    boundary: List[List[Tuple[int, ...]]] = [[] for _ in keys]
    for k in range(1, top + 1):
        rows = []
        for i, a, beta in keys[k]:
            faces = []
            if i >= 1:
                faces.extend(position[k - 1][(i - 1, f, beta)] for f in x.faces(i, a))
            j = len(beta) - 1
            if j >= 1:
                for t in range(j + 1):
                    faces.append(position[k - 1][(i, a, beta[:t] + beta[t + 1:])])
            rows.append(tuple(faces))
        boundary[k] = rows
    labels = [[(x.cells(i)[a], beta) for i, a, beta in level] for level in keys]
    return ComplexZ2(f"{x.name}xD{n - 1}", labels, boundary, reduced=x.reduced)


def order_complex(p: Poset, name: str = "order-complex", reduced: bool = True) -> ComplexZ2:
    """Симплексы - цепи p; вершина i - элемент p.elements[i]."""
    chains = p.maximal_chains()
    isolated = [(i,) for i in range(len(p))]
    return from_simplices(name, chains + isolated, reduced, vertex_names=p.elements)


def coxeter_An(n: int, budget: Optional[int] = None) -> ComplexZ2:
    """
    Комплекс Кокстера типа A_{n-1}: барицентрическое подразделение ∂Δ^{n-1}.

    Вершины - собственные непустые подмножества [n], грани старшей размерности - цепи
    префиксов перестановок.
    """
    if n < 3:
        raise InvalidInput("coxeter_An needs n >= 3")
    budget = DEFAULT_BUDGET if budget is None else budget
    if factorial(n) > budget:
        raise BudgetExceeded(factorial(n), budget, "Coxeter group order")
    subsets = [s for size in range(1, n) for s in combinations(range(n), size)]
    vertex = {s: i for i, s in enumerate(subsets)}
    facets = []
    for pi in permutations(range(n)):
        facets.append([vertex[tuple(sorted(pi[:i]))] for i in range(1, n)])
    return from_simplices(f"coxeter-A(n={n})", facets, vertex_names=subsets)


def cross_polytope_faces(n: int) -> List[Tuple[int, ...]]:
    """Грани ∂ кросс-политопа: непустые наборы ±(i+1) без противоположных пар."""
    faces = []
    for size in range(1, n + 1):
        for support in combinations(range(n), size):
            for signs in product((1, -1), repeat=size):
                faces.append(tuple(sorted((s * (i + 1) for s, i in zip(signs, support)), key=abs)))
    faces.sort(key=lambda f: (len(f), [abs(v) for v in f], [v < 0 for v in f]))
    return faces


def coxeter_Bn(n: int, budget: Optional[int] = None) -> ComplexZ2:
    """Комплекс типа B_n: барицентрическое подразделение октаэдральной (n-1)-сферы."""
    if n < 2:
        raise InvalidInput("coxeter_Bn needs n >= 2")
    budget = DEFAULT_BUDGET if budget is None else budget
    order = factorial(n) * 2 ** n
    if order > budget:
        raise BudgetExceeded(order, budget, "Coxeter group order")
    faces = cross_polytope_faces(n)
    vertex = {f: i for i, f in enumerate(faces)}
    facets = []
    for pi in permutations(range(n)):
        for signs in product((1, -1), repeat=n):
            signed = [s * (i + 1) for s, i in zip(signs, pi)]
            facets.append([vertex[tuple(sorted(signed[:j], key=abs))] for j in range(1, n + 1)])
    return from_simplices(f"coxeter-B(n={n})", facets, vertex_names=faces)


def boolean_order_complex(n: int) -> ComplexZ2:
    """Порядковый комплекс собственной части булевой решётки на [n]."""
    return order_complex(proper_part(boolean_lattice(n)), name=f"boolean-proper(n={n})")


def expected_f_vector_product(x: ComplexZ2, n: int) -> Tuple[int, ...]:
    top = x.top_dim + n - 1
    return tuple(sum(x.f(i) * comb(n, k - i + 1) for i in range(0, x.top_dim + 1) if 0 <= k - i <= n - 1)
                 for k in range(top + 1))


def cone_closure(x: ComplexZ2, apex: int) -> List[Tuple[int, ...]]:
    """Симплексы σ, для которых σ ∪ {apex} отсутствует в X; пустой список - X замкнут как конус."""
    missing = []
    for s in x.simplices():
        if apex in s:
            continue
        joined = tuple(sorted(s + (apex,)))
        if not x.contains(len(joined) - 1, joined):
            missing.append(s)
    return missing

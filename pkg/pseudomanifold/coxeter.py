"""
Галерея псевдомногообразий и явная коцепь φ_n на sd ∂Δ^{n-1}.
"""
from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Optional, Sequence, Tuple

from complexes.builders import coxeter_An, coxeter_Bn, cross_polytope_faces, from_simplices, simplex_skeleton
from complexes.cells import ComplexZ2
from expansion.chains import Cochain, coboundary
from expansion.norms import cosystolic_norm
from utils.errors import BudgetExceeded, InvalidInput

from .flip import flip_graph


def coxeter_a_value(n: int) -> Fraction:
    """h^{n-3}(sd ∂Δ^{n-1}) = 4 / (n(n-1))."""
    return Fraction(4, n * (n - 1))


def coxeter_b_value(n: int) -> Fraction:
    """h^{n-2} барицентрического подразделения октаэдральной сферы = 2 / n²."""
    return Fraction(2, n * n)


def octahedral_sphere(n: int) -> ComplexZ2:
    """∂ кросс-политопа в R^n: вершины ±(i+1) с индексами 0..2n-1."""
    faces = [f for f in cross_polytope_faces(n) if len(f) == n]
    index = {v: 2 * (abs(v) - 1) + (v < 0) for v in range(-n, n + 1) if v}
    names = sorted(index, key=index.get)
    return from_simplices(f"octahedral-sphere(n={n})", [[index[v] for v in f] for f in faces],
                          vertex_names=names)


def glued_triangles() -> ComplexZ2:
    """Два треугольника с общим ребром: диск, не замкнутое псевдомногообразие."""
    return from_simplices("two-triangles", [(0, 1, 2), (1, 2, 3)])


def gallery() -> List[Tuple[str, ComplexZ2]]:
    """Замкнутые псевдомногообразия для проверки h^{n-1} = 2/diam."""
    items = [
        ("boundary-simplex-2", simplex_skeleton(3, 1)),
        ("boundary-simplex-3", simplex_skeleton(4, 2)),
        ("boundary-simplex-4", simplex_skeleton(5, 3)),
        ("octahedron", octahedral_sphere(3)),
        ("coxeter-a-4", coxeter_An(4)),
        ("coxeter-b-2", coxeter_Bn(2)),
        ("coxeter-b-3", coxeter_Bn(3)),
    ]
    for name, x in items:
        if not flip_graph(x).pseudomanifold:
            raise InvalidInput(f"gallery entry {name} is not a pseudomanifold")
    return items


# --- φ_n ------------------------------------------------------------------------

def phi_permutations(n: int) -> List[Tuple[int, ...]]:
    """π_0, …, π_{C(n,2)} в записи 1..n; π_{m(j,ℓ)} при m = (j-1)n − C(j,2) + ℓ."""
    perms: List[Tuple[int, ...]] = [tuple(range(1, n + 1))]
    for j in range(1, n):
        for ell in range(1, n - j + 1):
            head = list(range(n, n - j + 1, -1))
            middle = list(range(1, n - j - ell + 1))
            tail = list(range(n - j - ell + 1, n - j + 1))
            perms.append(tuple(head + middle + [n - j + 1] + tail))
    return perms


def _prefix_vertices(x: ComplexZ2, perm: Sequence[int]) -> List[int]:
    vertex = {name: i for i, name in enumerate(x.vertex_names)}
    n = len(perm)
    return [vertex[tuple(sorted(p - 1 for p in perm[:i]))] for i in range(1, n)]


def top_face(x: ComplexZ2, perm: Sequence[int]) -> Tuple[int, ...]:
    """F(π) = [{π(1)} ⊂ {π(1), π(2)} ⊂ ⋯]."""
    return tuple(sorted(_prefix_vertices(x, perm)))


def face_without(x: ComplexZ2, perm: Sequence[int], i: int) -> Tuple[int, ...]:
    """F(π)_i: F(π) без префикса длины i."""
    chain = _prefix_vertices(x, perm)
    return tuple(sorted(chain[:i - 1] + chain[i:]))


def phi_n_cochain(n: int, x: Optional[ComplexZ2] = None) -> Cochain:
    """φ_n = Σ_{j,ℓ} F(π_{m(j,ℓ)})*_{n-ℓ} ∈ C^{n-3}(sd ∂Δ^{n-1})."""
    if not 4 <= n <= 6:
        raise InvalidInput("phi_n is built for 4 <= n <= 6")
    x = x or coxeter_An(n)
    perms = phi_permutations(n)
    labels = []
    m = 0
    for j in range(1, n):
        for ell in range(1, n - j + 1):
            m += 1
            labels.append(face_without(x, perms[m], n - ell))
    if len(set(labels)) != comb(n, 2):
        raise InvalidInput("phi_n faces are not distinct")
    return Cochain.from_labels(x, n - 3, labels)


def phi_n_report(n: int, budget: Optional[int] = None, with_cosystole: bool = True) -> Dict[str, Any]:
    """‖φ_n‖, ‖dφ_n‖, концы supp dφ_n и, если помещается в бюджет, ‖φ_n‖_csy."""
    x = coxeter_An(n)
    phi = phi_n_cochain(n, x)
    d_phi = coboundary(phi)
    perms = phi_permutations(n)
    ends = sorted([top_face(x, perms[0]), top_face(x, perms[-1])])
    report: Dict[str, Any] = {
        "n": n,
        "norm": phi.weight(),
        "coboundary_norm": d_phi.weight(),
        "coboundary_support_ok": sorted(d_phi.support()) == ends,
        "expansion": Fraction(d_phi.weight(), phi.weight()),
        "cosystolic_norm": None,
    }
    if with_cosystole:
        try:
            report["cosystolic_norm"], _ = cosystolic_norm(phi, budget)
        except BudgetExceeded:
            report["cosystolic_norm"] = None
    return report

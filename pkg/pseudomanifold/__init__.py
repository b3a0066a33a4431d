"""
Пакет псевдомногообразий и графов флипов
"""

from .flip import (
    FlipGraph,
    flip_graph,
    cheeger_top_via_diameter,
    cochain_flip_subgraph,
    odd_degree_support,
    odd_degree_identity_holds,
    is_forest,
    geodesic_cochain,
)
from .coxeter import (
    coxeter_a_value,
    coxeter_b_value,
    octahedral_sphere,
    glued_triangles,
    gallery,
    phi_permutations,
    phi_n_cochain,
    phi_n_report,
)

__all__ = [
    'FlipGraph',
    'flip_graph',
    'cheeger_top_via_diameter',
    'cochain_flip_subgraph',
    'odd_degree_support',
    'odd_degree_identity_holds',
    'is_forest',
    'geodesic_cochain',
    'coxeter_a_value',
    'coxeter_b_value',
    'octahedral_sphere',
    'glued_triangles',
    'gallery',
    'phi_permutations',
    'phi_n_cochain',
    'phi_n_report',
]

"""
Пакет клеточных комплексов над Z₂
"""

from .cells import ComplexZ2, RelativePair, ChainView, relative_pair, as_view, EMPTY_LABEL
from .posets import Poset, boolean_lattice, proper_part, chain_poset, subspace_lattice
from .builders import (
    from_simplices,
    simplex_skeleton,
    skeleton,
    hypercube,
    product_with_simplex,
    order_complex,
    coxeter_An,
    coxeter_Bn,
    cross_polytope_faces,
    cone_closure,
)
from .duality import alexander_dual, dual_pair
from .sampling import random_Ynp, random_subcomplex


def cohomology_dim(x, k: int) -> int:
    """dim H^k(X, Y; Z₂) для комплекса или пары."""
    return as_view(x).cohomology_dim(k)


def homology_dim(x, k: int) -> int:
    return as_view(x).homology_dim(k)


__all__ = [
    'ComplexZ2',
    'RelativePair',
    'ChainView',
    'EMPTY_LABEL',
    'relative_pair',
    'as_view',
    'Poset',
    'boolean_lattice',
    'proper_part',
    'chain_poset',
    'subspace_lattice',
    'from_simplices',
    'simplex_skeleton',
    'skeleton',
    'hypercube',
    'product_with_simplex',
    'order_complex',
    'coxeter_An',
    'coxeter_Bn',
    'cross_polytope_faces',
    'cone_closure',
    'alexander_dual',
    'dual_pair',
    'random_Ynp',
    'random_subcomplex',
    'cohomology_dim',
    'homology_dim',
]

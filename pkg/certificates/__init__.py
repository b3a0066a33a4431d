"""
Пакет сертификатов нижних оценок
"""

from .piercing import piercing_number
from .detection import (
    CycleFamily,
    boundary_family,
    cycle_detection_bound,
    tripartite_example,
    hypercube_witness,
    triangle_family,
)
from .homotopy import HomotopyScheme, homotopy_bound, uniform_bound, cone_scheme
from .lattices import (
    LatticeScheme,
    is_geometric,
    is_homogeneous,
    lattice_scheme,
    join_chain,
    lattice_chains,
    lattice_homotopy_scheme,
    lattice_bound,
    boolean_automorphisms,
    subspace_automorphisms,
)

__all__ = [
    'piercing_number',
    'CycleFamily',
    'boundary_family',
    'cycle_detection_bound',
    'tripartite_example',
    'hypercube_witness',
    'triangle_family',
    'HomotopyScheme',
    'homotopy_bound',
    'uniform_bound',
    'cone_scheme',
    'LatticeScheme',
    'is_geometric',
    'is_homogeneous',
    'lattice_scheme',
    'join_chain',
    'lattice_chains',
    'lattice_homotopy_scheme',
    'lattice_bound',
    'boolean_automorphisms',
    'subspace_automorphisms',
]

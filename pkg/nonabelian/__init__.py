"""
Пакет неабелевых коцепей и случайных 2-комплексов
"""

from .groups import (
    FiniteGroup,
    compose,
    from_permutations,
    cyclic_group,
    symmetric_group,
    alternating_group,
    psl27,
    simple_groups,
    group_by_name,
)
from .cochains import (
    NonAbCochain1,
    d1,
    d1_norm,
    is_cocycle,
    act,
    multiply_maps,
    one_skeleton,
    spanning_forest,
    tree_gauge,
    random_cochain,
    to_z2_cochain,
    abelian_h1_dim,
)
from .orbits import (
    OrbitSet,
    h1_orbits,
    h1_orbits_raw,
    has_nontrivial_h1,
    pi1_generators,
    hom_pi1_orbits,
    nonab_cosystole,
    nonab_csy,
    bw1_check,
    union_bound,
)
from .experiments import (
    trial_rng,
    quotient_probability,
    quotient_experiment,
    threshold_sweep,
    homology_threshold_points,
    report_rows,
    rows_to_csv,
)

__all__ = [
    'FiniteGroup',
    'compose',
    'from_permutations',
    'cyclic_group',
    'symmetric_group',
    'alternating_group',
    'psl27',
    'simple_groups',
    'group_by_name',
    'NonAbCochain1',
    'd1',
    'd1_norm',
    'is_cocycle',
    'act',
    'multiply_maps',
    'one_skeleton',
    'spanning_forest',
    'tree_gauge',
    'random_cochain',
    'to_z2_cochain',
    'abelian_h1_dim',
    'OrbitSet',
    'h1_orbits',
    'h1_orbits_raw',
    'has_nontrivial_h1',
    'pi1_generators',
    'hom_pi1_orbits',
    'nonab_cosystole',
    'nonab_csy',
    'bw1_check',
    'union_bound',
    'trial_rng',
    'quotient_probability',
    'quotient_experiment',
    'threshold_sweep',
    'homology_threshold_points',
    'report_rows',
    'rows_to_csv',
]

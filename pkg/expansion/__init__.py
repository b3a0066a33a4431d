"""
Пакет норм и констант Чигера
"""

from .chains import Chain, Cochain, coboundary, boundary, evaluate, alexander_map, complement
from .norms import (
    norm,
    is_coboundary,
    is_boundary,
    cosystolic_norm,
    systolic_norm,
    random_cochain,
    random_chain,
    random_cosystole_stats,
)
from .cheeger import ExpansionResult, cheeger, cheeger_co, cheeger_ho, max_cosystole
from .bounds import (
    Interval,
    sqrt_enclosure,
    root_2k,
    bound_blam,
    bound_uphk,
    bound_prod,
    bound_prod_gromov,
    verify_product_bound,
)

__all__ = [
    'Chain',
    'Cochain',
    'coboundary',
    'boundary',
    'evaluate',
    'alexander_map',
    'complement',
    'norm',
    'is_coboundary',
    'is_boundary',
    'cosystolic_norm',
    'systolic_norm',
    'random_cochain',
    'random_chain',
    'random_cosystole_stats',
    'ExpansionResult',
    'cheeger',
    'cheeger_co',
    'cheeger_ho',
    'max_cosystole',
    'Interval',
    'sqrt_enclosure',
    'root_2k',
    'bound_blam',
    'bound_uphk',
    'bound_prod',
    'bound_prod_gromov',
    'verify_product_bound',
]

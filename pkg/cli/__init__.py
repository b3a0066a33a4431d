"""
Командная строка hdx
"""
from .commands import build_complex, build_parser, main
from .config import RunConfig
from .formats import (
    canonical_json,
    complex_from_dict,
    complex_hash,
    complex_to_dict,
    dumps_complex,
    loads_complex,
    render,
    vector_from_dict,
    vector_to_dict,
)
from .suites import run_suite, suite_names

__all__ = [
    'main',
    'build_parser',
    'build_complex',
    'RunConfig',
    'canonical_json',
    'complex_to_dict',
    'complex_from_dict',
    'complex_hash',
    'dumps_complex',
    'loads_complex',
    'vector_to_dict',
    'vector_from_dict',
    'render',
    'run_suite',
    'suite_names',
]

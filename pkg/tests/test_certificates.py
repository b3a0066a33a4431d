from fractions import Fraction

import pytest

from certificates import (
    CycleFamily,
    boolean_automorphisms,
    boundary_family,
    cone_scheme,
    cycle_detection_bound,
    homotopy_bound,
    hypercube_witness,
    is_geometric,
    is_homogeneous,
    join_chain,
    lattice_bound,
    lattice_chains,
    lattice_homotopy_scheme,
    lattice_scheme,
    piercing_number,
    subspace_automorphisms,
    triangle_family,
    tripartite_example,
    uniform_bound,
)
from complexes import as_view, boolean_lattice, chain_poset, subspace_lattice
from expansion import Chain, Cochain, boundary, cheeger_co, coboundary, cosystolic_norm
from utils.errors import (
    BudgetExceeded,
    FillIdentityViolated,
    InvalidInput,
    NotACycle,
    NotHomogeneous,
    ZeroEvaluation,
)

FANO_LINES = [{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}]


@pytest.mark.parametrize("family, expected", [
    ([{1}, {2}], 2),
    ([{1, 2}, {2, 3}], 1),
    ([{1, 2}, {2, 3}, {1, 3}], 2),
    ([{1, 2, 3}, {1, 2}, {1}], 1),
    (FANO_LINES, 3),
])
def test_piercing_number(family, expected):
    tau, witness = piercing_number(family)
    assert tau == expected
    assert len(witness) == tau
    assert all(witness & set(member) for member in family)


def test_piercing_number_witness_is_shared_element():
    assert piercing_number([{1, 2}, {2, 3}]) == (1, frozenset({2}))


def test_piercing_number_edge_cases():
    assert piercing_number([]) == (0, frozenset())
    with pytest.raises(InvalidInput):
        piercing_number([{1}, set()])
    with pytest.raises(BudgetExceeded):
        piercing_number(FANO_LINES, budget=0)


def test_tripartite_detection_is_exact():
    x, phi, fam = tripartite_example(2, 1)
    assert x.f_vector() == (6, 15, 20)
    assert phi.weight() == 4
    assert len(fam) == 4
    tau, piercing = cycle_detection_bound(phi, fam)
    assert tau == 4
    assert len(piercing) == 4
    assert cosystolic_norm(phi)[0] == 4


def test_tripartite_family_is_pairwise_disjoint():
    _, _, fam = tripartite_example(3, 1)
    supports = fam.supports
    assert len(supports) == 9
    assert all(a & b == 0 for i, a in enumerate(supports) for b in supports[i + 1:])


@pytest.mark.parametrize("d, k", [(3, 0), (3, 1), (4, 1)])
def test_hypercube_witness(d, k):
    _, phi, fam = hypercube_witness(d, k)
    expected = 2 ** (d - k - 1)
    tau, _ = cycle_detection_bound(phi, fam)
    assert tau == expected
    assert coboundary(phi).weight() == expected


def test_hypercube_witness_is_a_cosystole():
    _, phi, _ = hypercube_witness(3, 1)
    assert cosystolic_norm(phi)[0] == 2


def test_zero_evaluation_is_rejected(k4_skeleton):
    view = as_view(k4_skeleton)
    phi = Cochain.from_labels(view, 1, [(0, 1)])
    fam = boundary_family(view, 1, [(1, 2, 3)])
    with pytest.raises(ZeroEvaluation) as info:
        cycle_detection_bound(phi, fam)
    assert info.value.index == 0


def test_family_members_must_be_cycles(k4_skeleton):
    view = as_view(k4_skeleton)
    with pytest.raises(NotACycle):
        CycleFamily(view, 1, (Chain.from_labels(view, 1, [(0, 1)]),))


def test_triangle_family_detects_single_edge(k4_skeleton):
    view = as_view(k4_skeleton)
    phi = Cochain.from_labels(view, 1, [(0, 1)])
    fam = triangle_family(view, phi)
    assert len(fam) == 2
    tau, piercing = cycle_detection_bound(phi, fam)
    assert tau == 1
    assert piercing == [view.index_of(1, (0, 1))]


def test_cone_scheme_on_simplex(tetrahedron):
    scheme = cone_scheme(tetrahedron, 1, [0, 1, 2, 3])
    scheme.validate()
    assert homotopy_bound(scheme) == Fraction(4, 3)
    assert uniform_bound(scheme) == Fraction(4, 3)
    assert homotopy_bound(scheme) <= cheeger_co(tetrahedron, 1).value


def test_cone_scheme_on_triangle_boundary(circle):
    scheme = cone_scheme(circle, 0, [0])
    assert homotopy_bound(scheme) == 1
    assert cheeger_co(circle, 0).value == 2


def test_cone_scheme_needs_a_cone(circle):
    with pytest.raises(FillIdentityViolated):
        cone_scheme(circle, 1, [0])
    with pytest.raises(InvalidInput):
        cone_scheme(circle, 0, [])


def test_broken_scheme_fails_validation(tetrahedron):
    scheme = cone_scheme(tetrahedron, 1, [0])
    key = next(key for key in scheme.chains if key[1] == 1 and 0 not in key[2])
    scheme.chains[key] = Chain.zeros(scheme.view, 2)
    with pytest.raises(FillIdentityViolated):
        homotopy_bound(scheme)


def test_geometric_lattices():
    assert is_geometric(boolean_lattice(3))
    assert is_geometric(subspace_lattice(2, 3))
    assert not is_geometric(chain_poset([0, 1, 2]))


def test_lattice_bounds():
    assert lattice_bound(boolean_lattice(3), boolean_automorphisms(3)) == Fraction(1, 3)
    assert lattice_bound(subspace_lattice(2, 3), subspace_automorphisms(2, 3)) == Fraction(1, 2)


def test_lattice_bound_needs_transitive_automorphisms():
    assert not is_homogeneous(boolean_lattice(3), [])
    with pytest.raises(NotHomogeneous):
        lattice_bound(boolean_lattice(3), [])


def test_join_chain_of_two_atoms():
    ls = lattice_scheme(boolean_lattice(3))
    single = join_chain(ls, [(0,)])
    assert single.k == 0
    assert single.weight() == 1
    pair = join_chain(ls, [(0,), (1,)])
    assert pair.k == 1
    assert pair.weight() == 2
    assert boundary(pair).weight() == 2
    with pytest.raises(InvalidInput):
        join_chain(ls, [])


def test_boolean_lattice_scheme_certifies_h0():
    ls = lattice_scheme(boolean_lattice(3), generators=boolean_automorphisms(3))
    assert ls.rank == 3
    assert len(ls.orderings) == 6
    scheme = lattice_homotopy_scheme(ls, 0)
    scheme.validate()
    certified = uniform_bound(scheme)
    assert 0 < certified <= cheeger_co(ls.complex, 0).value


@pytest.mark.slow
def test_subspace_lattice_scheme_certifies_h0():
    lattice = subspace_lattice(2, 3)
    ls = lattice_scheme(lattice, generators=subspace_automorphisms(2, 3))
    scheme = lattice_homotopy_scheme(ls, 0)
    scheme.validate()
    exact = cheeger_co(ls.complex, 0).value
    assert exact >= lattice_bound(lattice, subspace_automorphisms(2, 3))
    assert uniform_bound(scheme, check=False) <= exact


def test_lattice_chains_fill_vertices():
    ls = lattice_scheme(boolean_lattice(3))
    cone = lattice_chains(ls, 0, ())
    assert cone.k == 0
    assert cone.weight() == 1
    assert boundary(cone).weight() == 1
    for sigma in ls.complex.cells(0):
        filled = lattice_chains(ls, 0, sigma)
        assert boundary(filled) == Chain.from_labels(ls.view, 0, [sigma]) + cone
    with pytest.raises(InvalidInput):
        lattice_chains(ls, 0, (0, 1))


def test_subspace_automorphisms_permute_the_lattice():
    lattice = subspace_lattice(2, 3)
    for g in subspace_automorphisms(2, 3):
        assert set(g.values()) == set(lattice.elements)
        for a, b in lattice.covers:
            assert lattice.less(g[lattice.elements[a]], g[lattice.elements[b]])

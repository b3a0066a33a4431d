from fractions import Fraction

import pytest

from complexes import as_view, coxeter_An, coxeter_Bn, from_simplices
from expansion import Cochain, cheeger_co, coboundary, random_cochain
from pseudomanifold import (
    cheeger_top_via_diameter,
    cochain_flip_subgraph,
    coxeter_a_value,
    coxeter_b_value,
    flip_graph,
    gallery,
    geodesic_cochain,
    glued_triangles,
    is_forest,
    octahedral_sphere,
    odd_degree_identity_holds,
    odd_degree_support,
    phi_n_cochain,
    phi_n_report,
)
from utils.errors import HypothesisFailed, InvalidInput, NotPure


@pytest.mark.parametrize("n", [4, 5])
def test_coxeter_a_diameter(n):
    fg = flip_graph(coxeter_An(n))
    assert fg.pseudomanifold
    assert fg.diameter() == n * (n - 1) // 2
    assert cheeger_top_via_diameter(coxeter_An(n)) == coxeter_a_value(n)


@pytest.mark.slow
def test_coxeter_a_six():
    assert cheeger_top_via_diameter(coxeter_An(6)) == Fraction(2, 15)


@pytest.mark.parametrize("n", [2, 3])
def test_coxeter_b_diameter(n):
    assert cheeger_top_via_diameter(coxeter_Bn(n)) == coxeter_b_value(n)


def test_octagon_flip_graph():
    fg = flip_graph(coxeter_Bn(2))
    assert fg.n == 1
    assert fg.graph.number_of_nodes() == 8
    assert fg.diameter() == 4


def test_small_spheres(circle, k4_skeleton):
    assert cheeger_top_via_diameter(circle) == 2 == cheeger_co(circle, 0).value
    assert cheeger_top_via_diameter(k4_skeleton) == 2 == cheeger_co(k4_skeleton, 1).value


def test_octahedron_matches_exact_constant():
    x = octahedral_sphere(3)
    assert x.f_vector() == (6, 12, 8)
    assert cheeger_top_via_diameter(x) == Fraction(2, 3)
    assert cheeger_co(x, 1).value == Fraction(2, 3)


@pytest.mark.slow
def test_coxeter_a_four_exact_constant():
    assert cheeger_co(coxeter_An(4), 1).value == Fraction(1, 3)


def test_disk_is_rejected():
    fg = flip_graph(glued_triangles())
    assert not fg.pseudomanifold
    assert fg.diameter() == 1
    with pytest.raises(HypothesisFailed):
        cheeger_top_via_diameter(glued_triangles())


def test_non_pure_complex_is_rejected():
    with pytest.raises(NotPure):
        flip_graph(from_simplices("np", [(0, 1, 2), (3, 4)]))
    with pytest.raises(InvalidInput):
        flip_graph(from_simplices("pt", [(0,)]))


def test_gallery_entries_are_pseudomanifolds():
    names = [name for name, _ in gallery()]
    assert "coxeter-a-4" in names
    assert len(names) == len(set(names))


def test_single_ridge_subgraph(k4_skeleton):
    phi = Cochain.from_labels(k4_skeleton, 1, [(0, 1)])
    sub = cochain_flip_subgraph(phi)
    assert sub.number_of_edges() == 1
    assert len(odd_degree_support(sub)) == 2
    assert coboundary(phi).weight() == 2
    assert is_forest(sub)


def test_odd_degree_identity(k4_skeleton, rng):
    fg = flip_graph(k4_skeleton)
    for _ in range(20):
        assert odd_degree_identity_holds(random_cochain(k4_skeleton, 1, rng), fg)


def test_odd_degree_identity_on_coxeter_complex(rng):
    x = coxeter_An(4)
    fg = flip_graph(x)
    for _ in range(10):
        assert odd_degree_identity_holds(random_cochain(x, 1, rng), fg)


def test_subgraph_needs_codimension_one(k4_skeleton):
    with pytest.raises(InvalidInput):
        cochain_flip_subgraph(Cochain.from_labels(k4_skeleton, 0, [(0,)]))


def test_geodesic_cochain_expands_by_two_over_diameter():
    fg = flip_graph(coxeter_An(4))
    geo = geodesic_cochain(fg)
    assert geo.weight() == fg.diameter()
    assert coboundary(geo).weight() == 2
    u, v = fg.diametral_pair()
    assert u != v
    assert sorted(coboundary(geo).bits.indices()) == sorted([u, v])


def test_edgelist_text(circle):
    text = flip_graph(circle).to_edgelist_text()
    assert text.endswith("\n")
    assert len(text.strip().splitlines()) == 3


@pytest.mark.parametrize("n", [4, 5])
def test_phi_n_norms(n):
    report = phi_n_report(n, with_cosystole=False)
    assert report["norm"] == n * (n - 1) // 2
    assert report["coboundary_norm"] == 2
    assert report["coboundary_support_ok"]
    assert report["expansion"] == coxeter_a_value(n)


def test_phi_4_is_a_cosystole():
    report = phi_n_report(4)
    assert report["cosystolic_norm"] == 6


def test_phi_n_range():
    with pytest.raises(InvalidInput):
        phi_n_cochain(3)
    phi = phi_n_cochain(4)
    assert phi.k == 1
    assert as_view(phi.view.complex) is phi.view

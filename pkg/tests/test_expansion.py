from fractions import Fraction

import numpy as np
import pytest

from complexes import (
    as_view,
    dual_pair,
    from_simplices,
    hypercube,
    random_subcomplex,
    relative_pair,
    simplex_skeleton,
)
from expansion import (
    Chain,
    Cochain,
    Interval,
    alexander_map,
    boundary,
    bound_blam,
    bound_prod,
    bound_prod_gromov,
    bound_uphk,
    cheeger,
    cheeger_co,
    cheeger_ho,
    coboundary,
    cosystolic_norm,
    evaluate,
    is_boundary,
    is_coboundary,
    max_cosystole,
    random_chain,
    random_cochain,
    random_cosystole_stats,
    root_2k,
    sqrt_enclosure,
    systolic_norm,
    verify_product_bound,
)
from utils.errors import BudgetExceeded, DegenerateSpace, InvalidInput


def test_cochain_from_labels(k4_skeleton):
    phi = Cochain.from_labels(k4_skeleton, 1, [(0, 1), (2, 3)])
    assert phi.weight() == 2
    assert phi.support() == [(0, 1), (2, 3)]
    assert not phi.is_zero()
    assert Cochain.zeros(k4_skeleton, 1).is_zero()


def test_cochains_on_different_spaces_do_not_add(k4_skeleton):
    a = Cochain.zeros(k4_skeleton, 1)
    b = Cochain.zeros(k4_skeleton, 0)
    with pytest.raises(InvalidInput):
        a + b


def test_coboundary_of_vertex_is_its_star(k4_skeleton):
    d = coboundary(Cochain.from_labels(k4_skeleton, 0, [(0,)]))
    assert d.support() == [(0, 1), (0, 2), (0, 3)]


def test_dd_and_boundary_boundary_vanish(k4_skeleton, rng):
    for _ in range(10):
        phi = random_cochain(k4_skeleton, 0, rng)
        assert coboundary(coboundary(phi)).is_zero()
        c = random_chain(k4_skeleton, 2, rng)
        assert boundary(boundary(c)).is_zero()


def test_evaluation_identity(k4_skeleton, rng):
    # ⟨dφ, c⟩ = ⟨φ, ∂c⟩
    for _ in range(20):
        phi = random_cochain(k4_skeleton, 1, rng)
        c = random_chain(k4_skeleton, 2, rng)
        assert evaluate(coboundary(phi), c) == evaluate(phi, boundary(c))


def test_evaluate_single_cells(k4_skeleton):
    phi = Cochain.from_labels(k4_skeleton, 1, [(0, 1)])
    assert evaluate(phi, Chain.from_labels(k4_skeleton, 1, [(0, 1)])) == 1
    assert evaluate(phi, Chain.from_labels(k4_skeleton, 1, [(1, 2)])) == 0


def test_is_coboundary(k4_skeleton):
    cut = coboundary(Cochain.from_labels(k4_skeleton, 0, [(0,), (1,)]))
    assert is_coboundary(cut)
    assert not is_coboundary(Cochain.from_labels(k4_skeleton, 1, [(0, 1)]))
    assert is_boundary(boundary(Chain.from_labels(k4_skeleton, 2, [(0, 1, 2)])))


def test_cosystolic_norm_of_triangle_cochain(k4_skeleton):
    phi = Cochain.from_labels(k4_skeleton, 1, [(0, 1), (0, 2), (1, 2)])
    w, form = cosystolic_norm(phi)
    assert w == 2
    assert form.weight() == 2
    assert is_coboundary(form + phi)


def test_cosystolic_norm_of_coboundary_is_zero(k4_skeleton):
    cut = coboundary(Cochain.from_labels(k4_skeleton, 0, [(2,)]))
    assert cosystolic_norm(cut)[0] == 0


def test_systolic_norm_of_a_vertex():
    x = simplex_skeleton(3, 1, reduced=False)
    w, _ = systolic_norm(Chain.from_labels(x, 0, [(0,)]))
    assert w == 1


def test_cheeger_of_octagon(octagon):
    result = cheeger_co(octagon, 0)
    assert result.value == Fraction(1, 2)
    assert result.numerator_norm == 2
    assert result.denominator_norm == 4
    assert result.to_dict()["value"] == {"num": 1, "den": 2}


def test_cheeger_of_complete_graph_and_sphere(k4_skeleton):
    assert cheeger_co(simplex_skeleton(4, 1), 0).value == 2
    assert cheeger_co(k4_skeleton, 1).value == 2


def test_cheeger_in_dimension_minus_one_counts_vertices(tetrahedron):
    assert cheeger_co(tetrahedron, -1).value == 4


def test_disconnected_complex_has_zero_homological_constant():
    two_edges = from_simplices("2e", [(0, 1), (2, 3)])
    result = cheeger_ho(two_edges, 0)
    assert result.value == 0
    assert isinstance(result.witness, Chain)


def test_zero_constant_iff_cohomology(circle):
    result = cheeger_co(circle, 1)
    assert result.value == 0
    assert as_view(circle).cohomology_dim(1) == 1
    assert not is_coboundary(result.witness)


def test_degenerate_space(tetrahedron):
    with pytest.raises(DegenerateSpace) as info:
        cheeger_co(tetrahedron, 3)
    assert info.value.exit_code == 4


def test_cheeger_rejects_bad_arguments(circle):
    with pytest.raises(InvalidInput):
        cheeger_co(circle, 5)
    with pytest.raises(InvalidInput):
        cheeger(circle, 0, mode="xx")


def test_cheeger_budget(octagon):
    with pytest.raises(BudgetExceeded):
        cheeger_co(octagon, 0, budget=8)


@pytest.mark.parametrize("d, k", [(2, 0), (2, 1), (3, 0), (3, 1), (3, 2)])
def test_hypercube_coboundary_constants_equal_one(d, k):
    assert cheeger_co(hypercube(d), k).value == 1


@pytest.mark.parametrize("d, k, expected", [
    (2, 0, Fraction(1)),
    (2, 1, Fraction(1)),
    (3, 0, Fraction(1)),
    (3, 1, Fraction(2, 3)),
    (3, 2, Fraction(2)),
    pytest.param(4, 2, Fraction(4, 3), marks=pytest.mark.slow),
    pytest.param(4, 3, Fraction(3), marks=pytest.mark.slow),
])
def test_hypercube_boundary_constants(d, k, expected):
    assert cheeger_ho(hypercube(d), k).value == expected


def test_geodesic_across_the_cube_has_ratio_two_thirds():
    q3 = hypercube(3)
    c = Chain.from_labels(q3, 1, ["--*", "-*+", "*++"])
    assert boundary(c).support() == ["---", "+++"]
    assert systolic_norm(c)[0] == 3


@pytest.mark.slow
@pytest.mark.parametrize("k", [2, 3])
def test_four_cube_constants_equal_one(k):
    assert cheeger_co(hypercube(4), k).value == 1


def test_relative_pair_of_disk_and_rim():
    x = simplex_skeleton(3, 2)
    rim = from_simplices("rim", [(0, 1), (0, 2), (1, 2)])
    view = as_view(relative_pair(x, rim))
    # (Δ², ∂Δ²): активна только сама 2-клетка
    assert view.f_vector() == (0, 0, 1)
    assert view.cohomology_dim(2) == 1
    assert cheeger_co(view, 2).value == 0


def test_max_cosystole_examples(tetrahedron):
    assert max_cosystole(tetrahedron, 1)[0] == 2
    edge = from_simplices("edge", [(0, 1)])
    value, witness = max_cosystole(edge, 0)
    assert value == 1
    assert witness.weight() == 1


@pytest.mark.parametrize("seed", range(5))
def test_max_cosystole_at_most_half(seed):
    x = random_subcomplex(5, seed)
    for k in range(0, x.top_dim + 1):
        value, _ = max_cosystole(x, k)
        assert 2 * value <= x.f(k)


@pytest.mark.parametrize("seed", range(5))
def test_alexander_map_is_an_isometry(seed):
    n = 5
    rng = np.random.default_rng(seed)
    x = random_subcomplex(n, seed)
    target = as_view(dual_pair(x, from_simplices("void", []), n))
    for k in range(-1, x.top_dim + 1):
        if not as_view(x).dim(k):
            continue
        c = random_chain(x, k, rng)
        image = alexander_map(c, n, target)
        assert image.weight() == c.weight()
        assert systolic_norm(c)[0] == cosystolic_norm(image)[0]


def test_sqrt_enclosure():
    assert sqrt_enclosure(Fraction(9, 4)) == Interval.exact(Fraction(3, 2))
    iv = sqrt_enclosure(2)
    assert iv.lo * iv.lo <= 2 <= iv.hi * iv.hi
    assert iv.width <= Fraction(1, 10 ** 9)
    with pytest.raises(InvalidInput):
        sqrt_enclosure(-1)


def test_root_2k_of_perfect_power():
    iv = root_2k(16, 2)
    assert iv.lo == iv.hi == 2


def test_bound_blam_is_vacuous_at_small_scale():
    result = bound_blam(400, 1)
    assert result["lower"].lo == 0
    assert result["vacuous"]
    assert result["upper"] == 200
    assert result["failure_probability"] == Fraction(4, 5)
    with pytest.raises(InvalidInput):
        bound_blam(0, 1)


def test_bound_uphk():
    result = bound_uphk(3200, 1)
    assert result["value"].contains(2400)
    assert result["hypothesis"]
    assert not bound_uphk(100, 1)["hypothesis"]


def test_bound_prod():
    assert bound_prod(2, 4, 0) == 2
    assert bound_prod(None, 6, 1) == 2
    assert bound_prod(Fraction(1, 2), 6, 1) == Fraction(1, 2)
    assert bound_prod(5, 2, 1) == 1
    assert bound_prod_gromov(None, 4, 0) == Fraction(3, 2)
    with pytest.raises(InvalidInput):
        bound_prod(1, 1, 0)


def test_verify_product_bound(circle):
    report = verify_product_bound(circle, 2, 0)
    assert report["h_x"] == 2
    assert report["bound"] == 1
    assert report["passed"]


def test_random_cosystole_stats():
    stats = random_cosystole_stats(simplex_skeleton(5, 2), 1, trials=10, seed=3)
    assert stats["trials"] == 10
    assert stats["f_k"] == 10
    assert 0 <= stats["min"] <= stats["max"] <= 1
    assert stats["below_threshold"] == 0


def _h(fn, source, k):
    view = as_view(source)
    if not -1 <= k <= view.top_dim:
        return None
    try:
        return fn(view, k).value
    except DegenerateSpace:
        return None


@pytest.mark.parametrize("seed", range(6))
def test_boundary_constant_equals_dual_coboundary_constant(seed):
    n = 5
    x = random_subcomplex(n, seed)
    target = dual_pair(x, from_simplices("void", []), n)
    for k in range(-1, n - 1):
        assert _h(cheeger_ho, x, k) == _h(cheeger_co, target, n - k - 2)

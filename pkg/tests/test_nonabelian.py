from fractions import Fraction

import numpy as np
import pytest

from complexes import random_Ynp, simplex_skeleton
from nonabelian import (
    FiniteGroup,
    NonAbCochain1,
    abelian_h1_dim,
    act,
    alternating_group,
    bw1_check,
    cyclic_group,
    d1,
    d1_norm,
    group_by_name,
    h1_orbits,
    h1_orbits_raw,
    has_nontrivial_h1,
    hom_pi1_orbits,
    homology_threshold_points,
    is_cocycle,
    nonab_csy,
    psl27,
    quotient_experiment,
    random_cochain,
    report_rows,
    rows_to_csv,
    simple_groups,
    spanning_forest,
    symmetric_group,
    threshold_sweep,
    to_z2_cochain,
    tree_gauge,
    union_bound,
)
from utils.errors import BudgetExceeded, InvalidInput

SMALL_GROUPS = [cyclic_group(2), cyclic_group(3), symmetric_group(3)]


def test_group_orders():
    assert cyclic_group(5).order == 5
    assert symmetric_group(3).order == 6
    assert symmetric_group(4).order == 24
    assert alternating_group(5).order == 60
    assert psl27().order == 168


def test_abelian_flag():
    assert cyclic_group(4).is_abelian
    assert not symmetric_group(3).is_abelian
    assert not alternating_group(5).is_abelian


def test_group_inverses_and_conjugation():
    s3 = symmetric_group(3)
    for a in s3.elements():
        assert s3.mul(a, s3.inv(a)) == s3.identity
        assert s3.conjugate(a, s3.identity) == s3.identity


def test_bad_multiplication_tables():
    with pytest.raises(InvalidInput):
        FiniteGroup("bad", ((0, 1), (1, 1)))
    with pytest.raises(InvalidInput):
        FiniteGroup("ragged", ((0, 1), (1,)))


def test_group_by_name():
    assert group_by_name("s3").order == 6
    assert group_by_name("Z7").order == 7
    assert group_by_name("A5").order == 60
    assert group_by_name("PSL(2,7)").order == 168
    with pytest.raises(InvalidInput):
        group_by_name("Q8")


def test_simple_groups():
    assert [g.name for g in simple_groups(10)] == ["Z2", "Z3", "Z5", "Z7"]
    names = [g.name for g in simple_groups(60)]
    assert "A5" in names
    assert "PSL(2,7)" not in names


def test_from_edges_reverses_orientation():
    s3 = symmetric_group(3)
    x = simplex_skeleton(3, 2)
    g = next(a for a in s3.elements() if s3.mul(a, a) != s3.identity)
    phi = NonAbCochain1.from_edges(x, s3, {(1, 0): g})
    assert phi.value(1, 0) == g
    assert phi.value(0, 1) == s3.inv(g)
    assert phi.support() == [(0, 1)]
    with pytest.raises(InvalidInput):
        NonAbCochain1.from_edges(x, s3, {(0, 5): g})


def test_d1_of_single_edge():
    z3 = cyclic_group(3)
    x = simplex_skeleton(3, 2)
    phi = NonAbCochain1.from_edges(x, z3, {(0, 1): 1})
    assert d1(phi) == {(0, 1, 2): 1}
    assert d1_norm(phi) == 1
    assert not is_cocycle(phi)
    assert is_cocycle(NonAbCochain1.identity(x, z3))


def test_action_preserves_d1_norm(rng):
    s3 = symmetric_group(3)
    x = simplex_skeleton(5, 2)
    for _ in range(20):
        phi = random_cochain(x, s3, rng)
        psi = [int(v) for v in rng.integers(0, 6, size=5)]
        assert d1_norm(act(psi, phi)) == d1_norm(phi)


def test_tree_gauge_trivializes_forest(rng):
    s3 = symmetric_group(3)
    x = simplex_skeleton(5, 2)
    assert spanning_forest(x) == [(0, 1), (0, 2), (0, 3), (0, 4)]
    phi = random_cochain(x, s3, rng)
    gauged = act(tree_gauge(phi), phi)
    assert all(gauged.value(u, v) == s3.identity for u, v in spanning_forest(x))


def test_to_z2_cochain():
    x = simplex_skeleton(3, 2)
    phi = NonAbCochain1.from_edges(x, cyclic_group(2), {(0, 2): 1})
    assert to_z2_cochain(phi).support() == [(0, 2)]
    with pytest.raises(InvalidInput):
        to_z2_cochain(NonAbCochain1.identity(x, cyclic_group(3)))


def test_non_simplicial_hosts_are_rejected():
    with pytest.raises(InvalidInput):
        NonAbCochain1.identity(simplex_skeleton(5, 3), cyclic_group(2))


def test_circle_orbits(circle):
    assert abelian_h1_dim(circle, 2) == 1
    assert h1_orbits(circle, cyclic_group(2)).count == 2
    # Hom(Z, S3)/S3 - классы сопряжённости S3
    assert h1_orbits(circle, symmetric_group(3)).count == 3
    assert hom_pi1_orbits(circle, symmetric_group(3)) == 3


def test_raw_enumeration_agrees_on_circle(circle):
    for group in SMALL_GROUPS:
        assert len(h1_orbits_raw(circle, group)) == len(h1_orbits(circle, group))


def test_simply_connected_complex_has_trivial_h1(k4_skeleton):
    for group in SMALL_GROUPS:
        assert h1_orbits(k4_skeleton, group).count == 1
        assert not has_nontrivial_h1(k4_skeleton, group)
    assert abelian_h1_dim(k4_skeleton, 3) == 0


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("group", SMALL_GROUPS, ids=lambda g: g.name)
def test_orbits_match_pi1_homomorphisms(seed, group):
    n = 4 + seed % 2
    y = random_Ynp(n, 0.4, seed=seed)
    assert h1_orbits(y, group).count == hom_pi1_orbits(y, group)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("m", [2, 3])
def test_abelian_orbits_count_cohomology(seed, m):
    y = random_Ynp(5, 0.3, seed=seed)
    assert h1_orbits(y, cyclic_group(m)).count == m ** abelian_h1_dim(y, m)


def test_abelian_h1_dim_needs_prime():
    with pytest.raises(InvalidInput):
        abelian_h1_dim(simplex_skeleton(3, 2), 4)


def test_h1_budget():
    y = random_Ynp(6, 0.0, seed=0)
    with pytest.raises(BudgetExceeded):
        h1_orbits(y, symmetric_group(3), budget=100)


def test_bw1_single_edge_is_tight():
    x = simplex_skeleton(3, 2)
    phi = NonAbCochain1.from_edges(x, cyclic_group(3), {(0, 1): 1})
    report = bw1_check(phi)
    assert report["d1_norm"] == 1
    assert report["csy"] == 1
    assert report["bound"] == 1
    assert report["holds"] and report["tight"]


@pytest.mark.parametrize("group", SMALL_GROUPS[:2], ids=lambda g: g.name)
def test_bw1_inequality_on_random_cochains(group):
    x = simplex_skeleton(5, 2)
    rng = np.random.default_rng(7)
    for _ in range(100):
        assert bw1_check(random_cochain(x, group, rng))["holds"]


def test_bw1_needs_full_skeleton(circle):
    with pytest.raises(InvalidInput):
        bw1_check(NonAbCochain1.identity(circle, cyclic_group(2)))


def test_nonab_csy_of_coboundary_is_zero(rng):
    s3 = symmetric_group(3)
    x = simplex_skeleton(4, 2)
    psi = [int(v) for v in rng.integers(0, 6, size=4)]
    assert nonab_csy(act(psi, NonAbCochain1.identity(x, s3))) == 0


def test_union_bound_on_triangle():
    assert union_bound(3, cyclic_group(2), Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(InvalidInput):
        union_bound(2, cyclic_group(2), 0.5)


def test_quotient_experiment_at_full_density():
    report = quotient_experiment(5, 0.5, trials=3, seed=1)
    assert report["p"] == 1.0
    assert report["groups"] == ["Z2"]
    assert report["nontrivial"] == 0
    assert report["fraction_nontrivial"] == 0


def test_quotient_experiment_without_triangles():
    report = quotient_experiment(4, 0.5, trials=2, p=0.0, groups=[cyclic_group(2)])
    assert report["fraction_nontrivial"] == 1
    rows = report_rows(report)
    assert rows[0]["group"] == "Z2"
    text = rows_to_csv(rows)
    assert text.splitlines()[0] == "n,p,group,trials,fraction_nontrivial,skipped"


def test_quotient_experiment_rejects_tiny_inputs():
    with pytest.raises(InvalidInput):
        quotient_experiment(2, 0.5, trials=1)


def test_threshold_sweep_extremes():
    rows = threshold_sweep(6, [0.0, 1.0], trials=2)
    assert [row["vanishing"] for row in rows] == [0, 2]
    assert rows[1]["fraction"] == 1


def test_homology_threshold_points():
    lo, hi = homology_threshold_points(40)
    assert 0 <= lo < hi <= 1

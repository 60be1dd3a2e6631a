import pytest

from mcclass.axioms import (OrbitLocalData, Weight, check_additivity,
                            check_divisibility, check_normalization,
                            check_segre_consistency, check_smallness_strict,
                            check_support, orbit_local_data, quadratic_cone_class,
                            quadratic_cone_euler, run_axiom_suite)
from mcclass.combi import Composition, IndexTuple, Permutation, enumerate_index_tuples, length
from mcclass.newton import newton_polytope, is_vertex
from mcclass.ring import LaurentPoly, exact_divide
from mcclass.weightfn import TorusSpecialization, localization_table


def test_orbit_local_data_n2():
    open_cell = IndexTuple((1, 1), [(1,), (2,)])
    point_cell = IndexTuple((1, 1), [(2,), (1,)])
    d_open = orbit_local_data(open_cell)
    assert d_open.normal == ()
    assert d_open.tangent_cell == (Weight(num=2, den=1),)
    d_point = orbit_local_data(point_cell)
    assert d_point.tangent_cell == ()
    assert d_point.normal == (Weight(num=1, den=2),)


def test_orbit_local_data_n1_empty():
    I = IndexTuple((1,), [(1,)])
    d = orbit_local_data(I)
    assert d.tangent_cell == () and d.normal == ()


@pytest.mark.parametrize("parts", [(1, 1), (2, 1), (1, 1, 1), (2, 2), (1, 2, 1)])
def test_counts_match_codimension(parts):
    mu = Composition(parts)
    dim = None
    for I in enumerate_index_tuples(mu):
        d = orbit_local_data(I)
        if dim is None:
            dim = len(d.tangent_cell) + len(d.normal)
        assert len(d.tangent_cell) + len(d.normal) == dim
        assert len(d.normal) == length(I)


def test_point_cell_euler_is_nonzero_with_origin_vertex():
    for n in (2, 3, 4):
        mu = Composition((1,) * n)
        spec = TorusSpecialization.standard(n)
        for I in enumerate_index_tuples(mu):
            d = orbit_local_data(I)
            ek = d.ek_normal(spec)
            assert not ek.is_zero()
            assert is_vertex(newton_polytope(ek), spec.zero_exp())


@pytest.mark.parametrize("n", [1, 2, 3])
def test_axiom_suite_small(n):
    report = run_axiom_suite(n)
    assert report.ok, [e.to_json() for e in report.violations]


@pytest.mark.slow
def test_axiom_suite_n4():
    report = run_axiom_suite(4)
    assert report.ok, [e.to_json() for e in report.violations]


def test_checks_individually_n3():
    mu = Composition((1, 1, 1))
    spec = TorusSpecialization.standard(3)
    table = localization_table(mu, modified=True, spec=spec, method="direct")
    assert check_normalization(mu, table, spec).ok
    assert check_support(mu, table, spec).ok
    assert check_divisibility(mu, table, spec).ok
    assert check_smallness_strict(mu, table, spec).ok
    assert check_additivity(mu, table, spec).ok
    assert check_segre_consistency(mu, table, spec).ok


def test_smallness_n2_instance():
    # the single nonzero off-diagonal pair at n=2: polytopes by hand
    mu = Composition((1, 1))
    spec = TorusSpecialization.standard(2)
    table = localization_table(mu, modified=True, spec=spec, method="direct")
    I = IndexTuple(mu, [(1,), (2,)])
    J = IndexTuple(mu, [(2,), (1,)])
    small = newton_polytope(table[I][J])
    assert small.points == ((-1, 1),)
    big = newton_polytope(table[J][J])
    assert set(big.points) == {(0, 0), (-1, 1)}
    assert is_vertex(big, (0, 0))
    assert not small.contains_point((0, 0))


def test_report_json_shape():
    report = check_normalization((1, 1))
    blob = report.to_json()
    assert blob["violations"] == 0
    assert blob["checked"] == 2


# ---------------------------------------------------------------------------
# quadratic cone
# ---------------------------------------------------------------------------


def test_cone_divisible_by_one_plus_y_twice():
    mc = quadratic_cone_class()
    oy = LaurentPoly.constant(mc.vars, (1, 1))
    once = exact_divide(mc, oy)
    twice = exact_divide(once, oy)
    assert not twice.is_zero()


def test_cone_y_zero_is_alpha_minus_2():
    mc = quadratic_cone_class()
    at0 = mc.subst_y(())
    assert at0 == LaurentPoly.monomial(mc.vars, (-2, 0, 0))


def test_cone_euler_factors():
    ek = quadratic_cone_euler()
    assert ek.terms[(0, 0, 0)] == (1,)
    assert (-4, 0, 0) in ek.terms

import itertools

import pytest

from mcclass.axioms import orbit_local_data
from mcclass.combi import Composition, IndexTuple, Permutation, closure_leq, enumerate_index_tuples
from mcclass.ring import (LaurentPoly, RationalExpr, exact_divide, poly_from_json,
                          poly_to_json)
from mcclass.weightfn import (PSI_EQUAL, PSI_GREATER, PSI_LESS, LocalizedClass,
                              TorusSpecialization, VariablePanel, c_mu_at,
                              c_prime_mu_at, chern_products, full_flag_table_recursive,
                              localization_table, modified_restriction_direct,
                              psi_factor, restrict_to_fixed_point, restriction_direct,
                              u_term, weight_function)

MU11 = Composition((1, 1))
I12 = IndexTuple(MU11, [(1,), (2,)])
I21 = IndexTuple(MU11, [(2,), (1,)])


def spec2():
    return TorusSpecialization.standard(2)


# ---------------------------------------------------------------------------
# psi factors
# ---------------------------------------------------------------------------


def test_psi_cases_mu_1_1():
    assert psi_factor(I12, 1, 1, 1).kind == PSI_EQUAL
    assert psi_factor(I12, 1, 1, 2).kind == PSI_GREATER
    assert psi_factor(I21, 1, 1, 1).kind == PSI_LESS


def test_psi_factor_applies_to_monomial():
    panel = VariablePanel(MU11)
    xi = panel.ratio("a1_1", "t1")
    out = psi_factor(I12, 1, 1, 1)(xi)
    assert out == xi.scale_ypoly((1, 1))


# ---------------------------------------------------------------------------
# u_term and weight functions
# ---------------------------------------------------------------------------


def _u12_expected(panel):
    # (1+y)(a/t1) * (1 + y a/t2)
    a_over_t1 = panel.ratio("a1_1", "t1")
    a_over_t2 = panel.ratio("a1_1", "t2")
    return a_over_t1.scale_ypoly((1, 1)) * (panel.one() + a_over_t2.scale_ypoly((0, 1)))


def _u21_expected(panel):
    a_over_t1 = panel.ratio("a1_1", "t1")
    a_over_t2 = panel.ratio("a1_1", "t2")
    return (panel.one() - a_over_t1) * a_over_t2.scale_ypoly((1, 1))


def test_u_term_mu_1_1():
    panel = VariablePanel(MU11)
    u = u_term(I12, panel)
    assert u == RationalExpr(_u12_expected(panel))
    u2 = u_term(I21, panel)
    assert u2 == RationalExpr(_u21_expected(panel))


def test_u_term_single_block_is_one():
    mu = Composition((2,))
    I = IndexTuple(mu, [(1, 2)])
    u = u_term(I)
    assert u.num == u.den  # the empty product


def test_weight_function_mu_1_1():
    panel = VariablePanel(MU11)
    assert weight_function(I12, panel) == _u12_expected(panel)
    assert weight_function(I21, panel) == _u21_expected(panel)


def test_weight_function_symmetric_in_groups():
    mu = Composition((1, 1, 1))
    panel = VariablePanel(mu)
    for I in enumerate_index_tuples(mu):
        W = weight_function(I, panel)
        swapped = W.rename_vars({"a2_1": "a2_2", "a2_2": "a2_1"})
        assert swapped == W


def test_weight_function_restriction_example_open_cell_n3():
    # W restricted at the identity point equals c_mu * prod (1 + y t_i/t_j)
    mu = Composition((1, 1, 1))
    spec = TorusSpecialization.standard(3)
    I = IndexTuple(mu, [(1,), (2,), (3,)])
    got = modified_restriction_direct(I, I, spec)
    expected = (spec.one_plus_y_ratio(1, 2) * spec.one_plus_y_ratio(1, 3)
                * spec.one_plus_y_ratio(2, 3))
    assert got == expected


# ---------------------------------------------------------------------------
# chern products
# ---------------------------------------------------------------------------


def test_chern_products_mu_1_1():
    panel = VariablePanel(MU11)
    c, cp = chern_products(MU11, panel)
    assert c == LaurentPoly.constant(panel.vars, (1, 1))
    expected_cp = ((panel.one() + panel.ratio("a1_1", "t1").scale_ypoly((0, 1)))
                   * (panel.one() + panel.ratio("a1_1", "t2").scale_ypoly((0, 1))))
    assert cp == expected_cp


def test_chern_products_mu_1():
    mu = Composition((1,))
    c, cp = chern_products(mu)
    assert c.is_one() and cp.is_one()


def test_chern_products_mu_1_1_1_c():
    mu = Composition((1, 1, 1))
    panel = VariablePanel(mu)
    c, _ = chern_products(mu, panel)
    expected = (LaurentPoly.constant(panel.vars, (1, 1)) ** 3
                * (panel.one() + panel.ratio("a2_1", "a2_2").scale_ypoly((0, 1)))
                * (panel.one() + panel.ratio("a2_2", "a2_1").scale_ypoly((0, 1))))
    assert c == expected


# ---------------------------------------------------------------------------
# fixed-point restrictions (the n = 2 oracle values)
# ---------------------------------------------------------------------------


def test_modified_restrictions_n2():
    spec = spec2()
    assert modified_restriction_direct(I12, I12, spec) == \
        spec.one() + spec.ratio(1, 2).scale_ypoly((0, 1))
    assert modified_restriction_direct(I12, I21, spec) == \
        spec.ratio(2, 1).scale_ypoly((1, 1))
    assert modified_restriction_direct(I21, I12, spec).is_zero()
    assert modified_restriction_direct(I21, I21, spec) == \
        spec.one() - spec.ratio(2, 1)


def test_restriction_direct_agrees_with_global_substitution():
    for mu in (MU11, Composition((2, 1)), Composition((1, 1, 1))):
        panel = VariablePanel(mu)
        spec = TorusSpecialization.standard(mu.n)
        for I in enumerate_index_tuples(mu):
            W = weight_function(I, panel)
            for J in enumerate_index_tuples(mu):
                direct = restriction_direct(I, J, spec)
                global_ = restrict_to_fixed_point(W, J, spec, panel)
                assert direct == global_, (I, J)


def test_localization_table_mu_1():
    table = localization_table(Composition((1,)))
    (I,) = table
    assert table[I][I].is_one()


# ---------------------------------------------------------------------------
# invariants across a panel of compositions
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("parts", [(1, 1), (2, 1), (1, 2), (1, 1, 1), (2, 2),
                                   (1, 1, 2), (1, 2, 1), (1, 1, 1, 1)])
def test_additivity_identity(parts):
    mu = Composition(parts)
    spec = TorusSpecialization.standard(mu.n)
    table = localization_table(mu, modified=True, spec=spec, method="direct")
    points = list(table)
    for J in points:
        total = spec.zero()
        for I in points:
            total = total + table[I][J]
        assert total == orbit_local_data(J).ck_full(spec), J


@pytest.mark.parametrize("parts", [(1, 1), (2, 1), (1, 1, 1), (2, 2), (1, 1, 1, 1)])
def test_support_triangularity(parts):
    mu = Composition(parts)
    spec = TorusSpecialization.standard(mu.n)
    table = localization_table(mu, modified=True, spec=spec, method="direct")
    for I in table:
        for J, val in table[I].table.items():
            if not closure_leq(I, J):
                assert val.is_zero(), (I, J)


@pytest.mark.parametrize("parts", [(1, 1), (2, 1), (1, 1, 1), (2, 2)])
def test_segre_consistency(parts):
    # c_mu at J times the full lambda_y tangent product equals c'_mu at J,
    # so the plain/modified/Segre normalizations agree at every point.
    mu = Composition(parts)
    spec = TorusSpecialization.standard(mu.n)
    for J in enumerate_index_tuples(mu):
        lhs = c_mu_at(J, spec) * orbit_local_data(J).ck_full(spec)
        assert lhs == c_prime_mu_at(J, spec), J


# ---------------------------------------------------------------------------
# the recursion route
# ---------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("modified", [True, False])
def test_recursion_matches_direct(n, modified):
    mu = Composition((1,) * n)
    spec = TorusSpecialization.standard(n)
    direct = localization_table(mu, modified=modified, spec=spec, method="direct")
    rec = localization_table(mu, modified=modified, spec=spec, method="recursion")
    for I in direct:
        assert direct[I].table == rec[I].table


@pytest.mark.slow
def test_recursion_matches_direct_n4():
    mu = Composition((1, 1, 1, 1))
    spec = TorusSpecialization.standard(4)
    direct = localization_table(mu, modified=True, spec=spec, method="direct")
    rec = localization_table(mu, modified=True, spec=spec, method="recursion")
    for I in direct:
        assert direct[I].table == rec[I].table


def test_recursion_matches_direct_one_parameter_spot_n5():
    # honest spot check of the fast route at n = 5: a few direct entries
    spec = TorusSpecialization.one_parameter(5)
    rows = full_flag_table_recursive(5, spec, modified=True)
    mu = Composition((1,) * 5)
    cases = [((1, 2, 3, 4, 5), (5, 4, 3, 2, 1)),
             ((2, 1, 3, 4, 5), (2, 1, 3, 4, 5)),
             ((3, 1, 4, 2, 5), (5, 3, 4, 2, 1))]
    for pw, vw in cases:
        I = Permutation(pw).to_index_tuple()
        J = Permutation(vw).to_index_tuple()
        direct = modified_restriction_direct(I, J, spec)
        assert rows[Permutation(pw)][Permutation(vw)] == direct


def test_localization_table_parallel_matches_serial():
    mu = Composition((1, 1, 1))
    spec = TorusSpecialization.standard(3)
    serial = localization_table(mu, modified=True, spec=spec, method="direct", jobs=1)
    parallel = localization_table(mu, modified=True, spec=spec, method="direct", jobs=2)
    for I in serial:
        assert serial[I].table == parallel[I].table


def test_localized_class_json_round_trip():
    table = localization_table(MU11, modified=True)
    cls = table[I12]
    blob = cls.to_json()
    assert blob["mu"] == [1, 1]
    values = {tuple(e["point"]["blocks"][0]): poly_from_json(e["value"])
              for e in blob["entries"]}
    assert values[(1,)] == cls[I12]
    assert values[(2,)] == cls[I21]

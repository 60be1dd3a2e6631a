"""Axiomatic checks on localized classes: normalization, divisibility,
support, strict polytope smallness, plus the quadratic-cone example.

Tangent weights of the flag variety at a fixed point J pair an element
a of an earlier block with an element b of a later block; the weight is
tau_b/tau_a.  The pair is normal to the cell exactly when a > b, which
makes the normal count equal the cell codimension and makes the
normalization identity hold; this combinatorial split is pinned by the
n = 2 and n = 3 oracles in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .combi import Composition, IndexTuple, closure_leq, enumerate_index_tuples, length
from .newton import LatticePolytope, is_vertex, minkowski_sum, newton_polytope, polytope_contained
from .report import Report, ReportEntry
from .ring import (LaurentPoly, NonDivisibleError, RationalExpr, YP_ONE, YP_ONE_PLUS_Y,
                   YP_Y, exact_divide, yp_mul)
from .weightfn import LocalizedClass, TorusSpecialization, c_mu_at, localization_table


@dataclass(frozen=True)
class Weight:
    """The character tau_num / tau_den."""

    num: int
    den: int


@dataclass(frozen=True)
class OrbitLocalData:
    """Tangent data of a cell at its own fixed point.

    tangent_cell are the weights along the cell, normal the weights of
    the normal space inside the ambient flag variety; together they
    exhaust the tangent space of the ambient at the point.
    """

    point: IndexTuple
    tangent_cell: tuple
    normal: tuple

    def ek_normal(self, spec: TorusSpecialization) -> LaurentPoly:
        """prod over normal weights chi of (1 - 1/chi)."""
        out = spec.one()
        for w in self.normal:
            out = out * spec.one_minus_ratio(w.den, w.num)
        return out

    def ck_cell(self, spec: TorusSpecialization) -> LaurentPoly:
        """prod over cell-tangent weights chi of (1 + y/chi)."""
        out = spec.one()
        for w in self.tangent_cell:
            out = out * spec.one_plus_y_ratio(w.den, w.num)
        return out

    def ck_full(self, spec: TorusSpecialization) -> LaurentPoly:
        """prod over all ambient tangent weights chi of (1 + y/chi)."""
        return self.ck_cell(spec) * self.ck_normal(spec)

    def ck_normal(self, spec: TorusSpecialization) -> LaurentPoly:
        out = spec.one()
        for w in self.normal:
            out = out * spec.one_plus_y_ratio(w.den, w.num)
        return out


def orbit_local_data(I: IndexTuple) -> OrbitLocalData:
    """Split the ambient tangent weights at the fixed point of I."""
    blocks = I.blocks
    cell = []
    normal = []
    for j in range(len(blocks)):
        for k in range(j + 1, len(blocks)):
            for a in blocks[j]:
                for b in blocks[k]:
                    w = Weight(num=b, den=a)
                    if a > b:
                        normal.append(w)
                    else:
                        cell.append(w)
    return OrbitLocalData(I, tuple(cell), tuple(normal))


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def _table_or_build(mu, table, spec, jobs=1):
    if not isinstance(mu, Composition):
        mu = Composition(mu)
    if spec is None:
        spec = TorusSpecialization.standard(mu.n)
    if table is None:
        table = localization_table(mu, modified=True, spec=spec, jobs=jobs)
    return mu, table, spec


def check_normalization(mu, table: Mapping | None = None,
                        spec: TorusSpecialization | None = None,
                        jobs: int = 1) -> Report:
    """Diagonal identity: each class restricts at its own point to
    the normal Euler factor times the cell Chern factor."""
    mu, table, spec = _table_or_build(mu, table, spec, jobs)
    report = Report("normalization")
    for I, cls in table.items():
        data = orbit_local_data(I)
        expected = data.ek_normal(spec) * data.ck_cell(spec)
        got = cls[I]
        report.add(ReportEntry(pair=(str(I), str(I)), check="normalization",
                               ok=(got == expected),
                               witness=None if got == expected else
                               {"got": _pstr(got), "expected": _pstr(expected)}))
    return report


def check_support(mu, table: Mapping | None = None,
                  spec: TorusSpecialization | None = None,
                  jobs: int = 1) -> Report:
    """Vanishing off the cell closure: the restriction at J is zero
    unless the cell of J lies in the closure of the cell of I."""
    mu, table, spec = _table_or_build(mu, table, spec, jobs)
    report = Report("support")
    for I, cls in table.items():
        for J, val in cls.table.items():
            if closure_leq(I, J):
                continue
            report.add(ReportEntry(pair=(str(I), str(J)), check="support",
                                   ok=val.is_zero(),
                                   witness=None if val.is_zero() else
                                   {"restriction": _pstr(val)}))
    return report


def check_divisibility(mu, table: Mapping | None = None,
                       spec: TorusSpecialization | None = None,
                       jobs: int = 1) -> Report:
    """Every restriction is divisible by the cell Chern factor of the
    point where it is restricted."""
    mu, table, spec = _table_or_build(mu, table, spec, jobs)
    divisors = {J: orbit_local_data(J).ck_cell(spec) for J in table}
    report = Report("divisibility")
    for I, cls in table.items():
        for J, val in cls.table.items():
            if val.is_zero():
                continue
            try:
                exact_divide(val, divisors[J])
                ok, witness = True, None
            except NonDivisibleError as err:
                ok = False
                witness = {"remainder": _pstr(err.remainder)
                           if err.remainder is not None else None}
            report.add(ReportEntry(pair=(str(I), str(J)), check="divisibility",
                                   ok=ok, witness=witness))
    return report


def check_smallness_strict(mu, table: Mapping | None = None,
                           spec: TorusSpecialization | None = None,
                           jobs: int = 1) -> Report:
    """Strict polytope containment with an origin-vertex certificate.

    For every ordered pair I != J with a nonzero restriction:
      * the support polytope of the restriction sits inside the
        Minkowski sum of the shifted Euler polytope and the cell Chern
        polytope at J,
      * that sum is properly contained in the diagonal polytope at J,
      * the origin is a vertex of the diagonal polytope but lies
        outside the off-diagonal polytope.
    """
    mu, table, spec = _table_or_build(mu, table, spec, jobs)
    report = Report("smallness")
    origin = spec.zero_exp()
    diag_data = {}
    for J in table:
        data = orbit_local_data(J)
        ek = data.ek_normal(spec)
        ck = data.ck_cell(spec)
        ek_minus_1 = ek - spec.one()
        diag = table[J][J]
        entry = {
            "mid": (minkowski_sum(newton_polytope(ek_minus_1), newton_polytope(ck))
                    if not ek_minus_1.is_zero() else None),
            "big": newton_polytope(diag),
        }
        diag_data[J] = entry
    for I, cls in table.items():
        for J, val in cls.table.items():
            if I == J or val.is_zero():
                continue
            small = newton_polytope(val)
            mid = diag_data[J]["mid"]
            big = diag_data[J]["big"]
            problems = []
            if mid is None:
                # codimension zero cell: no normal directions, the bound
                # degenerates and only the origin conditions remain
                if not polytope_contained(small, big):
                    problems.append("restriction polytope escapes the diagonal polytope")
            else:
                if not polytope_contained(small, mid):
                    problems.append("restriction polytope escapes the Minkowski bound")
                if not polytope_contained(mid, big):
                    problems.append("Minkowski bound escapes the diagonal polytope")
                if polytope_contained(big, mid):
                    problems.append("containment in the diagonal polytope is not strict")
            if not is_vertex(big, origin):
                problems.append("origin is not a vertex of the diagonal polytope")
            if small.contains_point(origin):
                problems.append("origin lies in the off-diagonal polytope")
            report.add(ReportEntry(pair=(str(I), str(J)), check="smallness",
                                   ok=not problems,
                                   witness={"problems": problems} if problems else None))
    return report


def check_additivity(mu, table: Mapping | None = None,
                     spec: TorusSpecialization | None = None,
                     jobs: int = 1) -> Report:
    """Sum over all cells of the modified rows equals the ambient
    lambda_y class of the cotangent directions at every point."""
    mu, table, spec = _table_or_build(mu, table, spec, jobs)
    report = Report("additivity")
    points = list(table)
    for J in points:
        total = spec.zero()
        for I in points:
            total = total + table[I][J]
        expected = orbit_local_data(J).ck_full(spec)
        report.add(ReportEntry(pair=(None, str(J)), check="additivity",
                               ok=(total == expected),
                               witness=None if total == expected else
                               {"got": _pstr(total), "expected": _pstr(expected)}))
    return report


def check_segre_consistency(mu, table: Mapping | None = None,
                            spec: TorusSpecialization | None = None,
                            jobs: int = 1) -> Report:
    """The two Chern products restrict compatibly with the tangent
    weights: c_mu * prod(1 + y/chi) = c'_mu at every fixed point, which
    makes the plain/modified/Segre normalizations agree."""
    from .weightfn import c_prime_mu_at
    mu, table, spec = _table_or_build(mu, table, spec, jobs)
    report = Report("segre")
    for J in table:
        lhs = c_mu_at(J, spec) * orbit_local_data(J).ck_full(spec)
        rhs = c_prime_mu_at(J, spec)
        report.add(ReportEntry(pair=(None, str(J)), check="segre",
                               ok=(lhs == rhs),
                               witness=None if lhs == rhs else
                               {"lhs": _pstr(lhs), "rhs": _pstr(rhs)}))
    return report


def run_axiom_suite(n: int, jobs: int = 1,
                    spec: TorusSpecialization | None = None) -> Report:
    """All checks for the full flag variety on n letters, one report."""
    mu = Composition((1,) * n)
    if spec is None:
        spec = TorusSpecialization.standard(n)
    table = localization_table(mu, modified=True, spec=spec, method="direct", jobs=jobs)
    combined = Report("axioms")
    for rep in (check_normalization(mu, table, spec),
                check_support(mu, table, spec),
                check_divisibility(mu, table, spec),
                check_smallness_strict(mu, table, spec),
                check_additivity(mu, table, spec),
                check_segre_consistency(mu, table, spec)):
        combined.extend(rep)
    return combined


def _pstr(p) -> str:
    from .ring import format_poly
    if isinstance(p, LaurentPoly):
        return format_poly(p)
    return str(p)


# ---------------------------------------------------------------------------
# The quadratic cone example
# ---------------------------------------------------------------------------

CONE_VARS = ("al", "be", "ga")


def quadratic_cone_class() -> LaurentPoly:
    """Motivic Chern class of the nondegenerate quadratic-cone complement,
    a torus acting on C^4 with characters al*be, al/be, al*ga, al/ga:

        (1+y)^2 * ( y^2/al^4
                    + y*(be/al^3 + ga/al^3 + 1/(al^3*be) + 1/(al^3*ga)
                         - 1/al^2 - 1/al^4)
                    + 1/al^2 ).
    """
    v = CONE_VARS
    inner = LaurentPoly(v, {
        (-4, 0, 0): (0, -1, 1),  # (y^2 - y) / al^4
        (-3, 1, 0): (0, 1),      # y * be / al^3
        (-3, 0, 1): (0, 1),      # y * ga / al^3
        (-3, -1, 0): (0, 1),     # y / (al^3 be)
        (-3, 0, -1): (0, 1),     # y / (al^3 ga)
        (-2, 0, 0): (1, -1),     # (1 - y) / al^2
    })
    one_plus_y = LaurentPoly.constant(v, YP_ONE_PLUS_Y)
    return one_plus_y * one_plus_y * inner


def quadratic_cone_euler() -> LaurentPoly:
    """prod over the four torus characters chi of (1 - 1/chi)."""
    v = CONE_VARS
    one = LaurentPoly.one(v)
    chars = [(1, 1, 0), (1, -1, 0), (1, 0, 1), (1, 0, -1)]
    out = one
    for e in chars:
        out = out * (one - LaurentPoly.monomial(v, tuple(-x for x in e)))
    return out


def quadratic_cone_ratio() -> RationalExpr:
    """The class divided by the Euler factor, ready for limit taking."""
    return RationalExpr(quadratic_cone_class(), quadratic_cone_euler())

"""Interpolation solvers for cohomological classes of orbits.

Given per-orbit restriction maps, Euler classes of normal spaces and
total Chern classes of tangent spaces, the fundamental class of an
orbit closure is the unique homogeneous solution of the vanishing and
normalization constraints, and the CSM class is the unique
inhomogeneous solution of the divisibility, normalization and degree
constraints.  Both are found as exact rational linear systems over a
symmetric-polynomial ansatz; answers are verified to be integral.

All cohomology classes here are ordinary polynomials (Chern-root
degree one per variable); the shared Laurent kernel is used with
nonnegative exponents and a trivial parameter slot.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .ring import LaurentPoly, format_poly, monomial_substitute


class NoSolutionError(ValueError):
    """The interpolation constraints are inconsistent."""


class NonUniqueError(ValueError):
    """The interpolation constraints do not pin a unique class."""


# ---------------------------------------------------------------------------
# Orbit data
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitSpec:
    """One orbit: restriction map, Euler class and tangent Chern class
    (both already written in the image variables of the restriction)."""

    name: str
    codim: int
    phi: dict          # variable -> image variable (unmapped: identity)
    euler: LaurentPoly
    tangent_c: LaurentPoly

    def __post_init__(self):
        if self.euler.is_zero():
            raise ValueError(f"orbit {self.name}: Euler class must be nonzero")


@dataclass(frozen=True)
class SymmetricAnsatz:
    """Monomials in elementary symmetric generators up to a degree bound.

    groups is a list of (label, variables); the generators of a group
    are its elementary symmetric polynomials E_label_k of degree k.
    """

    groups: tuple
    vars: tuple

    @classmethod
    def from_groups(cls, groups: Sequence) -> "SymmetricAnsatz":
        groups = tuple((label, tuple(vs)) for label, vs in groups)
        vars = tuple(v for _, vs in groups for v in vs)
        return cls(groups, vars)

    def generators(self):
        """(name, degree, polynomial) for every elementary symmetric
        generator, in group order then degree order."""
        out = []
        for label, vs in self.groups:
            for k in range(1, len(vs) + 1):
                out.append((f"{label}{k}", k, _esym(self.vars, vs, k)))
        return out

    def basis(self, degree: int, homogeneous: bool = False):
        """Monomials in the generators with weighted degree <= degree
        (== degree when homogeneous), as (name, polynomial) pairs in a
        deterministic order."""
        gens = self.generators()
        out = []

        def rec(idx: int, deg_left: int, name_parts, poly: LaurentPoly):
            if idx == len(gens):
                deg = degree - deg_left
                if homogeneous and deg != degree:
                    return
                out.append(("*".join(name_parts) if name_parts else "1", poly))
                return
            gname, gdeg, gpoly = gens[idx]
            power = 0
            acc = poly
            while power * gdeg <= deg_left:
                parts = name_parts + ([f"{gname}^{power}" if power > 1 else gname]
                                      if power else [])
                rec(idx + 1, deg_left - power * gdeg, parts, acc)
                power += 1
                if power * gdeg <= deg_left:
                    acc = acc * gpoly
            return

        rec(0, degree, [], LaurentPoly.one(self.vars))
        return out


def _esym(all_vars: Sequence[str], vs: Sequence[str], k: int) -> LaurentPoly:
    out = LaurentPoly.zero(all_vars)
    for comb in itertools.combinations(vs, k):
        e = [0] * len(all_vars)
        for v in comb:
            e[all_vars.index(v)] = 1
        out = out + LaurentPoly.monomial(all_vars, e)
    return out


# ---------------------------------------------------------------------------
# JSON ingestion
# ---------------------------------------------------------------------------


def _poly_from_factors(factors, vars) -> LaurentPoly:
    """Product of affine-linear factors {const, coeffs: {var: c}}."""
    out = LaurentPoly.one(vars)
    for f in factors:
        term = LaurentPoly.constant(vars, int(f.get("const", 0)))
        for v, c in f.get("coeffs", {}).items():
            term = term + LaurentPoly.variable(vars, v).scale_ypoly((int(c),))
        out = out * term
    return out


def _auto_label(vars: Sequence[str]) -> str:
    head = vars[0]
    prefix = "".join(ch for ch in head if ch.isalpha())
    return (prefix or head).upper()


def _groups_from_json(obj: Mapping):
    """Accept either explicit labelled groups or a flat variable list
    with symmetry blocks; leftovers become singleton groups."""
    if "groups" in obj:
        return [(g["label"], tuple(g["vars"])) for g in obj["groups"]]
    vars = list(obj["vars"])
    blocks = [tuple(b) for b in obj.get("symmetry", [])]
    covered = {v for b in blocks for v in b}
    groups = [(_auto_label(b), b) for b in blocks]
    for v in vars:
        if v not in covered:
            groups.append((_auto_label((v,)), (v,)))
    return groups


@dataclass(frozen=True)
class OrbitProblem:
    ansatz: SymmetricAnsatz
    orbits: tuple
    all_vars: tuple  # base variables plus every restriction image variable

    @classmethod
    def from_json(cls, obj: Mapping) -> "OrbitProblem":
        ansatz = SymmetricAnsatz.from_groups(_groups_from_json(obj))
        base = list(ansatz.vars)
        extra = []
        for o in obj["orbits"]:
            for img in o.get("phi", {}).values():
                if img not in base and img not in extra:
                    extra.append(img)
        all_vars = tuple(base + sorted(extra))
        orbits = []
        for o in obj["orbits"]:
            euler = _poly_from_factors(o.get("euler", []), all_vars)
            tangent = _poly_from_factors(o.get("tangent_c", []), all_vars)
            orbits.append(OrbitSpec(o["name"], int(o["codim"]),
                                    dict(o.get("phi", {})), euler, tangent))
        return cls(ansatz, tuple(orbits), all_vars)

    @classmethod
    def load(cls, path) -> "OrbitProblem":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))

    def orbit(self, name: str) -> OrbitSpec:
        for o in self.orbits:
            if o.name == name:
                return o
        raise KeyError(f"unknown orbit {name!r}")

    def restrict(self, p: LaurentPoly, o: OrbitSpec) -> LaurentPoly:
        images = {v: (1, {img: 1}) for v, img in o.phi.items()}
        return monomial_substitute(p, images, out_vars=self.all_vars)


# ---------------------------------------------------------------------------
# Exact linear algebra (two independent elimination routes)
# ---------------------------------------------------------------------------


def solve_unique_fractions(rows, rhs):
    """Gauss-Jordan over Fractions; returns the unique solution or
    raises NoSolutionError / NonUniqueError."""
    m = len(rows)
    if m == 0:
        raise NonUniqueError("no equations")
    n = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            raise NoSolutionError("inconsistent linear system")
    if len(pivots) < n:
        raise NonUniqueError(f"solution space has dimension {n - len(pivots)}")
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = aug[i][n]
    return x


def solve_unique_bareiss(rows, rhs):
    """Fraction-free Bareiss elimination over the integers; the second,
    independent elimination route used by the cross-check oracle.

    Forward elimination transforms only the rows below each pivot (the
    exact divisibility by the previous pivot holds there), then exact
    back-substitution finishes over rationals.
    """
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [[int(x) for x in row] + [int(b)] for row, b in zip(rows, rhs)]
    prev = 1
    r = 0
    pivots = []
    for c in range(n):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        piv = aug[r][c]
        for i in range(r + 1, m):
            fi = aug[i][c]
            aug[i] = [(piv * aug[i][k] - fi * aug[r][k]) // prev
                      for k in range(n + 1)]
        prev = piv
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if any(aug[i][k] for k in range(n)):
            raise AssertionError("elimination left a nonzero reduced row")
        if aug[i][n] != 0:
            raise NoSolutionError("inconsistent linear system")
    if len(pivots) < n:
        raise NonUniqueError(f"solution space has dimension {n - len(pivots)}")
    x = [Fraction(0)] * n
    for i in reversed(range(len(pivots))):
        c = pivots[i]
        acc = Fraction(aug[i][n])
        for j in range(c + 1, n):
            acc -= Fraction(aug[i][j]) * x[j]
        x[c] = acc / aug[i][c]
    return x


# ---------------------------------------------------------------------------
# Solvers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetricExpansion:
    """A class written in the symmetric-generator monomial basis."""

    coeffs: tuple  # ((name, coefficient), ...) nonzero, deterministic order
    poly: LaurentPoly

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for name, c in self.coeffs:
            body = name if abs(c) == 1 and name != "1" else (
                str(abs(c)) if name == "1" else f"{abs(c)}*{name}")
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json(self) -> dict:
        return {"coefficients": [{"monomial": n, "coeff": c} for n, c in self.coeffs]}


def _const(p: LaurentPoly, mono) -> int:
    c = p.terms.get(mono)
    return c[0] if c else 0


def _system_from_identities(basis_values_and_targets):
    """Rows of the linear system: one equation per monomial of every
    polynomial identity sum_j x_j * P_j == target."""
    rows = []
    rhs = []
    for basis_values, target in basis_values_and_targets:
        monomials = set(target.terms)
        for p in basis_values:
            monomials.update(p.terms)
        for mono in sorted(monomials):
            rows.append([_const(p, mono) for p in basis_values])
            rhs.append(_const(target, mono))
    return rows, rhs


def _as_expansion(names, polys, values) -> SymmetricExpansion:
    coeffs = []
    total = None
    for (name, poly), v in zip(zip(names, polys), values):
        if v == 0:
            continue
        if v.denominator != 1:
            raise NoSolutionError(f"non-integral coefficient {v} on {name}")
        c = int(v)
        coeffs.append((name, c))
        contrib = poly.scale_ypoly((c,))
        total = contrib if total is None else total + contrib
    if total is None:
        total = LaurentPoly.zero(polys[0].vars if polys else ())
    return SymmetricExpansion(tuple(coeffs), total)


def solve_fundamental(problem: OrbitProblem, target: str,
                      solver=solve_unique_fractions) -> SymmetricExpansion:
    """The unique homogeneous class of degree codim(target) vanishing on
    every orbit of codimension <= codim(target) and restricting to the
    Euler class at the target."""
    t = problem.orbit(target)
    basis = problem.ansatz.basis(t.codim, homogeneous=True)
    names = [n for n, _ in basis]
    polys = [p.extend_vars(problem.all_vars) for _, p in basis]
    identities = []
    for o in problem.orbits:
        if o.name == target:
            identities.append(([problem.restrict(p, o) for p in polys], o.euler))
        elif o.codim <= t.codim:
            identities.append(([problem.restrict(p, o) for p in polys],
                               LaurentPoly.zero(problem.all_vars)))
    rows, rhs = _system_from_identities(identities)
    values = solver(rows, rhs)
    return _as_expansion(names, polys, values)


@dataclass(frozen=True)
class CsmSolution:
    expansion: SymmetricExpansion
    restrictions: dict          # orbit name -> LaurentPoly
    lowest_degree: SymmetricExpansion
    fundamental: SymmetricExpansion

    @property
    def lowest_matches_fundamental(self) -> bool:
        return self.lowest_degree.coeffs == self.fundamental.coeffs

    def to_json(self) -> dict:
        return {
            "csm": self.expansion.to_json(),
            "restrictions": {k: format_poly(v) for k, v in self.restrictions.items()},
            "lowest_degree_component": self.lowest_degree.to_json(),
            "fundamental_class": self.fundamental.to_json(),
            "lowest_degree_matches_fundamental": self.lowest_matches_fundamental,
        }


def _degree(p: LaurentPoly) -> int:
    if p.is_zero():
        return -1
    return max(sum(e) for e in p.terms)


def solve_csm(problem: OrbitProblem, target: str,
              solver=solve_unique_fractions) -> CsmSolution:
    """The unique inhomogeneous class restricting to euler*tangent_c at
    the target and, at every other orbit, divisible by tangent_c with
    degree strictly below deg(euler*tangent_c).

    Divisibility is encoded linearly with an auxiliary quotient per
    orbit; the degree window for the quotient comes from the smallness
    condition.
    """
    t = problem.orbit(target)
    target_value = t.euler * t.tangent_c
    bound = _degree(target_value)
    for o in problem.orbits:
        if o.name != target:
            bound = max(bound, _degree(o.euler * o.tangent_c) - 1)

    basis = problem.ansatz.basis(bound, homogeneous=False)
    names = [n for n, _ in basis]
    polys = [p.extend_vars(problem.all_vars) for _, p in basis]

    columns = [[problem.restrict(p, o) for p in polys] for o in problem.orbits]
    zero = LaurentPoly.zero(problem.all_vars)

    # auxiliary quotient monomials per non-target orbit, in image variables
    aux_columns = {}
    for o in problem.orbits:
        if o.name == target:
            continue
        window = _degree(o.euler * o.tangent_c) - 1 - _degree(o.tangent_c)
        image_vars = sorted({o.phi.get(v, v) for v in problem.ansatz.vars})
        aux_columns[o.name] = _monomials_up_to(problem.all_vars, image_vars, window)

    unknown_count = len(polys) + sum(len(v) for v in aux_columns.values())
    aux_offsets = {}
    off = len(polys)
    for name, monos in aux_columns.items():
        aux_offsets[name] = off
        off += len(monos)

    rows = []
    rhs = []
    for idx, o in enumerate(problem.orbits):
        basis_values = columns[idx]
        if o.name == target:
            target_poly = target_value
            extra = {}
        else:
            # phi(P) - tangent_c * Q = 0 with Q an unknown quotient
            target_poly = zero
            extra = {aux_offsets[o.name] + k:
                     -(o.tangent_c * LaurentPoly.monomial(problem.all_vars, mono))
                     for k, mono in enumerate(aux_columns[o.name])}
        monomials = set(target_poly.terms)
        for p in basis_values:
            monomials.update(p.terms)
        for p in extra.values():
            monomials.update(p.terms)
        for mono in sorted(monomials):
            row = [0] * unknown_count
            for j, p in enumerate(basis_values):
                row[j] = _const(p, mono)
            for j, p in extra.items():
                row[j] = _const(p, mono)
            rows.append(row)
            rhs.append(_const(target_poly, mono))

    values = solver(rows, rhs)
    expansion = _as_expansion(names, polys, values[:len(polys)])

    restrictions = {o.name: problem.restrict(expansion.poly, o) for o in problem.orbits}
    fundamental = solve_fundamental(problem, target, solver)
    low = _degree(fundamental.poly) if not fundamental.poly.is_zero() else 0
    low_names, low_coeffs = [], []
    low_polys = []
    for (name, poly), v in zip(basis, values[:len(polys)]):
        pd = _degree(poly)
        if v != 0 and pd == low:
            low_names.append(name)
            low_coeffs.append(v)
            low_polys.append(poly.extend_vars(problem.all_vars))
    lowest = _as_expansion(low_names, low_polys, low_coeffs) if low_names else \
        SymmetricExpansion((), LaurentPoly.zero(problem.all_vars))
    return CsmSolution(expansion, restrictions, lowest, fundamental)


def _monomials_up_to(all_vars, image_vars, degree):
    """Exponent vectors over all_vars supported on image_vars with total
    degree <= degree (empty when degree < 0)."""
    if degree < 0:
        return []
    idx = [all_vars.index(v) for v in image_vars]
    out = []

    def rec(pos, left, current):
        if pos == len(idx):
            out.append(tuple(current))
            return
        for k in range(left + 1):
            nxt = list(current)
            nxt[idx[pos]] = k
            rec(pos + 1, left - k, nxt)

    rec(0, degree, [0] * len(all_vars))
    return sorted(out)

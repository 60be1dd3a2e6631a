"""Weight functions of cells and their fixed-point localization tables.

The weight function of an index tuple I is a symmetrization of an
explicit product U_I of three-case binomial factors.  Its fixed-point
restrictions assemble into localization tables which equal the
equivariant motivic Chern classes of matrix Schubert cells (plain) and
of flag-variety Schubert cells (modified, after division by a Chern
product).

Two table builders are provided: a direct one that evaluates the
symmetrization at each fixed point over the common denominator
prod (alpha_a - alpha_b), and a fast full-flag recursion that walks
descent edges with a two-term exchange operator.  The recursion is
pinned against the direct builder in the test suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

from .combi import Composition, IndexTuple, Permutation, enumerate_index_tuples, length
from .ring import (LaurentPoly, NonDivisibleError, RationalExpr, YP_ONE, YP_ONE_PLUS_Y,
                   YP_Y, YP_ZERO, Ypoly, exact_divide, yp_add, yp_mul)

# ---------------------------------------------------------------------------
# Variable panels and torus specializations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VariablePanel:
    """Chern-root variables a{j}_{k} per flag step, with the last group t{k}."""

    mu: Composition
    groups: tuple

    def __init__(self, mu: Composition | Sequence[int]):
        if not isinstance(mu, Composition):
            mu = Composition(mu)
        sums = mu.partial_sums
        groups = []
        for j in range(1, mu.num_blocks + 1):
            size = sums[j - 1]
            if j == mu.num_blocks:
                groups.append(tuple(f"t{k}" for k in range(1, size + 1)))
            else:
                groups.append(tuple(f"a{j}_{k}" for k in range(1, size + 1)))
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "groups", tuple(groups))

    @property
    def vars(self) -> tuple:
        return tuple(v for g in self.groups for v in g)

    @property
    def tau(self) -> tuple:
        return self.groups[-1]

    def var(self, j: int, a: int) -> str:
        """Name of the a-th Chern root of the j-th step (both 1-based)."""
        return self.groups[j - 1][a - 1]

    def one(self) -> LaurentPoly:
        return LaurentPoly.one(self.vars)

    def ratio(self, top: str, bottom: str) -> LaurentPoly:
        """The monomial top/bottom."""
        vars = self.vars
        e = [0] * len(vars)
        e[vars.index(top)] += 1
        e[vars.index(bottom)] -= 1
        return LaurentPoly.monomial(vars, e)


@dataclass(frozen=True)
class TorusSpecialization:
    """Monomial images of the torus variables tau_1..tau_n.

    The standard specialization keeps tau_i as independent variables
    t1..tn.  The one-parameter specialization sends tau_i to t^i, which
    keeps every needed binomial nonzero while collapsing all tables to
    univariate data; it computes non-equivariant answers exactly.
    """

    n: int
    vars: tuple
    images: tuple  # images[i-1] = exponent vector of tau_i

    @classmethod
    def standard(cls, n: int) -> "TorusSpecialization":
        vars = tuple(f"t{k}" for k in range(1, n + 1))
        images = tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
        return cls(n, vars, images)

    @classmethod
    def one_parameter(cls, n: int) -> "TorusSpecialization":
        return cls(n, ("t",), tuple((i,) for i in range(1, n + 1)))

    def zero_exp(self) -> tuple:
        return (0,) * len(self.vars)

    def tau_exp(self, i: int) -> tuple:
        return self.images[i - 1]

    def ratio_exp(self, i: int, j: int) -> tuple:
        """Exponent vector of tau_i / tau_j."""
        return tuple(a - b for a, b in zip(self.images[i - 1], self.images[j - 1]))

    def tau_monomial(self, i: int) -> LaurentPoly:
        return LaurentPoly.monomial(self.vars, self.tau_exp(i))

    def ratio(self, i: int, j: int) -> LaurentPoly:
        return LaurentPoly.monomial(self.vars, self.ratio_exp(i, j))

    def one(self) -> LaurentPoly:
        return LaurentPoly.one(self.vars)

    def zero(self) -> LaurentPoly:
        return LaurentPoly.zero(self.vars)

    def one_minus_ratio(self, i: int, j: int) -> LaurentPoly:
        """1 - tau_i/tau_j; nonzero whenever i != j."""
        e = self.ratio_exp(i, j)
        if not any(e):
            return self.zero()
        return LaurentPoly(self.vars, {self.zero_exp(): YP_ONE, e: (-1,)})

    def one_plus_y_ratio(self, i: int, j: int) -> LaurentPoly:
        """1 + y*tau_i/tau_j."""
        e = self.ratio_exp(i, j)
        if not any(e):
            return LaurentPoly.constant(self.vars, YP_ONE_PLUS_Y)
        return LaurentPoly(self.vars, {self.zero_exp(): YP_ONE, e: YP_Y})

    def tau_diff(self, i: int, j: int) -> LaurentPoly:
        """tau_i - tau_j."""
        out: dict = {}
        ei, ej = self.tau_exp(i), self.tau_exp(j)
        out[ei] = YP_ONE
        if ej == ei:
            return self.zero()
        out[ej] = (-1,)
        return LaurentPoly(self.vars, out)


# ---------------------------------------------------------------------------
# The three-case factor and the unsymmetrized term
# ---------------------------------------------------------------------------

PSI_LESS = "1-xi"
PSI_EQUAL = "(1+y)xi"
PSI_GREATER = "1+y*xi"


@dataclass(frozen=True)
class PsiFactor:
    """One factor of the unsymmetrized product: a function of a monomial.

    kind selects among 1 - xi, (1+y)*xi and 1 + y*xi according to the
    comparison of the interlaced union entries.
    """

    kind: str

    def __call__(self, xi: LaurentPoly) -> LaurentPoly:
        one = LaurentPoly.one(xi.vars)
        if self.kind == PSI_LESS:
            return one - xi
        if self.kind == PSI_EQUAL:
            return xi.scale_ypoly(YP_ONE_PLUS_Y)
        return one + xi.scale_ypoly(YP_Y)


def psi_factor(I: IndexTuple, j: int, a: int, b: int) -> PsiFactor:
    """Case split on i^{(j+1)}_b versus i^{(j)}_a (all indices 1-based)."""
    upper = I.unions[j][b - 1]
    lower = I.unions[j - 1][a - 1]
    if upper < lower:
        return PsiFactor(PSI_LESS)
    if upper == lower:
        return PsiFactor(PSI_EQUAL)
    return PsiFactor(PSI_GREATER)


def u_term(I: IndexTuple, panel: VariablePanel | None = None) -> RationalExpr:
    """The unsymmetrized rational term whose orbit sum is the weight function."""
    if panel is None:
        panel = VariablePanel(I.mu)
    sums = I.mu.partial_sums
    N = I.mu.num_blocks
    num = panel.one()
    for j in range(1, N):
        for a in range(1, sums[j - 1] + 1):
            for b in range(1, sums[j] + 1):
                xi = panel.ratio(panel.var(j, a), panel.var(j + 1, b))
                num = num * psi_factor(I, j, a, b)(xi)
        for a in range(1, sums[j - 1] + 1):
            for b in range(a + 1, sums[j - 1] + 1):
                num = num * (panel.one()
                             + panel.ratio(panel.var(j, b), panel.var(j, a)).scale_ypoly(YP_Y))
    den = panel.one()
    for j in range(1, N):
        for a in range(1, sums[j - 1] + 1):
            for b in range(a + 1, sums[j - 1] + 1):
                den = den * (panel.one() - panel.ratio(panel.var(j, b), panel.var(j, a)))
    return RationalExpr(num, den)


def _weight_numerator(I: IndexTuple, panel: VariablePanel) -> LaurentPoly:
    """u_term times the symmetrizer denominator prod (alpha_a - alpha_b).

    Equals the psi products times the upper-triangular (1 + y*ratio)
    factors times the monomial prod alpha_a^(group size - a).
    """
    sums = I.mu.partial_sums
    N = I.mu.num_blocks
    vars = panel.vars
    out = panel.one()
    for j in range(1, N):
        size = sums[j - 1]
        for a in range(1, size + 1):
            for b in range(1, sums[j] + 1):
                xi = panel.ratio(panel.var(j, a), panel.var(j + 1, b))
                out = out * psi_factor(I, j, a, b)(xi)
        for a in range(1, size + 1):
            for b in range(a + 1, size + 1):
                out = out * (panel.one()
                             + panel.ratio(panel.var(j, b), panel.var(j, a)).scale_ypoly(YP_Y))
        mono = [0] * len(vars)
        for a in range(1, size + 1):
            mono[vars.index(panel.var(j, a))] = size - a
        out = out.shift(mono)
    return out


def _symmetrizer_group(mu: Composition):
    """Tuples (sigma_1, ..., sigma_{N-1}), each a permutation of a group."""
    sums = mu.partial_sums
    pools = [list(itertools.permutations(range(sums[j - 1])))
             for j in range(1, mu.num_blocks)]
    return itertools.product(*pools)


def _perm_sign(p: Sequence[int]) -> int:
    inv = 0
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                inv += 1
    return -1 if inv % 2 else 1


def _vandermonde(panel: VariablePanel) -> LaurentPoly:
    """prod over symmetrized groups of prod_{a<b} (alpha_a - alpha_b)."""
    out = panel.one()
    sums = panel.mu.partial_sums
    for j in range(1, panel.mu.num_blocks):
        for a in range(1, sums[j - 1] + 1):
            for b in range(a + 1, sums[j - 1] + 1):
                va = LaurentPoly.variable(panel.vars, panel.var(j, a))
                vb = LaurentPoly.variable(panel.vars, panel.var(j, b))
                out = out * (va - vb)
    return out


def weight_function(I: IndexTuple, panel: VariablePanel | None = None) -> LaurentPoly:
    """The symmetrized weight function W_I as a Laurent polynomial.

    All symmetrizer terms are placed over the common denominator
    prod (alpha_a - alpha_b); the summed numerator is then divided
    exactly.  A division failure is an implementation fault, never a
    valid outcome.
    """
    if panel is None:
        panel = VariablePanel(I.mu)
    base = _weight_numerator(I, panel)
    total = LaurentPoly.zero(panel.vars)
    sums = I.mu.partial_sums
    for sigma in _symmetrizer_group(I.mu):
        sign = 1
        mapping = {}
        for j, sj in enumerate(sigma, start=1):
            sign *= _perm_sign(sj)
            for a, target in enumerate(sj):
                mapping[panel.var(j, a + 1)] = panel.var(j, target + 1)
        term = base.rename_vars(mapping)
        total = total + (term if sign > 0 else -term)
    return exact_divide(total, _vandermonde(panel))


def chern_products(mu: Composition | Sequence[int],
                   panel: VariablePanel | None = None):
    """The two Chern-type products (c_mu, c'_mu) over the variable panel."""
    if not isinstance(mu, Composition):
        mu = Composition(mu)
    if panel is None:
        panel = VariablePanel(mu)
    sums = mu.partial_sums
    c = panel.one()
    cp = panel.one()
    for j in range(1, mu.num_blocks):
        for a in range(1, sums[j - 1] + 1):
            for b in range(1, sums[j - 1] + 1):
                c = c * (panel.one()
                         + panel.ratio(panel.var(j, b), panel.var(j, a)).scale_ypoly(YP_Y))
        for a in range(1, sums[j] + 1):
            for b in range(1, sums[j - 1] + 1):
                cp = cp * (panel.one()
                           + panel.ratio(panel.var(j, b), panel.var(j + 1, a)).scale_ypoly(YP_Y))
    return c, cp


# ---------------------------------------------------------------------------
# Fixed-point restriction
# ---------------------------------------------------------------------------


def _block_images(J: IndexTuple):
    """tau indices assigned to each group: sorted unions of J."""
    return [list(u) for u in J.unions]


def restrict_to_fixed_point(W: LaurentPoly, J: IndexTuple,
                            spec: TorusSpecialization | None = None,
                            panel: VariablePanel | None = None) -> LaurentPoly:
    """Substitute the Chern-root multisets by the tau values at J.

    W must be symmetric in each group for the multiset substitution to
    be well defined; the substitution assigns group j's variables the
    tau images of the sorted union I^{(j)}.
    """
    if panel is None:
        panel = VariablePanel(J.mu)
    if spec is None:
        spec = TorusSpecialization.standard(J.mu.n)
    images: dict = {}
    tJ = _block_images(J)
    for j in range(1, J.mu.num_blocks + 1):
        for a, tau_index in enumerate(tJ[j - 1], start=1):
            e = spec.tau_exp(tau_index)
            images[panel.var(j, a)] = (1, {v: k for v, k in zip(spec.vars, e) if k})
    from .ring import monomial_substitute
    return monomial_substitute(W, images, out_vars=spec.vars)


def c_mu_at(J: IndexTuple, spec: TorusSpecialization) -> LaurentPoly:
    """Restriction of c_mu at the fixed point J."""
    out = spec.one()
    tJ = _block_images(J)
    for j in range(J.mu.num_blocks - 1):
        idx = tJ[j]
        for a in idx:
            for b in idx:
                out = out * spec.one_plus_y_ratio(b, a)
    return out


def c_prime_mu_at(J: IndexTuple, spec: TorusSpecialization) -> LaurentPoly:
    """Restriction of c'_mu at the fixed point J."""
    out = spec.one()
    tJ = _block_images(J)
    for j in range(J.mu.num_blocks - 1):
        for a in tJ[j + 1]:
            for b in tJ[j]:
                out = out * spec.one_plus_y_ratio(b, a)
    return out


# ---------------------------------------------------------------------------
# Direct localization: evaluate the symmetrization at a fixed point
# ---------------------------------------------------------------------------

_K_LESS, _K_EQUAL, _K_GREATER = 0, 1, 2


def _psi_kinds(I: IndexTuple):
    """(j, a, b, kind) for every three-case factor of U_I (0-based j)."""
    sums = I.mu.partial_sums
    out = []
    for j in range(1, I.mu.num_blocks):
        for a in range(1, sums[j - 1] + 1):
            lower = I.unions[j - 1][a - 1]
            for b in range(1, sums[j] + 1):
                upper = I.unions[j][b - 1]
                kind = (_K_LESS if upper < lower
                        else _K_EQUAL if upper == lower else _K_GREATER)
                out.append((j - 1, a - 1, b - 1, kind))
    return out


def _dict_mul_binom(d: dict, exp: tuple, coeff: Ypoly) -> dict:
    """Multiply the working polynomial by (1 + coeff * x^exp)."""
    out = dict(d)
    for e, c in d.items():
        key = tuple(x + y for x, y in zip(e, exp))
        add = yp_mul(c, coeff)
        prev = out.get(key)
        if prev is None:
            out[key] = add
        else:
            s = yp_add(prev, add)
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def _dict_shift_scale(d: dict, exp: tuple, coeff: Ypoly) -> dict:
    """Multiply the working polynomial by coeff * x^exp."""
    return {tuple(x + y for x, y in zip(e, exp)): yp_mul(c, coeff)
            for e, c in d.items()}


_YP_MINUS_ONE: Ypoly = (-1,)


def restriction_direct(I: IndexTuple, J: IndexTuple,
                       spec: TorusSpecialization | None = None) -> LaurentPoly:
    """W_I restricted at the fixed point J, by direct symmetrization.

    Each symmetrizer term is evaluated after the tau substitution; the
    signed sum is divided exactly by the substituted Vandermonde
    product.  Terms with a vanishing 1 - xi factor are pruned early.
    """
    mu = I.mu
    if spec is None:
        spec = TorusSpecialization.standard(mu.n)
    psi = _psi_kinds(I)
    sums = mu.partial_sums
    N = mu.num_blocks
    tI_sizes = [sums[j] for j in range(N - 1)]
    tJ = _block_images(J)
    zero_exp = spec.zero_exp()

    total: dict = {}
    for sigma in _symmetrizer_group(mu):
        # tau index assigned to panel slot (j, a): groups j < N permuted.
        assign = [[tJ[j][sj[a]] for a in range(len(sj))] for j, sj in enumerate(sigma)]
        assign.append(tJ[N - 1])

        dead = False
        for (j, a, b, kind) in psi:
            if kind == _K_LESS and assign[j][a] == assign[j + 1][b]:
                dead = True
                break
        if dead:
            continue

        sign = 1
        for sj in sigma:
            sign *= _perm_sign(sj)

        d = {zero_exp: YP_ONE}
        extra_exp = [0] * len(spec.vars)
        for (j, a, b, kind) in psi:
            e = spec.ratio_exp(assign[j][a], assign[j + 1][b])
            if kind == _K_LESS:
                d = _dict_mul_binom(d, e, _YP_MINUS_ONE)
            elif kind == _K_GREATER:
                d = _dict_mul_binom(d, e, YP_Y)
            else:
                # (1+y) * xi: fold the monomial into a running shift.
                for i, x in enumerate(e):
                    extra_exp[i] += x
                d = {k: yp_add(c, (0,) + c) for k, c in d.items()}
        for j in range(N - 1):
            size = tI_sizes[j]
            for a in range(size):
                for b in range(a + 1, size):
                    e = spec.ratio_exp(assign[j][b], assign[j][a])
                    d = _dict_mul_binom(d, e, YP_Y)
            # the monomial prod alpha_a^{size - a} from the common denominator
            for a in range(size):
                img = spec.tau_exp(assign[j][a])
                power = size - (a + 1)
                if power:
                    for i, x in enumerate(img):
                        extra_exp[i] += x * power
        if any(extra_exp):
            d = _dict_shift_scale(d, tuple(extra_exp), YP_ONE)
        if sign < 0:
            d = {k: tuple(-v for v in c) for k, c in d.items()}
        for k, c in d.items():
            prev = total.get(k)
            if prev is None:
                total[k] = c
            else:
                s = yp_add(prev, c)
                if s:
                    total[k] = s
                else:
                    del total[k]

    numerator = LaurentPoly(spec.vars, total)
    den = spec.one()
    for j in range(N - 1):
        idx = tJ[j]
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                den = den * spec.tau_diff(idx[a], idx[b])
    return exact_divide(numerator, den)


def modified_restriction_direct(I: IndexTuple, J: IndexTuple,
                                spec: TorusSpecialization | None = None) -> LaurentPoly:
    """Restriction of the modified weight function: divide by c_mu at J."""
    if spec is None:
        spec = TorusSpecialization.standard(I.mu.n)
    plain = restriction_direct(I, J, spec)
    if plain.is_zero():
        return plain
    return exact_divide(plain, c_mu_at(J, spec))


def segre_restriction(I: IndexTuple, J: IndexTuple,
                      spec: TorusSpecialization | None = None) -> RationalExpr:
    """Restriction of W_I / c'_mu; in general a genuine ratio."""
    if spec is None:
        spec = TorusSpecialization.standard(I.mu.n)
    return RationalExpr(restriction_direct(I, J, spec), c_prime_mu_at(J, spec))


# ---------------------------------------------------------------------------
# Localization tables
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LocalizedClass:
    """Fixed-point restrictions of one class: a map point -> polynomial."""

    mu: Composition
    table: dict

    def __getitem__(self, J: IndexTuple) -> LaurentPoly:
        return self.table[J]

    def to_json(self) -> dict:
        from .ring import poly_to_json
        points = sorted(self.table, key=lambda J: J.blocks)
        return {"mu": list(self.mu.parts),
                "entries": [{"point": p.to_json(), "value": poly_to_json(self.table[p])}
                            for p in points]}


def _row_direct(I: IndexTuple, points, spec, modified: bool) -> LocalizedClass:
    cmus = {J: c_mu_at(J, spec) for J in points} if modified else None
    table = {}
    for J in points:
        val = restriction_direct(I, J, spec)
        if modified and not val.is_zero():
            val = exact_divide(val, cmus[J])
        table[J] = val
    return LocalizedClass(I.mu, table)


def _row_direct_job(args):
    I, points, spec, modified = args
    return _row_direct(I, points, spec, modified)


# The full-flag exchange operator acts on MODIFIED localization rows.
# For the modified row f of a cell w with a descent edge w -> w*s_i
# (codimension drops by one), the row of w*s_i is, writing
# A = tau_{v(i)}, B = tau_{v(i+1)}:
#     g(v) = A*((1 + y*A/B) * f(v*s_i) - (1 + y) * f(v)) / (A - B).
# The two-term shape and the coefficients are pinned by exact comparison
# with the direct symmetrization for n <= 4 in the test suite.  The
# operator does not commute with the pointwise c_mu multipliers, so it
# is wrong on plain rows; plain tables multiply c_mu back at the end.


def descent_step(row: Mapping[Permutation, LaurentPoly], i: int,
                 spec: TorusSpecialization) -> dict:
    out = {}
    for v, fv in row.items():
        vs = v.swap_positions(i)
        ai, bi = v(i), v(i + 1)
        fvs = row[vs]
        x = fvs * spec.one_plus_y_ratio(ai, bi) - fv.scale_ypoly(YP_ONE_PLUS_Y)
        if x.is_zero():
            out[v] = x
            continue
        x = x.shift(spec.tau_exp(ai))
        out[v] = exact_divide(x, spec.tau_diff(ai, bi))
    return out


def point_cell_row(n: int, spec: TorusSpecialization, modified: bool = True) -> dict:
    """Direct localization row of the longest (point) cell, keyed by w."""
    mu = Composition((1,) * n)
    w0 = Permutation.longest(n)
    I0 = w0.to_index_tuple()
    row = {}
    for J in enumerate_index_tuples(mu):
        val = restriction_direct(I0, J, spec)
        if modified and not val.is_zero():
            val = exact_divide(val, c_mu_at(J, spec))
        row[J.to_permutation()] = val
    return row


def full_flag_table_recursive(n: int, spec: TorusSpecialization | None = None,
                              modified: bool = True) -> dict:
    """All localization rows of Fl(n) cells via descent-edge recursion.

    Seeded with the directly computed modified row of the point cell;
    every other row is produced by one exchange step per descent edge,
    walking the weak order downward.  Rows are keyed by permutation.
    """
    if spec is None:
        spec = TorusSpecialization.standard(n)
    w0 = Permutation.longest(n)
    rows = {w0: point_cell_row(n, spec, modified=True)}
    order = sorted((Permutation(p) for p in itertools.permutations(range(1, n + 1))),
                   key=lambda w: (-w.length(), w.word))
    for w in order:
        if w == w0:
            continue
        # find a raising edge: some i with l(w*s_i) = l(w) + 1 already built
        done = False
        for i in range(1, n):
            ws = w.swap_positions(i)
            if ws.length() == w.length() + 1 and ws in rows:
                rows[w] = descent_step(rows[ws], i, spec)
                done = True
                break
        if not done:
            raise AssertionError(f"no processed raising edge for {w}")
    if not modified:
        points = [w.to_index_tuple() for w in rows[w0]]
        cmus = {J.to_permutation(): c_mu_at(J, spec) for J in points}
        for w, row in rows.items():
            rows[w] = {v: f * cmus[v] for v, f in row.items()}
    return rows


def localization_table(mu: Composition | Sequence[int], modified: bool = True,
                       spec: TorusSpecialization | None = None,
                       method: str = "auto", jobs: int = 1) -> dict:
    """Localization tables of every cell: {I: LocalizedClass}.

    method "direct" evaluates the symmetrization at every fixed point;
    "recursion" (full flag only) walks descent edges from the point
    cell.  "auto" keeps the direct route for small tables and switches
    to the recursion for full flags with n >= 5.
    """
    if not isinstance(mu, Composition):
        mu = Composition(mu)
    if spec is None:
        spec = TorusSpecialization.standard(mu.n)
    points = enumerate_index_tuples(mu)
    if method == "auto":
        method = ("recursion" if mu.is_full_flag() and mu.n >= 5 else "direct")
    if method == "recursion":
        if not mu.is_full_flag():
            raise ValueError("recursion method requires a full flag")
        rows = full_flag_table_recursive(mu.n, spec, modified)
        out = {}
        for J in points:
            w = J.to_permutation()
            table = {v.to_index_tuple(): poly for v, poly in rows[w].items()}
            out[J] = LocalizedClass(mu, table)
        return out
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    if jobs > 1:
        import multiprocessing as mp
        with mp.Pool(jobs) as pool:
            rows = pool.map(_row_direct_job,
                            [(I, points, spec, modified) for I in points])
        return dict(zip(points, rows))
    return {I: _row_direct(I, points, spec, modified) for I in points}

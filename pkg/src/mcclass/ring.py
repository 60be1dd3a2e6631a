"""Exact multivariate Laurent polynomial arithmetic over Z[y].

The coefficient domain is the univariate integer polynomial ring Z[y],
where y is a distinguished formal parameter (it is never a torus
variable).  A Laurent polynomial is stored as a map from integer
exponent vectors to nonzero y-coefficient tuples; this canonical form
makes equality testing exact and serialization reproducible.

All values are immutable after construction and all operations are
pure, so they are safe to evaluate in parallel across independent
inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

# ---------------------------------------------------------------------------
# Coefficients: univariate integer polynomials in y, as tuples (c0, c1, ...)
# with no trailing zeros.  The empty tuple is zero.
# ---------------------------------------------------------------------------

Ypoly = tuple

YP_ZERO: Ypoly = ()
YP_ONE: Ypoly = (1,)
YP_Y: Ypoly = (0, 1)
YP_ONE_PLUS_Y: Ypoly = (1, 1)


class RingError(Exception):
    """Base class for arithmetic failures in this module."""


class NonDivisibleError(RingError):
    """Exact division failed; carries the offending remainder."""

    def __init__(self, message: str, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class InfiniteLimitError(RingError):
    """A one-parameter limit does not exist as a finite class."""


class ZeroDenominatorError(RingError):
    """A denominator vanished where a nonzero one is required."""


def yp(*coeffs: int) -> Ypoly:
    """Build a y-polynomial from coefficients of 1, y, y^2, ..."""
    return yp_trim(tuple(coeffs))


def yp_trim(c: Sequence) -> Ypoly:
    n = len(c)
    while n > 0 and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def yp_add(a: Ypoly, b: Ypoly) -> Ypoly:
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return yp_trim(out)


def yp_neg(a: Ypoly) -> Ypoly:
    return tuple(-v for v in a)


def yp_sub(a: Ypoly, b: Ypoly) -> Ypoly:
    return yp_add(a, yp_neg(b))


def yp_mul(a: Ypoly, b: Ypoly) -> Ypoly:
    if not a or not b:
        return YP_ZERO
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return yp_trim(out)


def yp_scale(a: Ypoly, c: int) -> Ypoly:
    if c == 0:
        return YP_ZERO
    return tuple(v * c for v in a)


def yp_pow(a: Ypoly, k: int) -> Ypoly:
    out = YP_ONE
    for _ in range(k):
        out = yp_mul(out, a)
    return out


def yp_exact_div(a: Ypoly, b: Ypoly) -> Ypoly:
    """Divide a by b in Z[y], raising NonDivisibleError unless exact."""
    if not b:
        raise ZeroDenominatorError("division of y-polynomials by zero")
    if not a:
        return YP_ZERO
    if len(a) < len(b):
        raise NonDivisibleError("y-degree too small", remainder=a)
    rem = list(a)
    lead = b[-1]
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(q) - 1, -1, -1):
        c = rem[k + len(b) - 1]
        if c % lead != 0:
            raise NonDivisibleError("leading y-coefficient not divisible",
                                    remainder=yp_trim(rem))
        t = c // lead
        q[k] = t
        if t:
            for j, bj in enumerate(b):
                rem[k + j] -= t * bj
    if any(rem):
        raise NonDivisibleError("nonzero y-remainder", remainder=yp_trim(rem))
    return yp_trim(q)


def yp_subst(a: Ypoly, value: Ypoly) -> Ypoly:
    """Evaluate a at y = value (value itself a y-polynomial)."""
    out = YP_ZERO
    for c in reversed(a):
        out = yp_add(yp_mul(out, value), (c,) if c else YP_ZERO)
    return out


def format_ypoly(a: Ypoly, param: str = "y") -> str:
    if not a:
        return "0"
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            ystr = param if k == 1 else f"{param}^{k}"
            body = ystr if abs(c) == 1 else f"{abs(c)}*{ystr}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------


class LaurentPoly:
    """A Laurent polynomial in named torus variables over Z[y].

    terms maps exponent vectors (tuples of ints, one slot per variable)
    to nonzero y-coefficient tuples.  The zero polynomial has an empty
    term map; an empty variable list is allowed and holds constants.
    """

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[tuple, Ypoly]):
        vars = tuple(vars)
        nv = len(vars)
        clean = {}
        for e, c in terms.items():
            c = yp_trim(tuple(c))
            if not c:
                continue
            e = tuple(e)
            if len(e) != nv:
                raise ValueError(f"exponent vector {e} does not match variables {vars}")
            clean[e] = c
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "LaurentPoly":
        return cls(vars, {})

    @classmethod
    def constant(cls, vars: Sequence[str], c: Ypoly | int) -> "LaurentPoly":
        if isinstance(c, int):
            c = (c,) if c else YP_ZERO
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def one(cls, vars: Sequence[str]) -> "LaurentPoly":
        return cls.constant(vars, 1)

    @classmethod
    def y(cls, vars: Sequence[str]) -> "LaurentPoly":
        return cls.constant(vars, YP_Y)

    @classmethod
    def monomial(cls, vars: Sequence[str], exp: Sequence[int],
                 c: Ypoly | int = 1) -> "LaurentPoly":
        if isinstance(c, int):
            c = (c,) if c else YP_ZERO
        return cls(vars, {tuple(exp): c})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str, power: int = 1) -> "LaurentPoly":
        i = tuple(vars).index(name)
        e = [0] * len(vars)
        e[i] = power
        return cls.monomial(vars, e)

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0,) * len(self.vars): YP_ONE}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support(self) -> set:
        """Exponent vectors carrying a nonzero y-coefficient."""
        return set(self.terms)

    def sorted_terms(self):
        """Terms in canonical order: lexicographic on exponent vectors."""
        return sorted(self.terms.items())

    def y_degree(self) -> int:
        return max((len(c) - 1 for c in self.terms.values()), default=-1)

    def constant_ypoly(self) -> Ypoly:
        """Coefficient of the exponent-zero monomial."""
        return self.terms.get((0,) * len(self.vars), YP_ZERO)

    def as_ypoly(self) -> Ypoly:
        """Interpret a torus-free polynomial as an element of Z[y]."""
        z = (0,) * len(self.vars)
        for e in self.terms:
            if e != z:
                raise ValueError("polynomial still involves torus variables")
        return self.terms.get(z, YP_ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __reduce__(self):
        return (LaurentPoly, (self.vars, self.terms))

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.vars, other)
        if isinstance(other, tuple):
            return LaurentPoly.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for e, c in other.terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = yp_add(prev, c)
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.vars, {e: yp_neg(c) for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return LaurentPoly.zero(self.vars)
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                c = yp_mul(ca, cb)
                prev = out.get(e)
                if prev is None:
                    out[e] = c
                else:
                    s = yp_add(prev, c)
                    if s:
                        out[e] = s
                    else:
                        del out[e]
        return LaurentPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            ((e, c),) = self.terms.items()
            if c not in (YP_ONE, (-1,)):
                raise ValueError("negative powers only for unit monomials")
            sign = 1 if c == YP_ONE else (-1) ** (k % 2)
            return LaurentPoly.monomial(self.vars, tuple(x * k for x in e), sign)
        out = LaurentPoly.one(self.vars)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def scale_ypoly(self, c: Ypoly) -> "LaurentPoly":
        if not c:
            return LaurentPoly.zero(self.vars)
        return LaurentPoly(self.vars, {e: yp_mul(v, c) for e, v in self.terms.items()})

    def shift(self, exp: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        exp = tuple(exp)
        return LaurentPoly(self.vars,
                           {tuple(a + b for a, b in zip(e, exp)): c
                            for e, c in self.terms.items()})

    # -- variable plumbing --------------------------------------------------

    def rename_vars(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        """Permute or rename variables (a bijection onto the same set)."""
        new = tuple(mapping.get(v, v) for v in self.vars)
        if sorted(new) != sorted(self.vars):
            raise ValueError("rename must permute the variable list")
        perm = [new.index(v) for v in self.vars]
        return LaurentPoly(self.vars,
                           {tuple(e[perm[i]] for i in range(len(e))): c
                            for e, c in self.terms.items()})

    def extend_vars(self, vars: Sequence[str]) -> "LaurentPoly":
        """Re-express over a larger variable list containing self.vars."""
        vars = tuple(vars)
        idx = [vars.index(v) for v in self.vars]
        nv = len(vars)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * nv
            for i, x in zip(idx, e):
                ne[i] = x
            out[tuple(ne)] = c
        return LaurentPoly(vars, out)

    def subst_y(self, value: Ypoly) -> "LaurentPoly":
        """Substitute a y-polynomial for the parameter y."""
        out = LaurentPoly.zero(self.vars)
        for e, c in self.terms.items():
            nc = yp_subst(c, value)
            if nc:
                out = out + LaurentPoly.monomial(self.vars, e, nc)
        return out

    def min_exponents(self):
        """Per-variable minimum exponent over the support (zero poly: zeros)."""
        if not self.terms:
            return (0,) * len(self.vars)
        cols = zip(*self.terms)
        return tuple(min(col) for col in cols)


# ---------------------------------------------------------------------------
# Substitution
# ---------------------------------------------------------------------------

MonomialImage = tuple  # (scalar, {var: exponent})


def monomial_substitute(p: LaurentPoly,
                        images: Mapping[str, MonomialImage],
                        out_vars: Sequence[str] | None = None) -> LaurentPoly:
    """Apply a ring homomorphism sending each variable to a scalar monomial.

    images maps a variable name to (scalar, exponent map); variables not
    mentioned are sent to themselves.  The parameter y is untouched.
    Raises ValueError if a negative power of a non-unit scalar would be
    required (a division inside Z), or on a zero scalar.
    """
    if out_vars is None:
        out_vars = p.vars
    out_vars = tuple(out_vars)
    index = {v: i for i, v in enumerate(out_vars)}
    nv = len(out_vars)

    scalars = []
    vectors = []
    for v in p.vars:
        if v in images:
            scalar, exps = images[v]
            if scalar == 0:
                raise ValueError(f"variable {v} mapped to zero scalar")
            vec = [0] * nv
            for name, e in exps.items():
                if name not in index:
                    raise ValueError(f"image variable {name} not in output variables")
                vec[index[name]] += e
        else:
            if v not in index:
                raise ValueError(f"unmapped variable {v} not in output variables")
            scalar = 1
            vec = [0] * nv
            vec[index[v]] = 1
        scalars.append(scalar)
        vectors.append(tuple(vec))

    out: dict = {}
    for e, c in p.terms.items():
        ne = [0] * nv
        num = 1
        for k, ek in enumerate(e):
            if ek == 0:
                continue
            vec = vectors[k]
            for i in range(nv):
                ne[i] += vec[i] * ek
            s = scalars[k]
            if s != 1:
                if ek > 0:
                    num *= s ** ek
                elif s == -1:
                    num *= (-1) ** (-ek)
                else:
                    raise ValueError(
                        f"negative power of scalar {s} is not an integer")
        key = tuple(ne)
        cc = yp_scale(c, num)
        prev = out.get(key)
        if prev is None:
            out[key] = cc
        else:
            s2 = yp_add(prev, cc)
            if s2:
                out[key] = s2
            else:
                del out[key]
    return LaurentPoly(out_vars, out)


def substitute_ones(p: LaurentPoly) -> Ypoly:
    """Send every torus variable to 1, leaving a y-polynomial."""
    out = YP_ZERO
    for c in p.terms.values():
        out = yp_add(out, c)
    return out


# ---------------------------------------------------------------------------
# Exact division
# ---------------------------------------------------------------------------


def _split_by_var(p: LaurentPoly, k: int) -> dict:
    """Group terms by the exponent of variable k; values zero that slot."""
    out: dict = {}
    for e, c in p.terms.items():
        d = e[k]
        key = e[:k] + (0,) + e[k + 1:]
        slot = out.setdefault(d, {})
        slot[key] = c
    return out


def exact_divide(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Return r with r*q == p, or raise NonDivisibleError.

    Implemented by iterated univariate division: pick a variable with
    exponent spread in q, view both sides as univariate with Laurent
    coefficients, and require a zero remainder at every level.
    """
    if q.vars != p.vars:
        raise ValueError("variable mismatch in exact_divide")
    if q.is_zero():
        raise ZeroDenominatorError("division by the zero polynomial")
    if p.is_zero():
        return p

    # Monomial divisor: divide term by term.
    if q.is_monomial():
        ((eq, cq),) = q.terms.items()
        out = {}
        for e, c in p.terms.items():
            out[tuple(a - b for a, b in zip(e, eq))] = yp_exact_div(c, cq)
        return LaurentPoly(p.vars, out)

    # Pick the pivot variable with the smallest exponent spread in q.
    spreads = []
    for k in range(len(q.vars)):
        col = [e[k] for e in q.terms]
        spread = max(col) - min(col)
        if spread > 0:
            spreads.append((spread, k))
    if not spreads:
        # q has a single exponent vector but several y-terms: monomial case
        # already handled, so this cannot happen.
        raise AssertionError("non-monomial divisor without exponent spread")
    _, k = min(spreads)

    qs = _split_by_var(q, k)
    ps = _split_by_var(p, k)
    dq = max(qs)
    q_lead = LaurentPoly(p.vars, qs[dq])

    quot: dict = {}
    vars = p.vars
    while ps:
        dp = max(ps)
        if all(not slot for slot in ps.values()):
            break
        lead = LaurentPoly(vars, ps[dp])
        try:
            t = exact_divide(lead, q_lead)
        except NonDivisibleError as err:
            rem = LaurentPoly(vars, {e[:k] + (d,) + e[k + 1:]: c
                                     for d, slot in ps.items()
                                     for e, c in slot.items()})
            raise NonDivisibleError("leading coefficient not divisible",
                                    remainder=rem) from err
        shift = dp - dq
        for e, c in t.terms.items():
            quot[e[:k] + (e[k] + shift,) + e[k + 1:]] = c
        # ps -= t * q  (with the var-k shift applied)
        for dq2, slot in qs.items():
            prod = LaurentPoly(vars, slot) * t
            if prod.is_zero():
                continue
            d = dq2 + shift
            cur = ps.get(d, {})
            for e, c in prod.terms.items():
                key = e[:k] + (0,) + e[k + 1:]
                prev = cur.get(key)
                s = yp_sub(prev, c) if prev is not None else yp_neg(c)
                if s:
                    cur[key] = s
                elif prev is not None:
                    del cur[key]
            if cur:
                ps[d] = cur
            elif d in ps:
                del ps[d]
        if dp in ps and not ps[dp]:
            del ps[dp]
        if ps and max(ps) >= dp:
            raise AssertionError("division failed to reduce degree")
    if ps:
        rem = LaurentPoly(vars, {e[:k] + (d,) + e[k + 1:]: c
                                 for d, slot in ps.items()
                                 for e, c in slot.items()})
        raise NonDivisibleError("nonzero remainder", remainder=rem)
    return LaurentPoly(vars, quot)


def divides(q: LaurentPoly, p: LaurentPoly) -> bool:
    try:
        exact_divide(p, q)
        return True
    except NonDivisibleError:
        return False


# ---------------------------------------------------------------------------
# Rational expressions and one-parameter limits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cocharacter:
    """Exponents d_i of the substitution tau_i -> xi^{d_i}."""

    weights: tuple

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))


class RationalExpr:
    """A quotient num/den of Laurent polynomials in canonical form.

    Monomial content of the denominator is folded into the numerator,
    so den has per-variable minimum exponent 0 and is not divisible by
    any variable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one(num.vars)
        if den.vars != num.vars:
            raise ValueError("variable mismatch in RationalExpr")
        if den.is_zero():
            raise ZeroDenominatorError("rational expression with zero denominator")
        m = den.min_exponents()
        if any(m):
            neg = tuple(-x for x in m)
            den = den.shift(neg)
            num = num.shift(neg)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalExpr is immutable")

    def __reduce__(self):
        return (RationalExpr, (self.num, self.den))

    @property
    def vars(self):
        return self.num.vars

    def __eq__(self, other):
        if not isinstance(other, RationalExpr):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __mul__(self, other):
        if isinstance(other, RationalExpr):
            return RationalExpr(self.num * other.num, self.den * other.den)
        return RationalExpr(self.num * other, self.den)

    def __repr__(self):
        return f"RationalExpr(({format_poly(self.num)}) / ({format_poly(self.den)}))"

    def to_poly(self) -> LaurentPoly:
        """Carry out the division, which must be exact."""
        return exact_divide(self.num, self.den)


def _collapse(p: LaurentPoly, d: Cocharacter) -> dict:
    """Substitute tau_i -> xi^{d_i}; returns {xi-degree: Ypoly}."""
    if len(d.weights) != len(p.vars):
        raise ValueError("cocharacter length does not match variable list")
    out: dict = {}
    for e, c in p.terms.items():
        k = sum(a * b for a, b in zip(e, d.weights))
        s = yp_add(out.get(k, YP_ZERO), c)
        if s:
            out[k] = s
        elif k in out:
            del out[k]
    return out


def limit_at_infinity(f: RationalExpr, d: Cocharacter) -> Ypoly:
    """Limit of f as xi -> infinity along tau_i = xi^{d_i}.

    Zero when the numerator degree is smaller, the exact ratio of
    leading coefficients when the degrees agree, and InfiniteLimitError
    when the numerator degree is larger.
    """
    num = _collapse(f.num, d)
    den = _collapse(f.den, d)
    if not den:
        raise ZeroDenominatorError("denominator vanishes under the cocharacter")
    if not num:
        return YP_ZERO
    dn, dd = max(num), max(den)
    if dn < dd:
        return YP_ZERO
    if dn > dd:
        raise InfiniteLimitError(f"numerator degree {dn} exceeds denominator degree {dd}")
    return yp_exact_div(num[dn], den[dd])


# ---------------------------------------------------------------------------
# Serialization and formatting
# ---------------------------------------------------------------------------


def poly_to_json(p: LaurentPoly) -> dict:
    return {"vars": list(p.vars),
            "terms": [{"exp": list(e), "y": list(c)} for e, c in p.sorted_terms()]}


def poly_from_json(obj: Mapping) -> LaurentPoly:
    vars = tuple(obj["vars"])
    terms = {}
    for t in obj["terms"]:
        terms[tuple(int(x) for x in t["exp"])] = tuple(int(c) for c in t["y"])
    return LaurentPoly(vars, terms)


def rational_to_json(f: RationalExpr) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def rational_from_json(obj: Mapping) -> RationalExpr:
    return RationalExpr(poly_from_json(obj["num"]), poly_from_json(obj["den"]))


def dumps_canonical(obj) -> str:
    """Deterministic JSON encoding used by every emitter."""
    return json.dumps(obj, separators=(", ", ": "), sort_keys=False)


def _monomial_str(vars, e) -> str:
    num = []
    den = []
    for v, k in zip(vars, e):
        if k == 0:
            continue
        body = v if abs(k) == 1 else f"{v}^{abs(k)}"
        (num if k > 0 else den).append(body)
    ns = "*".join(num)
    if not den:
        return ns or "1"
    ds = "*".join(den)
    if len(den) > 1:
        ds = f"({ds})"
    return f"{ns or '1'}/{ds}"


def format_poly(p: LaurentPoly, param: str = "y") -> str:
    """Canonical flat rendering: terms in exponent order, y ascending."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.sorted_terms():
        mono = _monomial_str(p.vars, e)
        for k, ck in enumerate(c):
            if ck == 0:
                continue
            factors = []
            if abs(ck) != 1 or (mono == "1" and k == 0):
                factors.append(str(abs(ck)))
            if mono != "1":
                factors.append(mono)
            if k == 1:
                factors.append(param)
            elif k > 1:
                factors.append(f"{param}^{k}")
            body = "*".join(factors) if factors else "1"
            if not parts:
                parts.append(body if ck > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if ck > 0 else f"- {body}")
    return " ".join(parts)


def format_poly_ygrouped(p: LaurentPoly, param: str = "y") -> str:
    """Display form grouped by descending powers of the parameter."""
    if p.is_zero():
        return "0"
    by_deg: dict = {}
    for e, c in p.sorted_terms():
        for k, ck in enumerate(c):
            if ck:
                by_deg.setdefault(k, []).append((e, ck))
    parts = []
    for k in sorted(by_deg, reverse=True):
        monos = by_deg[k]
        body_parts = []
        for e, ck in monos:
            mono = _monomial_str(p.vars, e)
            if mono == "1":
                body = str(abs(ck))
            elif abs(ck) == 1:
                body = mono
            else:
                body = f"{abs(ck)}*{mono}"
            if not body_parts:
                body_parts.append(body if ck > 0 else f"-{body}")
            else:
                body_parts.append(f"+ {body}" if ck > 0 else f"- {body}")
        body = " ".join(body_parts)
        if k == 0:
            piece = body
            plain = len(monos) == 1
        else:
            ystr = param if k == 1 else f"{param}^{k}"
            if len(monos) == 1 and monos[0][1] in (1, -1) and not body.startswith("-"):
                piece = f"{body}*{ystr}" if body != "1" else ystr
                plain = True
            else:
                piece = f"({body})*{ystr}"
                plain = True
        if not parts:
            parts.append(piece)
        else:
            if piece.startswith("-") and plain:
                parts.append(f"- {piece[1:]}")
            else:
                parts.append(f"+ {piece}")
    return " ".join(parts)

#!/usr/bin/env python3
"""Search for a GKM-local two-term operator that simultaneously
(a) maps each modified localization row to the row one descent edge
down, and (b) acts on the structure-sheaf basis with support only on
{[w], [w s_i]}.

Unknowns are the per-point coefficients A_v, B_v of
    (T f)(v) = A_v f(v) + B_v f(v s_i);
both families of conditions are linear over the rational function
field, so sympy's linear solver settles existence.

Outcome on three letters: ZERO solution branches for both operator
indices, i.e. no operator of this shape can do both jobs at once.
This is why expansions go through the triangular solve while the
exchange operator is used only for localization rows.  Needs sympy
(a development-time dependency only).
"""

import itertools
import sys

import sympy as sp

sys.path.insert(0, "src")

from mcclass.combi import Permutation
from mcclass.expand import Expander, expand_by_solve
from mcclass.ring import LaurentPoly
from mcclass.weightfn import TorusSpecialization


def to_sympy(p: LaurentPoly, syms, y):
    out = 0
    for e, c in p.terms.items():
        mono = 1
        for s, k in zip(syms, e):
            mono *= s ** k
        out += mono * sum(ck * y ** j for j, ck in enumerate(c))
    return sp.together(out)


def main(n=3):
    ex = Expander(n)
    spec = ex.spec
    syms = sp.symbols(" ".join(spec.vars), positive=True)
    if n == 1:
        syms = (syms,)
    y = sp.Symbol("y")
    perms = sorted(ex.expansions, key=lambda w: (w.length(), w.word))

    wrows = {w: {v: to_sympy(val, syms, y) for v, val in row.items()}
             for w, row in ex.wtilde_rows.items()}
    brows = {w: {v: to_sympy(val, syms, y) for v, val in row.items()}
             for w, row in ex.basis.rows.items()}

    for i in range(1, n):
        A = {v: sp.Symbol(f"A_{''.join(map(str, v.word))}") for v in perms}
        B = {v: sp.Symbol(f"B_{''.join(map(str, v.word))}") for v in perms}
        eqs = []
        # (a) weight-row transport along every descent edge
        for w in perms:
            ws = w.swap_positions(i)
            if ws.length() != w.length() - 1:
                continue
            for v in perms:
                vs = v.swap_positions(i)
                eqs.append(sp.Eq(A[v] * wrows[w][v] + B[v] * wrows[w][vs],
                                 wrows[ws][v]))
        # (b) sparse basis action: expand T[w] and kill foreign coordinates.
        # Solve the triangular system symbolically: coefficients of T[w]
        # on basis element u, processed in increasing length order.
        order = perms
        for w in perms:
            ws = w.swap_positions(i)
            img = {v: A[v] * brows[w][v] + B[v] * brows[w][v.swap_positions(i)]
                   for v in perms}
            coeffs = {}
            for v in order:
                rem = img[v]
                for u, cu in coeffs.items():
                    rem -= cu * brows[u][v]
                rem = sp.simplify(rem)
                if rem == 0:
                    continue
                coeffs[v] = sp.simplify(rem / brows[v][v])
            for u, cu in coeffs.items():
                if u not in (w, ws):
                    eqs.append(sp.Eq(cu, 0))
        unknowns = [A[v] for v in perms] + [B[v] for v in perms]
        sol = sp.solve(eqs, unknowns, dict=True)
        print(f"== operator index i = {i}: {len(sol)} solution branch(es)")
        for branch in sol:
            for v in perms:
                a = sp.simplify(branch.get(A[v], A[v]))
                b = sp.simplify(branch.get(B[v], B[v]))
                ta, tb = syms[v(i) - 1], syms[v(i + 1) - 1]
                print(f"  v={v}: A = {sp.factor(a)}   B = {sp.factor(b)}"
                      f"   [tau_v(i)={ta}, tau_v(i+1)={tb}]")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)

"""Command-line front end.

Subcommands: weight, axioms, expand, conjectures, limit, interpolate,
newton.  All output is deterministic for fixed inputs and flags,
including parallel runs (ordered reduction); exit code 0 means
success/pass, 1 means a report contains violations, 2 means a
computation fault or bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .combi import Composition, IndexTuple, Permutation, enumerate_index_tuples
from .report import Report
from .ring import (Cocharacter, InfiniteLimitError, LaurentPoly, RingError,
                   ZeroDenominatorError, dumps_canonical, format_poly,
                   format_poly_ygrouped, format_ypoly, limit_at_infinity,
                   poly_from_json, poly_to_json, rational_from_json,
                   rational_to_json)
from .weightfn import (LocalizedClass, TorusSpecialization, VariablePanel,
                       c_mu_at, c_prime_mu_at, chern_products, localization_table,
                       modified_restriction_direct, restriction_direct,
                       segre_restriction, weight_function)

DEFAULT_MAX_N = 6


class CliError(Exception):
    pass


def _max_n() -> int:
    raw = os.environ.get("MCCLASS_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"MCCLASS_MAX_N must be an integer, got {raw!r}")


def _guard_n(n: int) -> None:
    if n < 1:
        raise CliError("n must be positive")
    limit = _max_n()
    if n > limit:
        raise CliError(f"n={n} exceeds the configured maximum {limit} "
                       "(set MCCLASS_MAX_N to override)")


def _parse_mu(text: str) -> Composition:
    try:
        return Composition(tuple(int(x) for x in text.split(",")))
    except ValueError as err:
        raise CliError(f"bad composition {text!r}: {err}")


def _parse_blocks(text: str, mu: Composition) -> IndexTuple:
    body = text.strip()
    if not body.startswith("{") or not body.endswith("}"):
        raise CliError(f"bad index tuple {text!r}; expected like " + '"{1},{2}"')
    parts = body[1:-1].split("},{")
    try:
        blocks = tuple(tuple(int(x) for x in p.split(",")) for p in parts)
        return IndexTuple(mu, blocks)
    except ValueError as err:
        raise CliError(f"bad index tuple {text!r}: {err}")


def _parse_perm(text: str, n: int | None = None) -> Permutation:
    try:
        w = Permutation(tuple(int(x) for x in text.split(",")))
    except ValueError as err:
        raise CliError(f"bad permutation {text!r}: {err}")
    if n is not None and w.n != n:
        raise CliError(f"permutation {text!r} is not on {n} letters")
    return w


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _report_exit(report: Report) -> int:
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# weight
# ---------------------------------------------------------------------------


def cmd_weight(args) -> int:
    mu = _parse_mu(args.mu)
    _guard_n(mu.n)
    points = enumerate_index_tuples(mu)
    if args.all:
        targets = points
    elif args.I:
        targets = [_parse_blocks(args.I, mu)]
    else:
        raise CliError("weight needs --I or --all")
    spec = TorusSpecialization.standard(mu.n)

    if args.restrict:
        jobs = args.jobs or 1
        if args.kind == "segre":
            payload = []
            for I in targets:
                entries = [{"point": J.to_json(),
                            "value": rational_to_json(segre_restriction(I, J, spec))}
                           for J in points]
                payload.append({"I": I.to_json(), "entries": entries})
            body = {"mu": list(mu.parts), "kind": args.kind, "classes": payload}
            _emit(dumps_canonical(body) if args.format == "json"
                  else _render_segre_tables(payload), args.output)
            return 0
        table = localization_table(mu, modified=(args.kind == "modified"),
                                   spec=spec, method="direct", jobs=jobs)
        payload = [{"I": I.to_json(), **table[I].to_json()} for I in targets]
        if args.format == "json":
            _emit(dumps_canonical({"mu": list(mu.parts), "kind": args.kind,
                                   "classes": payload}), args.output)
        else:
            lines = []
            for I in targets:
                lines.append(f"class of cell {I} ({args.kind}):")
                for J in points:
                    lines.append(f"  at {J}: {format_poly(table[I][J])}")
            _emit("\n".join(lines), args.output)
        return 0

    panel = VariablePanel(mu)
    out = []
    for I in targets:
        W = weight_function(I, panel)
        if args.kind == "plain":
            value = poly_to_json(W)
            text = format_poly(W)
        else:
            c, cp = chern_products(mu, panel)
            den = c if args.kind == "modified" else cp
            from .ring import RationalExpr
            ratio = RationalExpr(W, den)
            value = rational_to_json(ratio)
            text = f"({format_poly(ratio.num)}) / ({format_poly(ratio.den)})"
        out.append((I, value, text))
    if args.format == "json":
        body = {"mu": list(mu.parts), "kind": args.kind,
                "weights": [{"I": I.to_json(), "value": v} for I, v, _ in out]}
        _emit(dumps_canonical(body), args.output)
    else:
        _emit("\n".join(f"W[{I}] ({args.kind}) = {t}" for I, _, t in out), args.output)
    return 0


def _render_segre_tables(payload) -> str:
    lines = []
    for cls in payload:
        lines.append(f"segre class of cell {cls['I']['blocks']}:")
        for e in cls["entries"]:
            num = poly_from_json(e["value"]["num"])
            den = poly_from_json(e["value"]["den"])
            lines.append(f"  at {e['point']['blocks']}: "
                         f"({format_poly(num)}) / ({format_poly(den)})")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------


def cmd_axioms(args) -> int:
    from .axioms import run_axiom_suite
    _guard_n(args.n)
    report = run_axiom_suite(args.n, jobs=args.jobs or 1)
    if args.format == "json":
        _emit(dumps_canonical(report.entries_json()), args.output)
    else:
        by_check: dict = {}
        for e in report.entries:
            by_check.setdefault(e.check, []).append(e)
        lines = [f"axiom suite for full flags on {args.n} letters:"]
        for check, entries in by_check.items():
            bad = [e for e in entries if not e.ok]
            status = "pass" if not bad else "FAIL"
            lines.append(f"  {check}: {len(entries)} checks, {len(bad)} violations [{status}]")
            for e in bad:
                lines.append(f"    violation at {e.pair}: {e.witness}")
        _emit("\n".join(lines), args.output)
    return _report_exit(report)


# ---------------------------------------------------------------------------
# expand
# ---------------------------------------------------------------------------


def cmd_expand(args) -> int:
    from .expand import Expander, format_expansion, specialize_nonequivariant
    _guard_n(args.n)
    n = args.n
    if args.all:
        targets = None
    elif args.p:
        targets = [_parse_perm(args.p, n)]
    else:
        raise CliError("expand needs --p or --all")

    spec = (TorusSpecialization.one_parameter(n) if args.nonequivariant and n >= 5
            else TorusSpecialization.standard(n))
    ex = Expander(n, spec, jobs=args.jobs or 1)
    if targets is None:
        expansions = [ex.expansions[p] for p in sorted(
            ex.expansions, key=lambda w: (w.length(), w.word))]
    else:
        expansions = [ex.expand(p) for p in targets]

    if args.format == "json":
        if args.nonequivariant:
            body = [{"p": list(e.p.word),
                     "coeffs": [{"w": list(w.word), "y": list(c)}
                                for w, c in sorted(specialize_nonequivariant(e).items(),
                                                   key=lambda kv: (kv[0].length(), kv[0].word))]}
                    for e in expansions]
        else:
            body = [e.to_json() for e in expansions]
        _emit(dumps_canonical(body), args.output)
    else:
        lines = [format_expansion(e, nonequivariant=args.nonequivariant)
                 for e in expansions]
        _emit("\n\n".join(lines), args.output)
    return 0


# ---------------------------------------------------------------------------
# conjectures
# ---------------------------------------------------------------------------


def cmd_conjectures(args) -> int:
    from .expand import (Expander, check_log_concavity, check_s_delta_signs,
                         check_sign_conjecture)
    _guard_n(args.n)
    checks = args.checks.split(",") if args.checks else ["sign", "log", "sdelta"]
    combined = Report("conjectures")
    expander = None
    if "sign" in checks or "sdelta" in checks:
        expander = Expander(args.n, jobs=args.jobs or 1)
    if "sign" in checks:
        combined.extend(check_sign_conjecture(args.n, expander))
    if "log" in checks:
        combined.extend(check_log_concavity(args.n, jobs=args.jobs or 1))
    if "sdelta" in checks:
        combined.extend(check_s_delta_signs(args.n, expander))
    if args.format == "json":
        _emit(dumps_canonical(combined.to_json()), args.output)
    else:
        by_check: dict = {}
        for e in combined.entries:
            by_check.setdefault(e.check, []).append(e)
        lines = [f"conjecture checks on {args.n} letters:"]
        for check, entries in by_check.items():
            bad = [e for e in entries if not e.ok]
            status = "pass" if not bad else "FAIL"
            lines.append(f"  {check}: {len(entries)} checks, {len(bad)} violations [{status}]")
            for e in bad:
                lines.append(f"    violation at {e.pair}: {e.witness}")
        _emit("\n".join(lines), args.output)
    return _report_exit(combined)


# ---------------------------------------------------------------------------
# limit
# ---------------------------------------------------------------------------


def cmd_limit(args) -> int:
    from .axioms import quadratic_cone_ratio
    if args.klass:
        with open(args.klass, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
        if "den" in obj:
            ratio = rational_from_json(obj)
        else:
            from .ring import RationalExpr
            ratio = RationalExpr(poly_from_json(obj))
    else:
        ratio = quadratic_cone_ratio()
    results = []
    for text in args.cocharacter:
        try:
            d = Cocharacter(tuple(int(x) for x in text.split(",")))
        except ValueError as err:
            raise CliError(f"bad cocharacter {text!r}: {err}")
        try:
            value = limit_at_infinity(ratio, d)
            results.append({"cocharacter": list(d.weights),
                            "limit": list(value), "finite": True})
        except InfiniteLimitError:
            results.append({"cocharacter": list(d.weights),
                            "limit": None, "finite": False})
    if args.format == "json":
        _emit(dumps_canonical({"results": results}), args.output)
    else:
        lines = []
        for r in results:
            val = format_ypoly(tuple(r["limit"])) if r["finite"] else "infinite"
            lines.append(f"limit at {tuple(r['cocharacter'])}: {val}")
        _emit("\n".join(lines), args.output)
    return 0


# ---------------------------------------------------------------------------
# interpolate
# ---------------------------------------------------------------------------


def cmd_interpolate(args) -> int:
    from .interp import OrbitProblem, solve_csm, solve_fundamental
    if args.data:
        problem = OrbitProblem.load(args.data)
    else:
        from importlib.resources import files
        data = files("mcclass.data").joinpath("a2quiver.json").read_text(encoding="utf-8")
        problem = OrbitProblem.from_json(json.loads(data))
    if args.mode == "fundamental":
        sol = solve_fundamental(problem, args.target)
        if args.format == "json":
            _emit(dumps_canonical({"target": args.target, "mode": "fundamental",
                                   **sol.to_json()}), args.output)
        else:
            _emit(f"fundamental class of {args.target}: {sol}", args.output)
        return 0
    sol = solve_csm(problem, args.target)
    if args.format == "json":
        _emit(dumps_canonical({"target": args.target, "mode": "csm", **sol.to_json()}),
              args.output)
    else:
        lines = [f"csm class of {args.target}: {sol.expansion}",
                 f"lowest degree component: {sol.lowest_degree}",
                 f"fundamental class: {sol.fundamental}",
                 f"lowest degree matches fundamental: {sol.lowest_matches_fundamental}"]
        for name, val in sol.restrictions.items():
            lines.append(f"restriction at {name}: {format_poly(val)}")
        _emit("\n".join(lines), args.output)
    return 0


# ---------------------------------------------------------------------------
# newton
# ---------------------------------------------------------------------------


def cmd_newton(args) -> int:
    from .newton import (LatticePolytope, contains_point, newton_polytope,
                         project_sum_zero, render_svg)
    if args.pair:
        if args.n != 3:
            raise CliError("polygon pictures are drawn for n = 3 only")
        try:
            p_text, q_text = args.pair.split(":")
        except ValueError:
            raise CliError('bad --pair; expected like "2,3,1:3,2,1"')
        p = _parse_perm(p_text, 3)
        q = _parse_perm(q_text, 3)
        from .axioms import orbit_local_data
        spec = TorusSpecialization.standard(3)
        I, J = p.to_index_tuple(), q.to_index_tuple()
        ek = orbit_local_data(J).ek_normal(spec)
        val = modified_restriction_direct(I, J, spec)
        layers = []
        if not ek.is_zero():
            layers.append(("ek-polygon", project_sum_zero(sorted(ek.support()))))
        if not val.is_zero():
            layers.append(("class-polygon", project_sum_zero(sorted(val.support()))))
        if not layers:
            raise CliError("nothing to draw: both polygons are empty")
        svg = render_svg(layers)
        _emit(svg, args.svg or args.output)
        return 0
    if args.klass:
        with open(args.klass, "r", encoding="utf-8") as fh:
            poly = poly_from_json(json.load(fh))
        P = newton_polytope(poly)
        if args.contains:
            from fractions import Fraction
            x = tuple(Fraction(v) for v in args.contains.split(","))
            inside = contains_point(P, x)
            _emit(dumps_canonical({"point": [str(v) for v in x], "contains": inside})
                  if args.format == "json" else f"contains {args.contains}: {inside}",
                  args.output)
            return 0 if inside else 1
        if args.format == "json":
            _emit(dumps_canonical(P.to_json()), args.output)
        else:
            _emit("\n".join(",".join(map(str, pt)) for pt in P.points), args.output)
        return 0
    raise CliError("newton needs --pair or --class")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mcclass",
        description="Exact calculator for equivariant characteristic classes "
                    "of Schubert and matrix Schubert cells.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json")):
        p.add_argument("--format", choices=fmt, default="text")
        p.add_argument("--output", help="write output to this path")
        p.add_argument("--jobs", type=int, default=None,
                       help="parallelism degree (default: all cores)")
        p.add_argument("-v", "--verbose", action="store_true")

    w = sub.add_parser("weight", help="weight functions and localization tables")
    w.add_argument("--mu", required=True, help="composition, e.g. 1,1,1")
    w.add_argument("--I", help='index tuple, e.g. "{1},{2}"')
    w.add_argument("--all", action="store_true", help="all index tuples")
    w.add_argument("--kind", choices=("plain", "modified", "segre"), default="plain")
    w.add_argument("--restrict", action="store_true",
                   help="emit fixed-point restrictions instead of global classes")
    common(w)
    w.set_defaults(func=cmd_weight)

    a = sub.add_parser("axioms", help="verify the axiomatic characterization")
    a.add_argument("--n", type=int, required=True)
    common(a)
    a.set_defaults(func=cmd_axioms)

    e = sub.add_parser("expand", help="structure-sheaf basis expansions")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--p", help="permutation, e.g. 2,3,1")
    e.add_argument("--all", action="store_true")
    e.add_argument("--nonequivariant", action="store_true",
                   help="specialize every torus variable to 1")
    common(e)
    e.set_defaults(func=cmd_expand)

    c = sub.add_parser("conjectures", help="sign, log-concavity and s-delta reports")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--checks", help="comma list among sign,log,sdelta (default all)")
    common(c)
    c.set_defaults(func=cmd_conjectures)

    l = sub.add_parser("limit", help="one-parameter limits of a class ratio")
    l.add_argument("--cocharacter", action="append", required=True,
                   help="exponents, e.g. -1,0,0 (repeatable)")
    l.add_argument("--class", dest="klass",
                   help="JSON file with a polynomial or num/den ratio "
                        "(default: the quadratic-cone example)")
    common(l)
    l.set_defaults(func=cmd_limit)

    ip = sub.add_parser("interpolate", help="fundamental/CSM interpolation solver")
    ip.add_argument("--data", help="orbit data JSON (default: bundled A2 quiver)")
    ip.add_argument("--target", required=True)
    ip.add_argument("--mode", choices=("fundamental", "csm"), default="fundamental")
    common(ip)
    ip.set_defaults(func=cmd_interpolate)

    nw = sub.add_parser("newton", help="Newton polytopes, containment, pictures")
    nw.add_argument("--n", type=int, default=3)
    nw.add_argument("--pair", help='two permutations, e.g. "2,3,1:3,2,1"')
    nw.add_argument("--svg", help="write the picture to this path")
    nw.add_argument("--class", dest="klass", help="polynomial JSON file")
    nw.add_argument("--contains", help="comma-separated rational point")
    common(nw, fmt=("text", "json", "svg"))
    nw.set_defaults(func=cmd_newton)

    return ap


def _join_negative_values(argv):
    """Glue option values that start with a minus (e.g. cocharacters like
    -1,2,0) onto their flag so argparse does not read them as options."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok in ("--cocharacter", "--contains") and i + 1 < len(argv)
                and argv[i + 1].startswith("-")):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    ap = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = ap.parse_args(_join_negative_values(list(argv)))
    if args.jobs is None:
        args.jobs = os.cpu_count() or 1
    try:
        return args.func(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (RingError, ValueError, OSError) as err:
        print(f"computation fault: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

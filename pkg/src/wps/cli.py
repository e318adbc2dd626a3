"""``wps`` command-line front end.

Exit codes: 0 success, 1 domain error (JSON on stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import aut, core, cstar, polytope, quasismooth, stability
from .errors import NotCartierDegree, WPSError

DEFAULT_SEED = 0
LENIENT = {"monomials", "fletcher", "qs"}  # commands that accept non-well-formed spaces


def _weights(text: str):
    try:
        ws = [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers, got {text!r}")
    if len(ws) < 2 or any(w < 1 for w in ws):
        raise argparse.ArgumentTypeError("need at least two positive weights")
    return ws


def _positive(text: str):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _frac(x: Fraction):
    return [x.numerator, x.denominator]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wps", description="Quasismoothness and stability of hypersurfaces in weighted projective space.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help, degree=False, poly=False):
        p = sub.add_parser(name, help=help)
        p.add_argument("-w", "--weights", type=_weights, required=True, help="comma-separated weights, e.g. 1,1,2")
        p.add_argument("--names", help="comma-separated variable names")
        p.add_argument("--format", choices=["json", "csv", "svg"], default=None)
        p.add_argument("-o", "--output", help="write output to this file instead of stdout")
        p.add_argument("--limit-steps", type=_positive, help="Groebner reduction step cap (overrides WPS_LIMIT_STEPS)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED)
        if degree:
            p.add_argument("-d", "--degree", type=_positive, required=degree == "required")
        if poly:
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("-f", "--poly", help="polynomial text")
            g.add_argument("--poly-file", help="file with one polynomial per line")
            p.add_argument("--jobs", type=_positive, default=1, help="worker processes for batch input")
        return p

    add("space", "weights, blocks, well-formedness", degree="optional")
    add("monomials", "monomial basis of a graded piece", degree="required")
    add("aut", "graded automorphism group structure", degree="optional").add_argument("-N", type=_positive)
    add("cstar", "the (C*) condition with Lie-stabilizer cross-check")
    add("zmin", "minimal weight locus and omega_min", degree="required").add_argument("-N", type=_positive)
    add("polytope", "section polytope in H", degree="required")
    add("newton", "Newton polytope of a form", degree="required", poly=True)
    add("qs", "quasismoothness of explicit forms", degree="required", poly=True)
    f = add("fletcher", "Fletcher's criterion for the general member", degree="required")
    f.add_argument("--samples", type=int, default=0, help="also test this many random forms")
    add("stability", "torus status and G-stability certificate", degree="required", poly=True).add_argument("-N", type=_positive)
    add("amatrix", "A-matrix of exponents", degree="required")
    add("nabla", "singular point on the torus (open discriminant stratum)", degree="required", poly=True)
    return parser


def _space(args):
    names = args.names.split(",") if args.names else None
    return core.make_space(args.weights, names, check_well_formed=args.command not in LENIENT)


def _polys(args, X, d):
    if args.poly is not None:
        lines = [args.poly]
    else:
        with open(args.poly_file, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    return [core.parse_polynomial(X, d, ln) for ln in lines]


def _require_cartier(X, d):
    if not core.is_cartier_degree(X, d):
        raise NotCartierDegree(f"degree {d} is not divisible by lcm{X.weights} = {X.lcm}")


def _qs_one(f):
    return {"poly": f.to_text(), "quasismooth": quasismooth.is_quasismooth(f)}


def _nabla_one(f):
    return {"poly": f.to_text(), "in_nabla_open": stability.in_nabla_open(f), "stratum": "open"}


def _stability_one(pair):
    f, N = pair
    return stability.g_stability_certificate(f, N).to_json()


def _newton_one(f):
    pts = polytope.newton_points(f)
    cert = polytope.origin_certificate(pts)
    out = {
        "poly": f.to_text(),
        "points": pts.to_json(),
        "vertices": polytope.vertices(pts).to_json(),
        "origin": str(polytope.origin_membership(pts)),
    }
    if cert is not None:
        out["mu_certificate"] = [_frac(x) for x in cert[1]]
    return out


def _batch(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _single_or_list(results):
    return results[0] if len(results) == 1 else results


def run_command(args) -> tuple:
    """Returns (payload, format) where payload is JSON-able or a string."""
    X = _space(args)
    d = getattr(args, "degree", None)
    cmd = args.command
    fmt = args.format

    if cmd == "space":
        out = X.to_json()
        if d is not None:
            out["degree"] = d
            out["cartier"] = core.is_cartier_degree(X, d)
            out["graded_dimension"] = core.graded_dimension(X, d)
        return out, "json"

    if cmd == "monomials":
        monos = core.enumerate_monomials(X, d)
        if fmt == "csv":
            header = ",".join(X.names) + "\n"
            return header + "".join(",".join(map(str, e)) + "\n" for e in monos), "csv"
        return {"degree": d, "count": len(monos), "monomials": [X.format_monomial(e) for e in monos],
                "exponents": [list(e) for e in monos]}, "json"

    if cmd == "aut":
        out = aut.aut_report(X).to_json()
        if d is not None and d % X.max_weight == 0:
            N = args.N or aut.default_N(d)
            g = aut.GradingOneParameter.grading(N)
            out["degree"] = d
            out["N"] = N
            out["omega_min"] = _frac(aut.omega_min(X, d))
            out["lambda_gN_weights"] = {X.format_monomial(e): aut.lambda_weight(X, g, e) for e in core.enumerate_monomials(X, d)}
        return out, "json"

    if cmd == "cstar":
        verdict = cstar.cstar_holds(X)
        oracle = cstar.cstar_oracle(X)
        out = verdict.to_json()
        out["oracle_degree"] = X.lcm
        out["oracle_unipotent_stabilizer_dims"] = {X.format_monomial(z): v for z, v in oracle.items()}
        out["oracle_agrees"] = verdict.holds == all(v == 0 for v in oracle.values())
        return out, "json"

    if cmd == "zmin":
        _require_cartier(X, d)
        N = args.N or aut.default_N(d)
        z = cstar.zmin(X, d)
        out = z.to_json(X)
        out.update(degree=d, N=N, omega_min=_frac(aut.omega_min(X, d)))
        g = aut.GradingOneParameter.grading(N)
        others = [aut.lambda_weight(X, g, e) for e in core.enumerate_monomials(X, d) if e not in z.basis]
        out["next_weight"] = min(others) if others else None
        return out, "json"

    if cmd == "polytope":
        pts = polytope.section_polytope(X, d)
        if fmt == "svg":
            return polytope.svg2d(pts, True, [X.format_monomial(e) for e in core.enumerate_monomials(X, d)]), "svg"
        return {"degree": d, "points": pts.to_json(), "vertices": polytope.vertices(pts).to_json(),
                "origin": str(polytope.origin_membership(pts))}, "json"

    polys = _polys(args, X, d) if hasattr(args, "poly") else []

    if cmd == "newton":
        if fmt == "svg":
            if len(polys) != 1:
                raise ValueError("SVG output needs exactly one polynomial")
            f = polys[0]
            return polytope.svg2d(polytope.newton_points(f), True, [X.format_monomial(e) for e in f.terms]), "svg"
        return _single_or_list(_batch(_newton_one, polys, args.jobs)), "json"

    if cmd == "qs":
        return _single_or_list(_batch(_qs_one, polys, args.jobs)), "json"

    if cmd == "nabla":
        return _single_or_list(_batch(_nabla_one, polys, args.jobs)), "json"

    if cmd == "stability":
        _require_cartier(X, d)
        return _single_or_list(_batch(_stability_one, [(f, args.N) for f in polys], args.jobs)), "json"

    if cmd == "fletcher":
        out = quasismooth.fletcher_general(X, d).to_json(X)
        if args.samples > 0:
            rng = random.Random(args.seed)
            hits = 0
            for _ in range(args.samples):
                f = core.random_polynomial(X, d, rng)
                if f and quasismooth.is_quasismooth(f):
                    hits += 1
            out["samples"] = {"seed": args.seed, "count": args.samples, "quasismooth": hits}
        return out, "json"

    if cmd == "amatrix":
        A = stability.a_matrix(X, d)
        if fmt in (None, "csv"):
            return A.to_csv(), "csv"
        return A.to_json(), "json"

    raise AssertionError(cmd)


def _emit(args, payload):
    text = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("WPS_LIMIT_STEPS")
    if args.limit_steps:
        os.environ["WPS_LIMIT_STEPS"] = str(args.limit_steps)  # inherited by --jobs workers
    try:
        payload, fmt = run_command(args)
        if args.format is not None and fmt != args.format:
            print(json.dumps({"error": "UnsupportedFormat", "message": f"{args.command} cannot produce {args.format}"}), file=sys.stderr)
            return 2
        _emit(args, payload)
    except WPSError as exc:
        print(json.dumps(exc.to_json()), file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    finally:
        if args.limit_steps:
            if saved is None:
                os.environ.pop("WPS_LIMIT_STEPS", None)
            else:
                os.environ["WPS_LIMIT_STEPS"] = saved
    return 0


if __name__ == "__main__":
    sys.exit(main())

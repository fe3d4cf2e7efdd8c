"""Command-line front end.  Every command prints one JSON document on stdout.

Exit status: 0 success, 2 invalid input, 3 precision exhausted after retrying
at doubled precision up to 4096 bits.
"""

import argparse
import json
import os
import sys

from . import oracle
from ._mp import decimal
from .algnum import format_rational, minpoly_integer, parse_rational
from .diophantine.bounds import MatveevProvider, TableProvider, compose_bounds
from .diophantine.family import solve_family_general
from .diophantine.imaginary import form_roots, lemma3_bounds, solve_fixed_totally_imaginary
from .embeddings import compute_embeddings, is_almost_totally_imaginary
from .errors import PrecisionExhausted, ThueError, ValidationError
from .fieldspec import load_field_spec, parse_form, read_json, require_units
from .forms import SearchCaps, SolutionTriple, twist
from .units import ExponentVector
from .heights import abs_log_height, mahler_measure
from .stender import (
    StenderParams,
    base_coefficients,
    check_printed_b3,
    coeffs_by_recurrence,
    coeffs_direct,
    field_spec,
    palindromic_defect,
    solve_family,
    unit_epsilon,
)

EXIT_OK, EXIT_INVALID, EXIT_PRECISION = 0, 2, 3
MAX_BITS = 4096


def default_bits():
    raw = os.environ.get("THUE_PRECISION_BITS")
    if raw is None:
        return 128
    try:
        return int(raw)
    except ValueError:
        return 128


def _int_list_arg(text, name):
    try:
        return [int(v) for v in text.split(",")] if text.strip() else []
    except ValueError:
        raise ValidationError("expected a comma-separated list of integers", f"/{name}") from None


def _solutions_json(solutions):
    return [s.to_json() for s in solutions]


# ---------------------------------------------------------------------------
# commands; each takes (args, bits) and returns a JSON-serializable object

def cmd_field_check(args, bits):
    spec = load_field_spec(args.spec, bits)
    K = spec.field
    E = compute_embeddings(K, bits)
    out = {
        "degree": K.degree,
        "min_poly": list(K.coeffs),
        "irreducibility": K.irreducibility,
        "witness_prime": K.witness_prime,
        "signature": list(E.signature),
        "almost_totally_imaginary": is_almost_totally_imaginary(E),
        "alpha_primitive": len(minpoly_integer(spec.alpha)) - 1 == K.degree,
    }
    if spec.units is not None:
        out["unit_rank"] = spec.units.rank
        out["regulator"] = decimal(spec.units.regulator, 25)
    return out


def cmd_embeddings(args, bits):
    spec = load_field_spec(args.spec, bits)
    E = compute_embeddings(spec.field, bits)
    return {
        "signature": list(E.signature),
        "precision_bits": bits,
        "roots": [{"re": decimal(v.real), "im": decimal(v.imag), "radius": decimal(r, 5)}
                  for v, r in zip(E.values, E.radii)],
    }


def cmd_height(args, bits):
    spec = load_field_spec(args.spec, bits)
    K = spec.field
    parts = args.element.split(",")
    if len(parts) != K.degree:
        raise ValidationError(f"expected {K.degree} comma-separated rationals", "/element")
    a = K.element([parse_rational(p, f"/element/{i}") for i, p in enumerate(parts)])
    mp = minpoly_integer(a)
    return {
        "h": decimal(abs_log_height(a, bits).value),
        "M": decimal(mahler_measure(mp, bits=bits)) if len(mp) > 1 else "1",
        "minpoly": mp,
    }


def cmd_twist(args, bits):
    spec = load_field_spec(args.spec, bits)
    B = require_units(spec)
    e = B.exponent_vector(_int_list_arg(args.exponents, "exponents"), args.torsion)
    return {"form": list(twist(spec.alpha, e, B).coeffs)}


def _params(args):
    return StenderParams(args.D, args.c)


def cmd_stender_coeffs(args, bits):
    p = _params(args)
    rec = coeffs_by_recurrence(p, args.n)
    out = {"n": args.n, "a": rec.a, "b": rec.b, "c": rec.c}
    if args.direct:
        d = coeffs_direct(p, args.n, max(bits, 256))
        out["direct"] = {"a": d.a, "b": d.b, "c": d.c}
        out["agree"] = (d.a, d.b, d.c) == (rec.a, rec.b, rec.c)
    return out


def cmd_stender_verify(args, bits):
    p = _params(args)
    mismatches = []
    symmetry = True
    for n in range(-args.nmax, args.nmax + 1):
        rec = coeffs_by_recurrence(p, n)
        d = coeffs_direct(p, n, max(bits, 256))
        if (rec.a, rec.b, rec.c) != (d.a, d.b, d.c):
            mismatches.append(n)
        mirror = coeffs_by_recurrence(p, -n)
        symmetry = symmetry and rec.c == mirror.a and rec.b == mirror.b
    eps = unit_epsilon(p)
    f_at_eps = eps.field.polynomial_at(list(base_coefficients(p)), eps)
    return {
        "D": p.D,
        "c": p.c,
        "nmax": args.nmax,
        "recurrence_matches_direct": not mismatches,
        "mismatches": mismatches,
        "symmetries_hold": symmetry,
        "palindromic_identity_holds": palindromic_defect(p) == [],
        "f_of_epsilon_is_zero": f_at_eps.is_zero(),
        "norm_epsilon": format_rational(eps.norm()),
        "printed_b3": check_printed_b3(p),
    }


def cmd_stender_solve(args, bits):
    p = _params(args)
    caps = SearchCaps(args.cap_xy, args.cap_n)
    res = solve_family(p, args.m, caps)
    return {"solutions": _solutions_json(res.solutions), "completeness": res.completeness}


def cmd_stender_spec(args, bits):
    return field_spec(_params(args))


def cmd_solve_fixed(args, bits):
    F = parse_form(read_json(args.form))
    roots = form_roots(F)
    bounds = lemma3_bounds(F, args.m, roots)
    pairs = solve_fixed_totally_imaginary(F, args.m, args.include_axes, roots)
    return {
        "form": list(F.coeffs),
        "m": args.m,
        "y_bound": decimal(bounds.y_bound, 20),
        "x_bound": decimal(bounds.x_bound, 20),
        "solutions": [[x, y] for x, y in pairs],
    }


def _provider(args):
    if args.provider == "file":
        if not args.provider_file:
            raise ValidationError("--provider file needs --provider-file", "/provider_file")
        return TableProvider.from_file(args.provider_file)
    return MatveevProvider()


def cmd_bounds(args, bits):
    spec = load_field_spec(args.spec, bits)
    B = require_units(spec)
    return compose_bounds(spec.field, B, spec.alpha, args.m, _provider(args)).to_json()


def cmd_solve_family(args, bits):
    spec = load_field_spec(args.spec, bits)
    B = require_units(spec)
    caps = SearchCaps(args.cap_xy, args.cap_A)
    provider = _provider(args)
    res = solve_family_general(spec.field, B, spec.alpha, args.m, caps, provider)
    return {
        "solutions": _solutions_json(res.solutions),
        "completeness": res.completeness,
        "skipped": [{"torsion": e.torsion_index, "exponents": list(e.exponents)} for e in res.skipped],
    }


def oracle_search(spec, m, caps):
    """Independent brute force over a parsed field spec, as SolutionTriples in canonical order."""
    B = require_units(spec)
    fmt = lambda el: [format_rational(c) for c in el.coords]
    rows = oracle.oracle_search(
        list(spec.field.coeffs), fmt(spec.alpha), [fmt(u) for u in B.fundamental_units],
        fmt(B.torsion_generator), B.torsion_order, m, caps.xy, caps.A,
    )
    out = [SolutionTriple(x, y, ExponentVector(e, t), v) for t, e, x, y, v in rows]
    return sorted(out, key=SolutionTriple.key)


def cmd_oracle(args, bits):
    if args.D is not None:
        rows = oracle.stender_search(args.D, args.c, args.m, args.cap_xy, args.cap_A)
        sols = [SolutionTriple(x, y, ExponentVector((n,)), v) for n, x, y, v in rows]
        sols.sort(key=SolutionTriple.key)
    elif args.spec:
        sols = oracle_search(load_field_spec(args.spec, bits), args.m, SearchCaps(args.cap_xy, args.cap_A))
    else:
        raise ValidationError("oracle needs a spec file or --D/--c", "")
    return {"solutions": _solutions_json(sols), "completeness": "capped"}


# ---------------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS so that a subcommand does not reset a value given before it
    common.add_argument("--bits", type=int, default=argparse.SUPPRESS,
                        help="working precision (default 128 or $THUE_PRECISION_BITS)")
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indent the JSON output")
    common.add_argument("--output", "-o", default=argparse.SUPPRESS, help="write JSON to this file instead of stdout")
    ap = argparse.ArgumentParser(prog="twisted-thue", parents=[common],
                                 description="Twisted Thue inequalities over almost totally imaginary fields.")
    sub = ap.add_subparsers(dest="command", required=True)
    add_parser = sub.add_parser

    def sub_add(name, **kw):
        return add_parser(name, parents=[common], **kw)

    sub.add_parser = sub_add

    def with_spec(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("spec")
        p.set_defaults(func=func)
        return p

    with_spec("field-check", cmd_field_check, "validate a field spec and report its invariants")
    with_spec("embeddings", cmd_embeddings, "certified embeddings of the field generator")
    p = with_spec("height", cmd_height, "absolute logarithmic height of an element")
    p.add_argument("--element", required=True, help="comma-separated rational coordinates")
    p = with_spec("twist", cmd_twist, "binary form of alpha*eps")
    p.add_argument("--exponents", required=True)
    p.add_argument("--torsion", type=int, default=0)

    st = sub.add_parser("stender", help="the quartic example family")
    stsub = st.add_subparsers(dest="stender_command", required=True)
    stsub_add = stsub.add_parser
    stsub.add_parser = lambda name, **kw: stsub_add(name, parents=[common], **kw)

    def stender_cmd(name, func, help_text):
        q = stsub.add_parser(name, help=help_text)
        q.add_argument("--D", type=int, required=True)
        q.add_argument("--c", type=int, required=True)
        q.set_defaults(func=func)
        return q

    q = stender_cmd("coeffs", cmd_stender_coeffs, "a_n, b_n, c_n by recurrence")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--direct", action="store_true", help="also compute from certified roots")
    q = stender_cmd("verify", cmd_stender_verify, "recurrences against the direct route and the symmetries")
    q.add_argument("--nmax", type=int, default=15)
    q = stender_cmd("solve", cmd_stender_solve, "enumerate |F_n(x, y)| <= m")
    q.add_argument("--m", type=int, required=True)
    q.add_argument("--cap-xy", type=int, required=True)
    q.add_argument("--cap-n", type=int, required=True)
    stender_cmd("spec", cmd_stender_spec, "field spec JSON of the family member")

    p = sub.add_parser("solve-fixed", help="single form without real roots")
    p.add_argument("form")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--include-axes", action="store_true")
    p.set_defaults(func=cmd_solve_fixed)

    for name, func in (("bounds", cmd_bounds), ("solve-family", cmd_solve_family)):
        p = with_spec(name, func, "constant chain report" if name == "bounds" else "capped family enumeration")
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--provider", choices=["default", "file"], default="default")
        p.add_argument("--provider-file", default=None)
        if name == "solve-family":
            p.add_argument("--cap-xy", type=int, required=True)
            p.add_argument("--cap-A", type=int, required=True)

    p = sub.add_parser("oracle", help="independent brute-force search")
    p.add_argument("spec", nargs="?")
    p.add_argument("--D", type=int, default=None)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cap-xy", type=int, required=True)
    p.add_argument("--cap-A", "--cap-n", dest="cap_A", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return ap


def _validate(args):
    for name in ("cap_xy", "cap_A", "cap_n", "nmax"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            raise ValidationError("must be nonnegative", f"/{name}")
    if getattr(args, "m", 0) < 0:
        raise ValidationError("must be nonnegative", "/m")


def run(argv=None):
    """Parse, execute with the precision ladder, and return (exit_status, document, args)."""
    args = build_parser().parse_args(argv)
    args.pretty = getattr(args, "pretty", False)
    args.output = getattr(args, "output", None)
    bits = getattr(args, "bits", None) or default_bits()
    try:
        if bits < 64:
            raise ValidationError("precision must be at least 64 bits", "/bits")
        _validate(args)
        while True:
            try:
                return EXIT_OK, args.func(args, bits), args
            except PrecisionExhausted as exc:
                if bits * 2 > MAX_BITS:
                    return EXIT_PRECISION, _error(exc, bits), args
                bits *= 2
    except ThueError as exc:
        return EXIT_INVALID, _error(exc, bits), args


def _error(exc, bits):
    return {"error": {"code": exc.code, "message": str(exc),
                      "pointer": getattr(exc, "pointer", None), "precision_bits": bits}}


def main(argv=None):
    status, doc, args = run(argv)
    text = json.dumps(doc, sort_keys=True, indent=2 if args.pretty else None)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return status


if __name__ == "__main__":
    sys.exit(main())

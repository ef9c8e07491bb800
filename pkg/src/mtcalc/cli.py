"""Command-line entry point: ``mtcalc <command> [options]``.

Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.
With ``--json`` every command prints one envelope
``{command, parameters, result, citations, warnings}`` with sorted keys.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import charclasses, classifying, loopspace, splitting, thom
from .errors import InvariantViolation, MtcalcError
from .series import GeneratorSpec, default_max_degree

COMMANDS = ("ring", "restrict", "detect", "pin", "thom", "qhomology", "split",
            "nu", "xi", "reproduce-table", "selftest")

U_SELFMAP_WARNING = ("sign convention: roots shift by +c_1, so c_1 maps to (1+n)c_1; "
                     "the literal det(A)^{-1}A would give (1-n)c_1 (use --sign -1)")
RP_SW_WARNING = ("w_2(T RP^n) follows C(n+1,2) mod 2: zero for n = 4k, x^2 for n = 4k+2; "
                 "the opposite assignment of these two cases is treated as a swap")


class Report:
    """Result of one command: JSON payload plus its human-readable rendering."""

    def __init__(self, result, text, citations=(), warnings=(), failed=False):
        self.result = result
        self.text = text
        self.citations = list(citations)
        self.warnings = list(warnings)
        self.failed = failed


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise MtcalcError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _degree(args) -> int:
    return args.max_degree if args.max_degree is not None else default_max_degree()


def _series_line(series, lo=None) -> str:
    lo = series.min_degree if lo is None else lo
    dims = series.dims(lo, series.trunc_degree)
    return f"degrees {lo}..{series.trunc_degree}: " + ",".join(map(str, dims))


# -- handlers -----------------------------------------------------------------

def cmd_ring(args) -> Report:
    pres = classifying.cohomology_presentation(args.family, args.n, args.coeff)
    result = pres.to_json()
    lines = [str(pres)] + [f"note: {n}" for n in pres.notes]
    if args.max_degree is not None:
        series = pres.poincare_series(args.max_degree)
        result["series"] = series.to_json()
        lines.append(_series_line(series))
    return Report(result, "\n".join(lines), ["classifying-space cohomology"], pres.notes)


def _map_text(m) -> str:
    lines = [f"{m.name}: {m.source.label} -> {m.target.label}"]
    lines += [f"  {v.name} |-> {im}" for v, im in zip(m.source.generators, m.images)]
    return "\n".join(lines)


def cmd_restrict(args) -> Report:
    warnings = []
    extra = {}
    if args.map == "standard":
        m = classifying.standard_restriction(args.family, args.n, args.coeff)
        cite = "standard restriction"
    elif args.map == "detect":
        m = classifying.detection_map(args.family, args.n, args.coeff)
        cite = "splitting-principle detection"
    elif args.map == "j":
        m = classifying.j_restriction(args.n, method=args.method)
        cite = "w_2 pullback along det(X)(X+1)"
    elif args.map == "su":
        coeff = args.prime if args.prime is not None else args.coeff
        m = classifying.su_restriction(args.n, coeff, method=args.method)
        cite = "U(n) in SU(n+1)"
    else:
        if args.prime is None:
            raise MtcalcError("u-selfmap needs --prime")
        r = classifying.u_selfmap(args.n, args.prime, sign=args.sign, method=args.method)
        m = r.map
        extra = {"c1_coefficient": r.c1_coefficient, "divisibility_rule": r.divisibility_rule,
                 "invertible": r.invertible, "sign": r.sign}
        if r.sign == 1 and r.invertible != r.divisibility_rule:
            raise InvariantViolation("Jacobian invertibility disagrees with p not dividing n+1")
        warnings.append(U_SELFMAP_WARNING)
        cite = "unitary self-map c_1 -> (1+n)c_1"
    result = m.to_json()
    result.update(extra)
    text = _map_text(m)
    if extra:
        text += f"\ninvertible: {extra['invertible']} (c_1 coefficient {extra['c1_coefficient']})"
    return Report(result, text, [cite], warnings)


def cmd_detect(args) -> Report:
    m = classifying.detection_map(args.family, args.n, args.coeff)
    return Report(m.to_json(), _map_text(m), ["splitting-principle detection"])


def cmd_pin(args) -> Report:
    v = classifying.pin_structures(args.n)
    text = (f"RP^{args.n}: w_1 = {v.w1}x, w_2 = {v.w2}x^2; "
            f"Pin+ {'yes' if v.pin_plus else 'no'}, Pin- {'yes' if v.pin_minus else 'no'}")
    warnings = [RP_SW_WARNING] if args.n % 2 == 0 else []
    return Report(v.to_json(), text, ["tangent bundle of RP^n", "Pin obstruction classes"], warnings)


def cmd_thom(args) -> Report:
    N = _degree(args)
    modulus = classifying.parse_coefficient(args.coeff)
    module = thom.ThomModule(args.family, args.n, modulus)
    series = thom.mt_poincare_series(args.family, args.n, modulus, N)
    result = {"module": module.to_json(), "series": series.to_json()}
    lines = [f"H^*(MT{args.family}({args.n});{classifying.coefficient_name(modulus)}) = "
             f"{module.to_json()['presentation']}", _series_line(series)]
    warnings = []
    for flag, fn, key in ((args.check_ses, thom.verify_ses_dimensions, "ses"),
                          (args.check_direct_sum, thom.mt_direct_sum_check, "direct_sum")):
        if not flag:
            continue
        report = fn(args.family, args.n, modulus, N)
        result[key] = report.to_json()
        warnings += report.notes
        status = "pass" if report.passed else f"FAIL at degree {report.first_violation}"
        lines.append(f"{key} check: {status}")
    return Report(result, "\n".join(lines), ["Thom isomorphism", "cofibre sequence of MTG(n)"], warnings)


def cmd_qhomology(args) -> Report:
    N = _degree(args)
    if args.s0:
        series = loopspace.q0s0_series(N)
        gens = loopspace.q0s0_generators(N)
        result = {"generators": [w.to_json() for w in gens], "series": series.to_json()}
        return Report(result, "H_*(Q_0S^0;F2)\n" + _series_line(series), ["Dyer-Lashof free algebra"])
    degrees = args.generators or []
    if args.rational:
        gens = [GeneratorSpec(d, "even") for d in degrees]
        gens += [GeneratorSpec(d, "odd") for d in args.odd_generators or []]
        series = loopspace.rational_omega_series(loopspace.HomologyInput(tuple(gens)), N)
        label = "H_*(Omega^infty X;Q)"
    elif args.plus:
        series = loopspace.q0_plus_series(degrees, N)
        label = "H_*(Q_0(Y_+);F2)"
    else:
        series = loopspace.q_homology_series(degrees, N)
        label = "H_*(QY;F2)"
    result = {"input_degrees": degrees, "series": series.to_json()}
    lines = [label, _series_line(series)]
    if args.basis is not None:
        monomials = loopspace.basis_monomials(degrees, args.basis)
        result["basis"] = [m.label() for m in monomials]
        lines.append(f"basis in degree {args.basis}: " + ", ".join(result["basis"]))
    return Report(result, "\n".join(lines), ["Dyer-Lashof free algebra"])


def cmd_split(args) -> Report:
    if args.odd_p_consistency:
        r = splitting.odd_p_consistency(args.n, args.prime, _degree(args))
        text = f"odd-p consistency n={args.n} p={args.prime}: {'pass' if r.passed else 'FAIL'}"
        return Report(r.to_json(), text, ["odd-prime equivalences of MTO(2n)"])
    if args.nonexact:
        r = splitting.nonexact_explore(args.m, _degree(args))
        text = "\n".join([f"Q_0BO({args.m + 1})_+: " + ",".join(map(str, r.bo_dims)),
                          f"Q_0BSO({args.m + 1})_+: " + ",".join(map(str, r.bso_dims)),
                          r.verdict])
        warnings = [] if r.witnesses else [r.verdict]
        return Report(r.to_json(), text, ["non-exactness explorer"], warnings)
    if args.s0:
        if args.family is None:
            raise MtcalcError("--s0 needs --family")
        v = splitting.s0_split_verdict(args.family, args.n, args.prime, args.dimension)
    else:
        if args.pair is None:
            raise MtcalcError("split needs --pair, --s0, --odd-p-consistency or --nonexact")
        v = splitting.splitting_verdict(args.pair, args.n, args.prime, args.dimension)
    if v.splits and v.chi_mod_p == 0:
        raise InvariantViolation("splits verdict with p dividing the Euler characteristic")
    warnings = list(v.warnings)
    if not v.splits:
        warnings.append(v.statement)
    return Report(v.to_json(), f"{v.verdict}: {v.statement}", ["transfer splitting", v.rule], warnings)


def cmd_nu(args) -> Report:
    if args.count:
        top = _degree(args) if args.max_degree is not None else 12
        rows = []
        for d in range(1, top + 1):
            rep = charclasses.independence_report(args.m, d)
            if rep.classes != charclasses.count_independent_nu(args.m, d):
                raise InvariantViolation("class count disagrees with enumeration")
            rows.append(rep.to_json())
        text = "\n".join(f"degree {r['degree']}: {r['classes']} classes, rank {r['rank']}" for r in rows)
        return Report({"m": args.m, "rows": rows}, text, ["algebraic independence of ν-classes"])
    if args.exponents is not None:
        vectors = [tuple(args.exponents)]
    elif args.degree is not None:
        vectors = charclasses.nu_exponent_vectors(args.m, args.degree)
    else:
        raise MtcalcError("nu needs --degree, --exponents or --count")
    entries = []
    for e in vectors:
        nu = charclasses.NuClass(args.m, e)
        mu = charclasses.format_mu_sum(charclasses.nu_to_mu(args.m, e))
        entries.append({"degree": nu.degree, "independent": nu.has_odd_entry, "mu": mu,
                        "nu": nu.label(), "square_law": charclasses.nu_square_check(args.m, e)})
    text = "\n".join(f"{x['nu']} = {x['mu']}" + ("" if x["independent"] else "  (square)")
                     for x in entries) or "no classes"
    return Report({"classes": entries, "m": args.m}, text, ["ν to μ rewriting"])


def cmd_xi(args) -> Report:
    N = _degree(args)
    series = charclasses.xi_subalgebra_series(args.prime, N)
    return Report({"prime": args.prime, "series": series.to_json()},
                  f"ξ-subalgebra at p={args.prime}\n" + _series_line(series),
                  ["ξ-class subalgebra"])


def cmd_reproduce_table(args) -> Report:
    rows = charclasses.reproduce_table(args.m)
    warnings = [f"degree {r.degree}: {r.warning}" for r in rows if r.warning]
    lines = []
    for r in rows:
        if r.not_applicable:
            lines.append(f"{r.degree}  N.A.")
        for nu, mu in r.entries:
            lines.append(f"{r.degree}  {nu}  {mu}" + ("  [derived]" if r.warning else ""))
    return Report({"m": args.m, "rows": [r.to_json() for r in rows]}, "\n".join(lines),
                  ["ν to μ rewriting", "worked table in degrees 2..9"], warnings)


SELFTEST_INVOCATIONS = (
    ["ring", "--family", "O", "--n", "0", "--coeff", "f2", "--series", "5"],
    ["nu", "--m", "2", "--degree", "2"],
    ["split", "--pair", "O2n-SO2n1", "--n", "1", "--prime", "2"],
    ["thom", "--family", "U", "--n", "2", "--coeff", "q", "--series", "20", "--check-ses"],
    ["reproduce-table"],
)


def cmd_selftest(args) -> Report:
    import jsonschema

    from .schema import ENVELOPE_SCHEMA
    from .selftest import CheckResult, run_checks

    results = run_checks()
    for argv in SELFTEST_INVOCATIONS:
        name = "envelope:" + " ".join(argv)
        try:
            envelope = json.loads(render(argv + ["--json"]))
            jsonschema.validate(envelope, ENVELOPE_SCHEMA)
            results.append(CheckResult(name, True, "schema valid"))
        except (jsonschema.ValidationError, MtcalcError, ValueError) as exc:
            results.append(CheckResult(name, False, str(exc)))
    passed = all(r.passed for r in results)
    text = "\n".join(f"{'PASS' if r.passed else 'FAIL'}  {r.name}  {r.detail}" for r in results)
    return Report({"checks": [r.to_json() for r in results], "passed": passed}, text,
                  ["oracle fixtures"], failed=not passed)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the JSON envelope")
    common.add_argument("--max-degree", "--series", dest="max_degree", type=int, default=None,
                        help="truncation degree (default 40, or MTCALC_MAX_DEGREE)")

    parser = _Parser(prog="mtcalc", description="Graded dimension and characteristic class calculator")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("ring", parents=[common], help="cohomology ring of BG(n)")
    p.add_argument("--family", required=True, choices=classifying.FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coeff", default="f2")
    p.set_defaults(func=cmd_ring)

    p = sub.add_parser("restrict", parents=[common], help="restriction maps between BG's")
    p.add_argument("--map", required=True, choices=("standard", "j", "su", "u-selfmap", "detect"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--prime", type=int)
    p.add_argument("--family", default="O", choices=classifying.FAMILIES)
    p.add_argument("--coeff", default="f2")
    p.add_argument("--sign", type=int, default=1, choices=(1, -1))
    p.add_argument("--method", default="closed", choices=("closed", "reduce"))
    p.set_defaults(func=cmd_restrict)

    p = sub.add_parser("detect", parents=[common], help="detection map into BG(1)^n")
    p.add_argument("--family", required=True, choices=("O", "U", "Sp"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coeff", default="f2")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("pin", parents=[common], help="Pin structures on RP^n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_pin)

    p = sub.add_parser("thom", parents=[common], help="cohomology of MTG(n)")
    p.add_argument("--family", required=True, choices=thom.THOM_FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coeff", default="f2")
    p.add_argument("--check-ses", action="store_true")
    p.add_argument("--check-direct-sum", action="store_true")
    p.set_defaults(func=cmd_thom)

    p = sub.add_parser("qhomology", parents=[common], help="homology of QY, Q_0(Y_+), Q_0S^0")
    p.add_argument("--generators", type=_int_list, help="degrees of a homology basis, e.g. 1,2,2")
    p.add_argument("--odd-generators", type=_int_list, help="odd generators (with --rational)")
    p.add_argument("--plus", action="store_true", help="base-point component of Q(Y_+)")
    p.add_argument("--s0", action="store_true", help="Q_0S^0")
    p.add_argument("--rational", action="store_true", help="rational graded-commutative series")
    p.add_argument("--basis", type=int, help="list basis monomials in this degree")
    p.set_defaults(func=cmd_qhomology)

    p = sub.add_parser("split", parents=[common], help="transfer splitting verdicts")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--pair", choices=sorted(set(splitting.PAIRS) | set(splitting.PAIR_ALIASES)))
    mode.add_argument("--s0", action="store_true")
    mode.add_argument("--odd-p-consistency", action="store_true")
    mode.add_argument("--nonexact", action="store_true")
    p.add_argument("--family", choices=sorted(splitting.S0_FAMILIES))
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--prime", type=int, default=2)
    p.add_argument("--dimension", type=int, help="explicit Pin dimension (4n or 4n+2)")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("nu", parents=[common], help="ν-classes as sums of μ-classes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--degree", type=int)
    p.add_argument("--exponents", type=_int_list)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_nu)

    p = sub.add_parser("xi", parents=[common], help="series of the ξ-class subalgebra")
    p.add_argument("--prime", type=int, required=True)
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("reproduce-table", parents=[common], help="ν/μ table for degrees 2..9")
    p.add_argument("--m", type=int, default=2)
    p.set_defaults(func=cmd_reproduce_table)

    p = sub.add_parser("selftest", parents=[common], help="run oracle checks and fixtures")
    p.set_defaults(func=cmd_selftest)
    return parser


def _parameters(args) -> dict:
    skip = {"func", "json", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def envelope(command: str, parameters: dict, report: Report) -> dict:
    return {"citations": report.citations, "command": command, "parameters": parameters,
            "result": report.result, "warnings": report.warnings}


def _execute(argv):
    args = build_parser().parse_args(argv)
    return args, args.func(args)


def _format(args, report: Report) -> str:
    if args.json:
        return json.dumps(envelope(args.command, _parameters(args), report),
                          sort_keys=True, ensure_ascii=False, indent=2)
    return "\n".join([report.text] + [f"warning: {w}" for w in report.warnings])


def render(argv) -> str:
    """Run a command and return exactly what it would print."""
    return _format(*_execute(argv))


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args, report = _execute(argv)
    except InvariantViolation as exc:
        print(f"mtcalc: internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except MtcalcError as exc:
        print(f"mtcalc: error: {exc}", file=sys.stderr)
        return 2
    print(_format(args, report))
    return 3 if report.failed else 0


if __name__ == "__main__":
    sys.exit(main())

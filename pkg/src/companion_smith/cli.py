"""Command-line front end.

Exit status: 0 success, 1 a fast path disagreed with the general engine,
2 bad input or usage.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Optional

from .errors import CompanionSmithError, ResultantsNotCoprime
from .exactmat import circulant, format_matrix, parse_matrix, poly_of_companion
from .intpoly import cyclotomic, divmod_monic, format_poly, monomial, parse_poly
from .smith import smith_form
from .structured import (
    alexander_polynomial,
    cyclotomic_companion_smith,
    last_nonzero_determinantal_divisor,
    smith_direct_sum_split,
    smith_product_split,
    smith_via_theorem_c,
    theorem_c_reduce,
)
from .sweeps import DEFAULT_SCALE, SUITES, run_suite
from .topology import abelianization, brieskorn_homology

SCHEMA_VERSION = 1


@dataclass
class RunReport:
    command: str
    inputs: dict
    result: Any
    agreement: Optional[bool] = None
    elapsed_ms: Optional[float] = None
    text: list = field(default_factory=list)

    def to_json(self):
        out = {"schema": SCHEMA_VERSION, "command": self.command, "inputs": self.inputs, "result": self.result}
        if self.agreement is not None:
            out["agreement"] = self.agreement
        if self.elapsed_ms is not None:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    @property
    def exit_code(self):
        return 1 if self.agreement is False else 0


def _fmt_factors(factors):
    return " ".join(str(s) for s in factors) if factors else "(none)"


def cmd_snf(args):
    try:
        with open(args.matrix_file) as fh:
            text = fh.read()
    except OSError as exc:
        raise CompanionSmithError(f"cannot read {args.matrix_file}: {exc.strerror}") from None
    m = parse_matrix(text)
    dec = smith_form(m, want_transforms=args.transforms)
    lines = [f"invariant factors: {_fmt_factors(dec.factors)}", f"rank: {dec.rank}"]
    if args.transforms:
        lines += ["left transform:", format_matrix(dec.left).rstrip("\n")]
        lines += ["right transform:", format_matrix(dec.right).rstrip("\n")]
    return RunReport("snf", {"matrix_file": args.matrix_file, "rows": m.rows, "cols": m.cols},
                     dec.to_json(), text=lines)


def cmd_polymat(args):
    f, g = parse_poly(args.f), parse_poly(args.g)
    red = theorem_c_reduce(f, g)
    fast = smith_via_theorem_c(f, g)
    result = {
        "z": format_poly(red.z),
        "F": format_poly(red.f_quot),
        "G": format_poly(red.g_quot),
        "m": red.zero_block_size,
        "invariant_factors": list(fast.factors),
        "rank": fast.rank,
    }
    if red.g_quot.degree > 0:
        result["last_nonzero_determinantal_divisor"] = last_nonzero_determinantal_divisor(f, g)
    else:
        result["last_nonzero_determinantal_divisor"] = None
    lines = [
        f"f(C_g) with f = {format_poly(f)}, g = {format_poly(g)} ({g.degree}x{g.degree})",
        f"common divisor z = {result['z']}, F = {result['F']}, G = {result['G']}, m = {result['m']}",
        f"invariant factors: {_fmt_factors(fast.factors)}",
        f"rank: {fast.rank}",
        f"|res(F, G)|: {result['last_nonzero_determinantal_divisor']}",
    ]
    agreement = None
    if args.check:
        slow = smith_form(poly_of_companion(f, g))
        result["engine_invariant_factors"] = list(slow.factors)
        agreement = slow.factors == fast.factors
        lines.append(f"engine factors: {_fmt_factors(slow.factors)}")
        lines.append(f"agreement: {str(agreement).lower()}")
    return RunReport("polymat", {"f": format_poly(f), "g": format_poly(g), "check": args.check},
                     result, agreement, text=lines)


def cmd_cyclotomic(args):
    fast = cyclotomic_companion_smith(args.m, args.n)
    result = {"invariant_factors": list(fast.factors), "rank": fast.rank}
    lines = [f"Smith form of Phi_{args.m}(C_Phi_{args.n}): {_fmt_factors(fast.factors)}"]
    agreement = None
    if args.check:
        slow = smith_form(poly_of_companion(cyclotomic(args.m), cyclotomic(args.n)))
        result["engine_invariant_factors"] = list(slow.factors)
        agreement = slow.factors == fast.factors
        lines.append(f"engine factors: {_fmt_factors(slow.factors)}")
        lines.append(f"agreement: {str(agreement).lower()}")
    return RunReport("cyclotomic", {"m": args.m, "n": args.n, "check": args.check},
                     result, agreement, text=lines)


def cmd_split(args):
    product = args.f1 is not None or args.f2 is not None
    direct = args.f is not None or args.g1 is not None or args.g2 is not None
    if product == direct or (product and None in (args.f1, args.f2, args.g)) or (
            direct and (None in (args.f, args.g1, args.g2) or args.g is not None)):
        raise CompanionSmithError("give either --f1 --f2 --g (product) or --f --g1 --g2 (direct sum)")
    if product:
        f1, f2, g = parse_poly(args.f1), parse_poly(args.f2), parse_poly(args.g)
        inputs = {"mode": "product", "f1": format_poly(f1), "f2": format_poly(f2), "g": format_poly(g)}
        fast = partial(smith_product_split, f1, f2, g)
        target = (f1 * f2, g)
    else:
        f, g1, g2 = parse_poly(args.f), parse_poly(args.g1), parse_poly(args.g2)
        inputs = {"mode": "direct-sum", "f": format_poly(f), "g1": format_poly(g1), "g2": format_poly(g2)}
        fast = partial(smith_direct_sum_split, f, g1, g2)
        target = (f, g1 * g2)
    inputs.update(check=args.check, fallback=args.fallback)
    try:
        dec, method = fast(), "split"
    except ResultantsNotCoprime as exc:
        if not args.fallback:
            raise
        dec, method = smith_form(poly_of_companion(*target)), "engine"
        note = str(exc)
    result = {"method": method, "invariant_factors": list(dec.factors), "rank": dec.rank}
    lines = [f"invariant factors: {_fmt_factors(dec.factors)}", f"rank: {dec.rank}", f"method: {method}"]
    if method == "engine":
        lines.append(f"split refused ({note}); used the general engine")
    agreement = None
    if args.check:
        slow = smith_form(poly_of_companion(*target))
        result["engine_invariant_factors"] = list(slow.factors)
        agreement = slow.factors == dec.factors
        lines.append(f"engine factors: {_fmt_factors(slow.factors)}")
        lines.append(f"agreement: {str(agreement).lower()}")
    return RunReport("split", inputs, result, agreement, text=lines)


def cmd_brieskorn(args):
    r, s, n = args.r, args.s, args.n
    group = brieskorn_homology(r, s, n)
    result = {"homology": group.to_json(), "human": str(group)}
    lines = [f"H_1(M({r},{s},{n})) = {group}" + (" (trivial group)" if group.is_trivial else "")]
    agreement = None
    if args.verify:
        f = divmod_monic(alexander_polynomial(r, s), monomial(n) - 1)[1]
        row = list(f.coeffs) + [0] * (n - len(f))
        direct = abelianization(circulant(row))
        agreement = direct == group
        result["direct"] = direct.to_json()
        lines.append(f"direct circulant SNF: {direct}")
        lines.append(f"agreement: {str(agreement).lower()}")
    return RunReport("brieskorn", {"r": r, "s": s, "n": n, "verify": args.verify},
                     result, agreement, text=lines)


def cmd_verify(args):
    suites = SUITES if args.suite == "all" else (args.suite,)
    result = {}
    lines = []
    all_ok = True
    for suite in suites:
        outcomes = run_suite(suite, args.max, args.seed, args.jobs)
        passed = sum(o.ok for o in outcomes)
        failures = [{"instance": o.label, "detail": o.detail} for o in outcomes if not o.ok]
        result[suite] = {"passed": passed, "total": len(outcomes), "failures": failures}
        all_ok = all_ok and not failures
        lines.append(f"{suite}: {passed}/{len(outcomes)} passed")
        for fail in failures[:10]:
            lines.append(f"  FAIL {fail['instance']}: {fail['detail']}")
    scale = args.max if args.max is not None else "default"
    return RunReport("verify", {"suite": args.suite, "max": scale, "seed": args.seed},
                     result, all_ok, text=lines)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="companion-smith",
        description="Smith forms of integer matrices f(C_g) and Brieskorn-manifold homology.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--timing", action="store_true", help="report elapsed milliseconds")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("snf", parents=[common], help="Smith form of a matrix file")
    p.add_argument("matrix_file")
    p.add_argument("--transforms", action="store_true")
    p.set_defaults(func=cmd_snf)

    p = sub.add_parser("polymat", parents=[common], help="Smith form of f(C_g)")
    p.add_argument("--f", required=True, help="polynomial, e.g. 't - 1' or '-1,1'")
    p.add_argument("--g", required=True, help="monic polynomial")
    p.add_argument("--check", action="store_true", help="compare with the general engine")
    p.set_defaults(func=cmd_polymat)

    p = sub.add_parser("cyclotomic", parents=[common], help="Smith form of Phi_m(C_Phi_n)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.set_defaults(func=cmd_cyclotomic)

    p = sub.add_parser("split", parents=[common],
                       help="Smith form of (f1 f2)(C_g) or f(C_{g1 g2}) from the two factors")
    p.add_argument("--f1")
    p.add_argument("--f2")
    p.add_argument("--g")
    p.add_argument("--f")
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.add_argument("--check", action="store_true")
    p.add_argument("--fallback", action="store_true",
                   help="use the general engine when the resultants are not coprime")
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("brieskorn", parents=[common], help="H_1 of M(r, s, n)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_brieskorn)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("--suite", choices=SUITES + ("all",), required=True)
    p.add_argument("--max", type=int, default=None,
                   help="instance count or index bound (defaults: %s)" % ", ".join(
                       f"{k}={v}" for k, v in DEFAULT_SCALE.items()))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.func(args)
    except CompanionSmithError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    if args.format == "json":
        print(json.dumps(report.to_json()))
    else:
        print("\n".join(report.text))
        if report.elapsed_ms is not None:
            print(f"elapsed: {report.elapsed_ms:.1f} ms")
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point: ``omegatau <command> [options]``.

Exit codes: 0 success, 1 invalid certificate under --strict, 2 parse or I/O
error, 3 a verification check failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional

from .algebra import GroupElem, LaurentPoly, ParseError
from .certify import certify_nf, verify_certificate
from .intersection import SurgeryConfig, format_records, lambda_sum, parse_records, surgery_pushoff
from .invariants import InvalidCertificate, load_link_map, theorem_check
from .selftest import check_surgery, run_selftest
from .window import window_report

EXIT_OK, EXIT_INVALID, EXIT_PARSE, EXIT_VERIFY = 0, 1, 2, 3


def _emit(out, fmt: str, payload: dict, text: str) -> None:
    if fmt == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text)


def cmd_invariants(args, out) -> int:
    if not args.input:
        raise ParseError("invariants needs an input certificate file")
    cert = load_link_map(args.input)
    try:
        report = theorem_check(cert, strict=args.strict)
    except InvalidCertificate as exc:
        sys.stderr.write(f"invalid certificate: {exc}\n")
        return EXIT_INVALID
    _emit(out, args.format, report.to_dict(), report.to_text())
    return EXIT_OK if report.theorem_holds or not report.valid else EXIT_VERIFY


def cmd_certify(args, out) -> int:
    if args.target is not None:
        n, m = args.target
        cert = certify_nf(n, m)
        ok = verify_certificate(cert)
        payload = {
            "target": [n, m],
            "nf_bit": cert.nf_bit,
            "combo": [[c, str(inst)] for c, inst in cert.combo],
            "verified": bool(ok),
        }
        _emit(out, args.format, payload, cert.to_text() + f"verified {ok}\n")
        return EXIT_OK if ok else EXIT_VERIFY

    r = args.range
    failed = []
    total = longest = biggest = 0
    for n in range(-r, r + 1):
        for m in range(-r, r + 1):
            cert = certify_nf(n, m, limit=r)
            total += 1
            longest = max(longest, len(cert.combo))
            biggest = max([biggest] + [abs(c) for c, _ in cert.combo])
            if not verify_certificate(cert):
                failed.append([n, m])
    payload = {
        "range": r,
        "certificates": total,
        "verified": total - len(failed),
        "failed": failed,
        "max_combo_length": longest,
        "max_abs_coeff": biggest,
    }
    text = "".join(
        [
            f"range: {r}\n",
            f"certificates: {total}\n",
            f"verified: {total - len(failed)}\n",
            f"failed: {' '.join(f'({a},{b})' for a, b in failed) or 'none'}\n",
            f"max_combo_length: {longest}\n",
            f"max_abs_coeff: {biggest}\n",
        ]
    )
    _emit(out, args.format, payload, text)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_window(args, out) -> int:
    report = window_report(args.window)
    _emit(out, args.format, report.to_dict(), report.to_text())
    return EXIT_OK if report.soundness and report.independence else EXIT_VERIFY


def cmd_surgery(args, out) -> int:
    if args.input:
        with open(args.input) as fh:
            points = parse_records(fh.read())
        cfg = SurgeryConfig(GroupElem(args.dual), args.inverse_dual)
        pushed = surgery_pushoff(points, cfg)
        before, after = lambda_sum(points), lambda_sum(pushed)
        g = cfg.effective
        expected = (LaurentPoly.constant(1) - LaurentPoly.from_elem(g)) * before
        ok = after == expected and after.augment() == 0
        payload = {
            "dual": str(g),
            "lambda_in": str(before),
            "records_out": [[p.sign, p.elem.n] for p in pushed],
            "lambda_out": str(after),
            "conservation": ok,
        }
        text = (
            f"dual: {g}\n"
            f"lambda_in: {before}\n"
            f"lambda_out: {after}\n"
            f"conservation: {'pass' if ok else 'FAIL'}\n"
            "records_out:\n" + format_records(pushed)
        )
        _emit(out, args.format, payload, text)
        return EXIT_OK if ok else EXIT_VERIFY

    result = check_surgery(random.Random(args.seed), args.trials)
    payload = {"seed": args.seed, "trials": result.cases, "failures": result.failures, "passed": result.passed}
    _emit(out, args.format, payload, f"seed: {args.seed}\n{result.line()}\n")
    return EXIT_OK if result.passed else EXIT_VERIFY


def cmd_selftest(args, out) -> int:
    results = run_selftest(seed=args.seed, trials=args.trials, limit=args.range, window=args.window)
    ok = all(r.passed for r in results)
    payload = {
        "seed": args.seed,
        "checks": [
            {"name": r.name, "passed": r.passed, "cases": r.cases, "failures": r.failures, "detail": r.detail}
            for r in results
        ],
        "passed": ok,
    }
    text = f"seed: {args.seed}\n" + "".join(r.line() + "\n" for r in results)
    text += f"selftest: {'PASS' if ok else 'FAIL'}\n"
    _emit(out, args.format, payload, text)
    return EXIT_OK if ok else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--range", type=int, default=8, help="certification range (default 8)")
    common.add_argument("--window", type=int, default=4, help="largest exponent window (default 4)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=10000)
    common.add_argument("--strict", action="store_true", help="treat invalid certificates as errors")
    common.add_argument("--inverse-dual", action="store_true", help="push off along the inverse dual class")

    parser = argparse.ArgumentParser(prog="omegatau", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[common], help="omega_+, tau and the phi(tau) check for a certificate")
    p.add_argument("input")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("certify-nf", parents=[common], help="build and check normal-form certificates")
    p.add_argument("--target", type=int, nargs=2, metavar=("N", "M"), help="print one certificate")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("verify-window", parents=[common], help="Smith normal form window diagnostic")
    p.set_defaults(func=cmd_window)

    p = sub.add_parser("surgery-demo", parents=[common], help="surgery pushoff on a record file, or random checks")
    p.add_argument("input", nargs="?")
    p.add_argument("--dual", type=int, default=1, help="exponent of the dual class (default 1)")
    p.set_defaults(func=cmd_surgery)

    p = sub.add_parser("selftest", parents=[common], help="run the full seeded property suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ValueError, OSError, ArithmeticError) as exc:
        # ParseError, RangeExceeded, WindowTooLarge, ExponentOverflow land here
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

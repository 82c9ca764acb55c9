"""Command-line front end.

Subcommands: compute (tau / macdonald / symmetric / antisymmetric),
verify (identity suites), eval (numeric or single-parameter substitution,
point evaluation, special-value factorization).  Output is deterministic
text, JSON, or LaTeX; every run echoes its resolved job first.

Exit codes: 0 pass, 1 check failure, 2 bad input, 3 pole or singular
specialization.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .fermion import SubsetE, build_tau, contents_mask, mask_of, sector_of
from .macdonald import build_macdonald, label, spectral_vector
from .qtfield import QTRat, assert_generic, parse_rat, rat_str, specialize
from .serialize import super_latex, super_str, superpoly_to_json
from .superspace import SuperPoly
from .symmetry import (
    build_antisymmetric,
    build_symmetric,
    special_value,
    sym_label,
)
from .verify import run_suite

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_POLE = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_BAD_INPUT):
        super().__init__(message)
        self.code = code


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise CliError(f"expected a comma-separated integer list, got {text!r}") from exc


_MONO_RE = re.compile(r"^(-)?u(?:\^(-?\d+))?$")


def _mono_spec(text: str) -> tuple[int, int]:
    m = _MONO_RE.match(text.strip())
    if not m:
        raise CliError(f"expected a monomial like u^2, -u, u^-5; got {text!r}")
    sign = -1 if m.group(1) else 1
    exp = int(m.group(2)) if m.group(2) else 1
    return sign, exp


def _job_echo(args, fields: dict) -> str:
    parts = [f"{k}={v}" for k, v in fields.items()]
    return f"# job: {args.command} " + " ".join(parts)


def _resolve_object(args) -> tuple[SuperPoly, dict]:
    n = args.N
    m = args.m
    members = _int_list(args.set)
    try:
        e = SubsetE(mask_of(members, n), n)
        sector = sector_of(e.mask, n, m)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    meta = {"command": args.kind, "N": n, "m": m, "E": members, "sector": sector}
    try:
        if args.kind == "tau":
            poly = SuperPoly.from_fermion(build_tau(e, m), m)
        elif args.kind == "macdonald":
            alpha = _int_list(args.alpha or "")
            if len(alpha) != n:
                raise CliError(f"--alpha must have {n} parts")
            poly = build_macdonald(label(n, m, tuple(alpha), e))
            meta["alpha"] = alpha
        elif args.kind == "symmetric":
            lam = _int_list(args.lam or "")
            if len(lam) != n:
                raise CliError(f"--lambda must have {n} parts")
            poly = build_symmetric(tuple(lam), e, m)
            meta["lambda"] = lam
            lab = sym_label(tuple(lam), e, m)
            meta["E_root"] = list(lab.e_root.members)
            meta["E_sink"] = list(lab.e_sink.members)
        elif args.kind == "antisymmetric":
            lam = _int_list(args.lam or "")
            if len(lam) != n:
                raise CliError(f"--lambda must have {n} parts")
            poly = build_antisymmetric(tuple(lam), e, m)
            meta["lambda"] = lam
        else:
            raise CliError(f"unknown object kind {args.kind!r}")
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    return poly, meta


def cmd_compute(args) -> int:
    poly, meta = _resolve_object(args)
    if args.format == "json":
        doc = superpoly_to_json(poly, label=meta)
        print(json.dumps(doc, sort_keys=True))
        return EXIT_OK
    print(_job_echo(args, meta))
    if args.kind == "tau":
        c = contents_mask(mask_of(meta["E"], args.N), args.N, args.m)
        eigen = ", ".join(rat_str(QTRat.monomial(0, ci)) for ci in c)
        print(f"# omega eigenvalues: [{eigen}]")
    if args.kind == "macdonald":
        lab = label(args.N, args.m, tuple(meta["alpha"]), SubsetE(mask_of(meta["E"], args.N), args.N))
        zeta = ", ".join(rat_str(z.to_rat()) for z in spectral_vector(lab))
        print(f"# spectral vector: [{zeta}]")
    if args.format == "latex":
        print(super_latex(poly))
    else:
        print(super_str(poly))
    return EXIT_OK


def cmd_verify(args) -> int:
    kw = {
        "n": args.N,
        "trials": args.trials,
        "seed": args.seed,
        "max_degree": args.max_degree,
        "max_total": args.max_total,
        "pairs": args.pairs,
    }
    kw = {k: v for k, v in kw.items() if v is not None}
    print(_job_echo(args, {"suite": args.suite, **kw}))
    try:
        checks = run_suite(args.suite, **kw)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    failed = 0
    for ch in checks:
        status = "PASS" if ch.ok else "FAIL"
        detail = f"  [{ch.detail}]" if ch.detail else ""
        print(f"[{status}] {ch.suite} :: {ch.anchor}{detail}")
        failed += 0 if ch.ok else 1
    print(f"# {len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def _parse_point(text: str, n: int) -> list[QTRat]:
    vals = [v.strip() for v in text.split(",")]
    if len(vals) != n:
        raise CliError(f"--x needs {n} comma-separated entries")
    out = []
    for v in vals:
        try:
            out.append(parse_rat(v))
        except ValueError as exc:
            raise CliError(f"cannot parse point entry {v!r}: {exc}") from exc
    return out


def cmd_eval(args) -> int:
    sub_q = _mono_spec(args.q_mono) if args.q_mono else None
    sub_t = _mono_spec(args.t_mono) if args.t_mono else None
    num_q = Fraction(args.q) if args.q else None
    num_t = Fraction(args.t) if args.t else None

    if args.expr:
        try:
            value = parse_rat(args.expr)
        except ValueError as exc:
            raise CliError(f"cannot parse expression: {exc}") from exc
        print(_job_echo(args, {"expr": args.expr}))
        return _eval_scalar(value, sub_q, sub_t, num_q, num_t, args)

    if not args.kind:
        raise CliError("eval needs either --expr or an object kind")
    poly, meta = _resolve_object(args)
    print(_job_echo(args, meta))

    if args.z_pattern:
        report = special_value(poly, args.z_pattern)
        print(f"collapsed onto tau_E: {report.collapsed} (E = {report.tau_label})")
        print(f"predicted factors divide exactly: {report.divisible}")
        for f in report.factors:
            print(f"  factor: {f}")
        print(f"cofactor symmetric in the free variables: {report.cofactor_symmetric}")
        if report.cofactor is not None:
            print(f"cofactor: {super_str(report.cofactor)}")
        return EXIT_OK if report.ok else EXIT_CHECK_FAILED

    if args.x:
        point = _parse_point(args.x, args.N)
        spec = [(c, None) for c in point]
        poly = poly.subst_x(spec)

    if sub_q or sub_t:
        try:
            for key, c in sorted(poly.terms.items(), key=lambda kv: kv[0]):
                val = specialize(c, sub_q, sub_t)
                alpha, mask = key
                print(f"term alpha={list(alpha)} theta={list(SubsetE(mask, args.N).members)}: {val}")
        except (ZeroDivisionError, ValueError) as exc:
            raise CliError(str(exc), EXIT_POLE) from exc
        return EXIT_OK

    if num_q is not None or num_t is not None:
        _check_generic(num_q, num_t, args)
        try:
            for key, c in sorted(poly.terms.items(), key=lambda kv: kv[0]):
                alpha, mask = key
                val = _evaluate_rat(c, num_q, num_t)
                print(f"term alpha={list(alpha)} theta={list(SubsetE(mask, args.N).members)}: {val}")
        except ZeroDivisionError as exc:
            raise CliError(str(exc), EXIT_POLE) from exc
        return EXIT_OK

    print(super_str(poly))
    return EXIT_OK


def _check_generic(num_q, num_t, args) -> None:
    if args.no_generic_check:
        return
    try:
        assert_generic(num_q, num_t, args.N or 8, window=args.generic_window)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_POLE) from exc


def _evaluate_rat(value: QTRat, num_q, num_t) -> Fraction:
    has_q, has_t = value.involves()
    if has_q and num_q is None:
        raise CliError("expression involves q but no --q value given")
    if has_t and num_t is None:
        raise CliError("expression involves t but no --t value given")
    return value.evaluate(
        num_q if num_q is not None else Fraction(0),
        num_t if num_t is not None else Fraction(0),
    )


def _eval_scalar(value: QTRat, sub_q, sub_t, num_q, num_t, args) -> int:
    if sub_q or sub_t:
        try:
            print(specialize(value, sub_q, sub_t))
        except (ZeroDivisionError, ValueError) as exc:
            raise CliError(str(exc), EXIT_POLE) from exc
        return EXIT_OK
    if num_q is not None or num_t is not None:
        _check_generic(num_q, num_t, args)
        try:
            print(_evaluate_rat(value, num_q, num_t))
        except ZeroDivisionError as exc:
            raise CliError(str(exc), EXIT_POLE) from exc
        return EXIT_OK
    print(rat_str(value))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="macdsuper",
        description="Exact Macdonald superpolynomials over Q(q,t): construct, verify, evaluate.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="construct an object and print it")
    pc.add_argument("kind", choices=["tau", "macdonald", "symmetric", "antisymmetric"])
    pc.add_argument("--N", type=int, required=True)
    pc.add_argument("--m", type=int, required=True)
    pc.add_argument("--set", required=True, help="comma list for E, e.g. 3,4,5")
    pc.add_argument("--alpha", help="comma list, macdonald only")
    pc.add_argument("--lambda", dest="lam", help="comma list, (anti)symmetric only")
    pc.add_argument("--format", choices=["text", "json", "latex"], default="text")
    pc.set_defaults(func=cmd_compute)

    pv = sub.add_parser("verify", help="run an identity suite")
    pv.add_argument(
        "suite",
        choices=[
            "hecke",
            "fermion",
            "operators",
            "macdonald",
            "norms",
            "form",
            "symmetry",
            "identity",
            "singular",
            "all",
        ],
    )
    pv.add_argument("--N", type=int)
    pv.add_argument("--max-degree", type=int, dest="max_degree")
    pv.add_argument("--max-total", type=int, dest="max_total")
    pv.add_argument("--trials", type=int)
    pv.add_argument("--pairs", type=int)
    pv.add_argument("--seed", type=int)
    pv.set_defaults(func=cmd_verify)

    pe = sub.add_parser("eval", help="evaluate exactly (substitutions, points, patterns)")
    pe.add_argument("kind", nargs="?", choices=["tau", "macdonald", "symmetric", "antisymmetric"])
    pe.add_argument("--expr", help="scalar in canonical grammar, e.g. 'q^2*t^5' or '1 + t + t^2'")
    pe.add_argument("--N", type=int)
    pe.add_argument("--m", type=int)
    pe.add_argument("--set")
    pe.add_argument("--alpha")
    pe.add_argument("--lambda", dest="lam")
    pe.add_argument("--q", help="numeric rational for q, e.g. 2 or 3/5")
    pe.add_argument("--t", help="numeric rational for t")
    pe.add_argument("--q-mono", dest="q_mono", help="substitution q -> +/-u^e, e.g. u^-5")
    pe.add_argument("--t-mono", dest="t_mono", help="substitution t -> +/-u^e, e.g. u^2")
    pe.add_argument("--x", help="comma list of exact values for x_1..x_N, e.g. t^4,t^3,t^2,t,1")
    pe.add_argument(
        "--z-pattern",
        dest="z_pattern",
        choices=["symmetric", "antisymmetric"],
        help="structured special-value evaluation with factored report",
    )
    pe.add_argument("--no-generic-check", action="store_true")
    pe.add_argument("--generic-window", type=int, default=8)
    pe.set_defaults(func=cmd_eval)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_BAD_INPUT if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ZeroDivisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())

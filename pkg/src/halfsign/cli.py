"""Command-line front end.

Commands:
  expand        expand an eta/theta recipe into a coefficient JSON file
  verify        eigen-consistency, multiplicativity, and closed-form
                identity suite on a form file
  lift          lift coefficient table plus cross-check against an
                integral-weight eigenform
  genfun-check  seeded random fuzzing of the closed-form identities
  scan          per-prime sign-change reports (CSV)
  characters    character table dump mod a prime q

Exit status: 0 on success, 1 when a verification ran and failed, 2 on
usage errors or unusable inputs.  Reports are deterministic: fixed key
order, exact 'num/den' rationals, no timestamps.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
from fractions import Fraction
from math import isqrt
from pathlib import Path

from . import characters as characters_mod
from . import flagship as flagship_mod
from . import genfun, hecke, shimura, signscan
from .arith import is_squarefree, primes_up_to
from .errors import HalfsignError
from .forms import HalfIntegralForm, coefficient, form_to_dict, format_rational, load_form, load_series
from .qseries import EtaRecipe, expand_recipe
from .shimura import chi1

USAGE_ERROR = 2
CHECK_FAILED = 1


def _write_json(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load_any_form(args) -> HalfIntegralForm:
    if getattr(args, "flagship", False):
        return flagship_mod.flagship_form(args.prec or flagship_mod.DEFAULT_PREC)
    if not args.form:
        raise HalfsignError("either --form PATH or --flagship is required")
    return load_form(args.form)


# ---------------------------------------------------------------------------
# expand


def _parse_eta(text: str) -> tuple[int, int]:
    try:
        d, r = text.split(":")
        return int(d), int(r)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"eta factor must look like D:R, got {text!r}") from exc


def cmd_expand(args) -> int:
    recipe = EtaRecipe(factors=tuple(args.eta or ()), theta_power=args.theta_power)
    series = expand_recipe(recipe, args.prec)
    if args.raw:
        payload = {
            "level": args.level,
            "k": args.k,
            "character": "trivial",
            "prec": series.prec,
            "coeffs": [format_rational(c) for c in series.coeffs],
        }
        _write_json(payload, args.out)
        return 0
    from .forms import FormDescriptor, RealCharacter

    descriptor = FormDescriptor(
        level=args.level, k=args.k, character=RealCharacter.trivial(args.level)
    )
    form = HalfIntegralForm(descriptor, series)
    _write_json(form_to_dict(form), args.out)
    return 0


# ---------------------------------------------------------------------------
# verify


def _twisted_from_form(form: HalfIntegralForm, t: int, p: int, horizon: int) -> list[Fraction]:
    chi_p = form.chi(p)
    return [
        (chi_p ** (m % 2)) * coefficient(form, t, p**m) for m in range(horizon + 1)
    ]


def cmd_verify(args) -> int:
    form = _load_any_form(args)
    k, N = form.k, form.level
    t_set = [
        t
        for t in range(1, args.t_max + 1)
        if is_squarefree(t) and t <= form.prec and coefficient(form, t, 1) != 0
    ]
    checks: dict[str, dict] = {}
    all_ok = True

    eigen: dict[str, dict] = {}
    for p in args.p:
        trace = hecke.extract_trace(form, t_set[0], p)
        report = hecke.eigen_consistency(form, p, trace, t_set, args.m_max)
        ok = report.consistent
        all_ok &= ok
        eigen[str(p)] = {
            "trace": format_rational(trace),
            "residuals_checked": len(report.residuals),
            "skipped": len(report.skipped),
            "failures": [list(key) for key in report.failures()],
            "ok": ok,
        }
    checks["eigen_consistency"] = eigen

    mult: list[dict] = []
    pairs = [(2, 3), (3, 5), (2, 5), (4, 3), (3, 7), (2, 7)]
    for t in t_set:
        if t > 10:
            break
        for m, n in pairs:
            if t * m * m * n * n > form.prec:
                continue
            residual = hecke.multiplicativity_check(form, t, m, n)
            ok = residual == 0
            all_ok &= ok
            mult.append(
                {"t": t, "m": m, "n": n, "residual": format_rational(residual), "ok": ok}
            )
    checks["multiplicativity"] = {"cases": mult, "ok": all(c["ok"] for c in mult)}

    identities: list[dict] = []
    for p in args.p:
        for t in t_set:
            if t * p * p > form.prec:
                continue
            trace = hecke.extract_trace(form, t, p)
            c1 = chi1(p, t, k, N)
            a_t = coefficient(form, t, 1)
            horizon = 0
            while t * p ** (2 * (horizon + 1)) <= form.prec:
                horizon += 1
            raw = _twisted_from_form(form, t, p, horizon)
            h1 = genfun.h_n_closed(a_t, trace, c1, p, k)
            closed = genfun.expand(h1, horizon)
            s0, s1 = genfun.s_split_closed(a_t, raw[1] if horizon >= 1 else Fraction(0), trace, c1, p, k)
            split_ok = (s0 + s1).cross_equal(h1)
            s0x = genfun.expand(s0, horizon)
            s1x = genfun.expand(s1, horizon)
            parity_ok = all(
                (s0x[m] == (raw[m] if m % 2 == 0 else 0))
                and (s1x[m] == (raw[m] if m % 2 == 1 else 0))
                for m in range(horizon + 1)
            )
            ok = closed == raw and split_ok and parity_ok
            all_ok &= ok
            identities.append(
                {"p": p, "t": t, "horizon": horizon, "closed_form_matches": closed == raw,
                 "split_identity": split_ok, "parity_support": parity_ok, "ok": ok}
            )
    checks["closed_form_identities"] = {
        "cases": identities,
        "ok": all(c["ok"] for c in identities),
    }

    payload = {
        "level": N,
        "k": k,
        "prec": form.prec,
        "t_set": t_set,
        "checks": checks,
        "all_ok": all_ok,
    }
    _write_json(payload, args.out)
    return 0 if all_ok else CHECK_FAILED


# ---------------------------------------------------------------------------
# lift


def cmd_lift(args) -> int:
    form = _load_any_form(args)
    if args.integral:
        integral = load_series(args.integral)
    else:
        integral = flagship_mod.ramanujan_delta(max(args.p_max, 100))
    lift = shimura.lift_coefficients(form, args.t, args.n_max)
    report = shimura.crosscheck_lift(form, args.t, integral, args.p_max)
    payload = {
        "t": args.t,
        "values": {str(n): format_rational(v) for n, v in lift.values.items()},
        "crosscheck": {
            "compared": list(report.compared),
            "mismatches": list(report.mismatches),
            "skipped": list(report.skipped),
            "ok": report.ok,
        },
    }
    _write_json(payload, args.out)
    return 0 if report.ok else CHECK_FAILED


# ---------------------------------------------------------------------------
# genfun-check


def random_instance(rng: random.Random) -> dict:
    """One seeded draw of closed-form parameters with a Deligne-compatible trace."""
    k = rng.randint(2, 8)
    p = rng.choice(primes_up_to(50))
    chi1_p = rng.choice((-1, 0, 1))
    den = rng.randint(1, 16)
    num_bound = isqrt(4 * p ** (2 * k - 1) * den * den)
    trace = Fraction(rng.randint(-num_bound, num_bound), den)
    a_num = 0
    while a_num == 0:
        a_num = rng.randint(-99, 99)
    a_t = Fraction(a_num, rng.randint(1, 20))
    return {"k": k, "p": p, "chi1_p": chi1_p, "trace": trace, "a_t": a_t}


def check_instance(inst: dict, terms: int, m_p: int) -> dict:
    """All closed-form identities for one parameter draw; exact comparisons."""
    k, p, chi1_p = inst["k"], inst["p"], inst["chi1_p"]
    trace, a_t = inst["trace"], inst["a_t"]
    seq = signscan.twisted_sequence(a_t, trace, chi1_p, p, k, terms)
    h1 = genfun.h_n_closed(a_t, trace, chi1_p, p, k)
    closed_ok = genfun.expand(h1, terms) == seq
    b1 = (trace - chi1_p * p ** (k - 1)) * a_t
    s0, s1 = genfun.s_split_closed(a_t, b1, trace, chi1_p, p, k)
    split_ok = (s0 + s1).cross_equal(h1)
    s0x = genfun.expand(s0, terms)
    s1x = genfun.expand(s1, terms)
    parity_ok = all(
        s0x[m] == (seq[m] if m % 2 == 0 else 0)
        and s1x[m] == (seq[m] if m % 2 == 1 else 0)
        for m in range(terms + 1)
    )
    local = hecke.satake_data(trace, p, k)
    deligne = hecke.deligne_check(trace, p, k)
    satake_ok = (local.root_kind == "complex_pair") == (deligne == "strict") or (
        local.root_kind != "complex_pair"
    )
    remark = genfun.remark_polynomial(local, m_p)
    remark_ok = m_p < 2 or remark(0) == 1
    roots_ok = True
    if local.root_kind == "complex_pair" and m_p == 2:
        roots_ok = genfun.real_root_count(remark) == 0
    return {
        "params": {
            "k": k,
            "p": p,
            "chi1_p": chi1_p,
            "trace": format_rational(trace),
            "a_t": format_rational(a_t),
        },
        "closed_form_matches_recurrence": closed_ok,
        "split_identity": split_ok,
        "parity_support": parity_ok,
        "satake_kind": local.root_kind,
        "deligne": deligne,
        "remark_constant_term": remark_ok,
        "remark_real_roots": roots_ok,
        "ok": closed_ok and split_ok and parity_ok and satake_ok and remark_ok and roots_ok,
    }


def cmd_genfun_check(args) -> int:
    rng = random.Random(args.seed)
    instances = [
        check_instance(random_instance(rng), args.terms, args.m_p)
        for _ in range(args.count)
    ]
    all_ok = all(inst["ok"] for inst in instances)
    payload = {
        "seed": args.seed,
        "count": args.count,
        "terms": args.terms,
        "m_p": args.m_p,
        "instances": instances,
        "all_ok": all_ok,
    }
    _write_json(payload, args.out)
    return 0 if all_ok else CHECK_FAILED


# ---------------------------------------------------------------------------
# scan


def cmd_scan(args) -> int:
    form = _load_any_form(args)
    progression = None
    if args.mode == "progression":
        if args.q is None or args.h is None:
            raise HalfsignError("mode=progression needs --q and --h")
        progression = (args.q, args.h)
    reports = signscan.scan(
        form, args.t, args.mode, args.p_max, args.nu_max, progression=progression
    )
    rows = [
        {
            "p": r.p,
            "t": r.t,
            "mode": r.mode,
            "length": r.length,
            "change_count": r.change_count,
            "first_change_index": "" if r.first_change_index is None else r.first_change_index,
            "zero_count": r.zero_count,
            "deligne_status": r.deligne,
        }
        for r in reports
    ]
    fieldnames = [
        "p",
        "t",
        "mode",
        "length",
        "change_count",
        "first_change_index",
        "zero_count",
        "deligne_status",
    ]
    if args.out:
        with open(args.out, "w", newline="", encoding="utf-8") as fh:
            writer = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    return 0


# ---------------------------------------------------------------------------
# characters


def cmd_characters(args) -> int:
    table = characters_mod.CharacterTable.build(args.q)
    payload = {
        "q": table.q,
        "generator": table.generator,
        "group_order": table.group_order,
        "log": {str(a): table.log[a] for a in sorted(table.log)},
        "value_exponents": [
            [table.value_exponent(j, a) for a in sorted(table.log)]
            for j in range(table.group_order)
        ],
    }
    _write_json(payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfsign",
        description="Exact checks and scans for half-integral-weight eigenform coefficients.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_expand = sub.add_parser("expand", help="expand an eta/theta recipe to a form JSON")
    p_expand.add_argument("--eta", action="append", type=_parse_eta, metavar="D:R",
                          help="eta(D z)^R factor; repeatable")
    p_expand.add_argument("--theta-power", type=int, default=0)
    p_expand.add_argument("--level", type=int, default=4)
    p_expand.add_argument("--k", type=int, default=6)
    p_expand.add_argument("--prec", type=int, default=100)
    p_expand.add_argument("--raw", action="store_true",
                          help="write without half-integral validation (comparison series)")
    p_expand.add_argument("--out", default=None)
    p_expand.set_defaults(func=cmd_expand)

    p_verify = sub.add_parser("verify", help="recurrence + identity suite on a form")
    p_verify.add_argument("--form", default=None)
    p_verify.add_argument("--flagship", action="store_true")
    p_verify.add_argument("--prec", type=int, default=None,
                          help="flagship precision (with --flagship)")
    p_verify.add_argument("--p", type=int, nargs="+", default=[3, 5, 7])
    p_verify.add_argument("--t-max", type=int, default=30)
    p_verify.add_argument("--m-max", type=int, default=4)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_lift = sub.add_parser("lift", help="lift coefficients and eigenvalue cross-check")
    p_lift.add_argument("--form", default=None)
    p_lift.add_argument("--flagship", action="store_true")
    p_lift.add_argument("--prec", type=int, default=None)
    p_lift.add_argument("--t", type=int, default=1)
    p_lift.add_argument("--n-max", type=int, default=20)
    p_lift.add_argument("--integral", default=None,
                        help="comparison coefficient JSON; defaults to eta(z)^24")
    p_lift.add_argument("--p-max", type=int, default=50)
    p_lift.add_argument("--out", default=None)
    p_lift.set_defaults(func=cmd_lift)

    p_gf = sub.add_parser("genfun-check", help="seeded random identity fuzzing")
    p_gf.add_argument("--seed", type=int, required=True)
    p_gf.add_argument("--count", type=int, default=100)
    p_gf.add_argument("--terms", type=int, default=100)
    p_gf.add_argument("--m-p", type=int, default=2,
                      help="exponent for the companion-polynomial check")
    p_gf.add_argument("--out", default=None)
    p_gf.set_defaults(func=cmd_genfun_check)

    p_scan = sub.add_parser("scan", help="per-prime sign-change reports (CSV)")
    p_scan.add_argument("--form", default=None)
    p_scan.add_argument("--flagship", action="store_true")
    p_scan.add_argument("--prec", type=int, default=None)
    p_scan.add_argument("--t", type=int, default=1)
    p_scan.add_argument("--mode", choices=("full", "odd", "even", "progression"), default="full")
    p_scan.add_argument("--q", type=int, default=None)
    p_scan.add_argument("--h", type=int, default=None)
    p_scan.add_argument("--p-max", type=int, default=50)
    p_scan.add_argument("--nu-max", type=int, default=200)
    p_scan.add_argument("--out", default=None)
    p_scan.set_defaults(func=cmd_scan)

    p_chars = sub.add_parser("characters", help="character table dump mod a prime q")
    p_chars.add_argument("--q", type=int, required=True)
    p_chars.add_argument("--out", default=None)
    p_chars.set_defaults(func=cmd_characters)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.func(args)
    except HalfsignError as exc:
        print(f"halfsign: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (OSError, ValueError) as exc:
        print(f"halfsign: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return USAGE_ERROR


def main() -> None:
    sys.exit(run())

"""Command-line interface.

Exit codes: 0 = success / check verified, 1 = check violation found,
2 = usage, parse, or precondition error.  ``--json`` switches every
subcommand to a single JSON document on stdout; diagnostics go to stderr.
Rationals are serialized as {"num": "...", "den": "..."} strings so that
consumers never overflow, digit lists as arrays of integers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import digroot, modring, radix, theorems
from .arith import Rational
from .errors import ParseError, PreconditionError

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def parse_value_literal(text: str) -> Rational:
    """Accept 'a/b', a plain nonnegative integer, or a bracket literal
    like '[2A7E]_16'."""
    text = text.strip()
    if text.startswith("["):
        return radix.value_of(radix.parse(text))
    if "/" in text:
        num_text, _, den_text = text.partition("/")
        if not (num_text.isdigit() and den_text.isdigit()):
            raise ParseError(f"invalid rational literal {text!r}", 0)
        return Rational(int(num_text), int(den_text))
    if not text.isdigit():
        raise ParseError(f"invalid number literal {text!r}", 0)
    return Rational(int(text))


def parse_base_range(text: str) -> range:
    """'2..16' -> range(2, 17); a single number selects just that base."""
    lo, sep, hi = text.partition("..")
    try:
        low = int(lo)
        high = int(hi) if sep else low
    except ValueError:
        raise ParseError(f"invalid base range {text!r}", 0) from None
    if high < low:
        raise PreconditionError(f"inverted base range {text!r}")
    if low < 2:
        raise PreconditionError(f"bases must be >= 2, got {low}")
    return range(low, high + 1)


def _resolve_workers(flag_value: int | None) -> int:
    if flag_value is None:
        env = os.environ.get("RADIXROOT_WORKERS")
        if not env:
            return 1
        try:
            flag_value = int(env)
        except ValueError:
            raise PreconditionError(f"RADIXROOT_WORKERS must be an integer, got {env!r}") from None
    if flag_value < 1:
        raise PreconditionError(f"workers must be >= 1, got {flag_value}")
    return flag_value


def _rational_json(q: Rational) -> dict:
    return {"num": str(q.num), "den": str(q.den)}


def _join_digits(digits, base: int) -> str:
    if base <= 36:
        return "".join(radix.ALPHABET[d] for d in digits)
    return ",".join(str(d) for d in digits)


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def cmd_classify(args) -> int:
    q = parse_value_literal(args.value)
    c = radix.classify(q, args.base)
    doc = {
        "command": "classify",
        "inputs": {"value": _rational_json(q), "base": args.base},
        "result": {"kind": c.kind.value, "rho0": c.rho0, "period": c.period},
    }
    _emit(args, doc, f"{c.kind.value} rho0={c.rho0} period={c.period}")
    return EXIT_OK


def _encode(q: Rational, base: int, infinite: bool) -> radix.PositionalRepr:
    if infinite or not radix.classify(q, base).is_terminating:
        return radix.to_repeating(q, base)
    return radix.to_finite(q, base)


def _repr_result(r: radix.PositionalRepr) -> dict:
    return {
        "text": radix.format_repr(r),
        "base": r.base,
        "int_digits": list(r.int_digits),
        "frac_digits": list(r.frac_digits),
        "repetend": list(r.repetend),
    }


def cmd_repr(args) -> int:
    q = parse_value_literal(args.value)
    r = _encode(q, args.base, args.infinite)
    doc = {
        "command": "repr",
        "inputs": {"value": _rational_json(q), "base": args.base, "infinite": args.infinite},
        "result": _repr_result(r),
    }
    _emit(args, doc, radix.format_repr(r))
    return EXIT_OK


def cmd_convert(args) -> int:
    q = parse_value_literal(args.value)
    r = _encode(q, args.to, args.infinite)
    doc = {
        "command": "convert",
        "inputs": {"value": _rational_json(q), "to": args.to, "infinite": args.infinite},
        "result": _repr_result(r),
    }
    _emit(args, doc, radix.format_repr(r))
    return EXIT_OK


def cmd_digroot(args) -> int:
    q = parse_value_literal(args.value)
    res = digroot.tf_digital_root(q, args.base)
    doc = {
        "command": "digroot",
        "inputs": {"value": _rational_json(q), "base": args.base},
        "result": {
            "root": res.root,
            "persistence": res.persistence,
            "trajectory": list(res.trajectory),
        },
    }
    trajectory = ", ".join(str(t) for t in res.trajectory)
    _emit(args, doc, f"root={res.root} persistence={res.persistence} trajectory=[{trajectory}]")
    return EXIT_OK


def cmd_orbits(args) -> int:
    part = modring.orbit_partition(args.modulus)
    lines = []
    for d, members in sorted(part.classes.items()):
        inner = ", ".join(str(m) for m in members)
        lines.append(f"Γ_{d}^{part.modulus} = {{{inner}}}")
    doc = {
        "command": "orbits",
        "inputs": {"modulus": args.modulus},
        "result": {
            "modulus": part.modulus,
            "classes": {str(d): list(m) for d, m in sorted(part.classes.items())},
        },
    }
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK


def _main1_json(rep: theorems.Main1Report) -> dict:
    return {
        "base": rep.base,
        "q": _rational_json(rep.q),
        "r": rep.r,
        "terms": [
            {"j": t.j, "value": _rational_json(t.value), "root": t.root, "orbit": t.orbit_label}
            for t in rep.terms
        ],
        "orbit_delta": rep.orbit_delta,
        "congruence_ok": rep.congruence_ok,
        "witness": rep.witness,
    }


def _main2_json(rep: theorems.Main2Report) -> dict:
    return {
        "base": rep.base,
        "n": rep.n,
        "s": rep.s,
        "smooth_part": rep.smooth_part,
        "p_part": rep.p_part,
        "preconditions_ok": rep.preconditions_ok,
        "repetend": list(rep.repetend),
        "repetend_root": rep.repetend_root,
        "t_doubleprime_divisible": rep.t_doubleprime_divisible,
        "reason": rep.reason,
    }


def cmd_verify(args) -> int:
    if args.check == "main1":
        q = parse_value_literal(args.q)
        rep = theorems.verify_main1(q, args.r, args.base, args.terms)
        verdict = "PASS" if rep.passed else "FAIL"
        lines = [
            f"main1: {verdict}",
            f"  base={rep.base} q={rep.q} r={rep.r} orbit_delta={rep.orbit_delta}"
            f" congruence_ok={rep.congruence_ok}",
        ]
        lines += [
            f"  j={t.j} value={t.value} root={t.root} orbit={t.orbit_label}"
            for t in rep.terms
        ]
        if rep.witness is not None:
            lines.append(f"  witness: j={rep.witness}")
        doc = {
            "command": "verify",
            "inputs": {"check": "main1", "q": _rational_json(q), "r": args.r,
                       "base": args.base, "terms": args.terms},
            "result": _main1_json(rep),
            "pass": rep.passed,
        }
        _emit(args, doc, "\n".join(lines))
        return EXIT_OK if rep.passed else EXIT_VIOLATION

    if args.check == "main2":
        rep = theorems.verify_main2(args.n, args.s, args.base)
        verdict = "PASS" if rep.passed else "FAIL"
        lines = [
            f"main2: {verdict}",
            f"  base={rep.base} n={rep.n} s={rep.s}"
            f" smooth_part={rep.smooth_part} p_part={rep.p_part}",
        ]
        if rep.preconditions_ok:
            lines.append(
                f"  repetend={_join_digits(rep.repetend, rep.base)}"
                f" root={rep.repetend_root}"
                f" t''_divisible={rep.t_doubleprime_divisible}"
            )
        else:
            lines.append(f"  reason: {rep.reason}")
        doc = {
            "command": "verify",
            "inputs": {"check": "main2", "n": args.n, "s": args.s, "base": args.base},
            "result": _main2_json(rep),
            "pass": rep.passed,
        }
        _emit(args, doc, "\n".join(lines))
        return EXIT_OK if rep.passed else EXIT_VIOLATION

    if args.check == "cor1":
        q = parse_value_literal(args.q)
        holds = theorems.verify_cor1(q, args.r, args.base)
        doc = {
            "command": "verify",
            "inputs": {"check": "cor1", "q": _rational_json(q), "r": args.r, "base": args.base},
            "result": {"holds": holds},
            "pass": holds,
        }
        _emit(args, doc, f"cor1: {'PASS' if holds else 'FAIL'}")
        return EXIT_OK if holds else EXIT_VIOLATION

    q = parse_value_literal(args.q)
    holds = theorems.verify_lemma_dr(q, args.base)
    doc = {
        "command": "verify",
        "inputs": {"check": "lemma31", "q": _rational_json(q), "base": args.base},
        "result": {"holds": holds},
        "pass": holds,
    }
    _emit(args, doc, f"lemma31: {'PASS' if holds else 'FAIL'}")
    return EXIT_OK if holds else EXIT_VIOLATION


def _summary_json(summary: theorems.FuzzSummary) -> dict:
    return {
        "tested": summary.tested,
        "passed": summary.passed,
        "failed": summary.failed,
        "skipped": summary.skipped,
        "degenerate": summary.degenerate,
        "failures": list(summary.failures),
    }


def cmd_fuzz(args) -> int:
    bases = parse_base_range(args.bases)
    workers = _resolve_workers(args.workers)
    if args.check == "main1":
        summary = theorems.fuzz_main1(bases, args.bound, args.terms, workers=workers)
        inputs = {"check": "main1", "bases": args.bases, "bound": args.bound,
                  "terms": args.terms, "workers": workers}
    else:
        summary = theorems.fuzz_main2(bases, args.n_bound, args.s_bound, workers=workers)
        inputs = {"check": "main2", "bases": args.bases, "n_bound": args.n_bound,
                  "s_bound": args.s_bound, "workers": workers}
    lines = [
        f"tested={summary.tested} skipped={summary.skipped}"
        f" degenerate={summary.degenerate} failed={summary.failed}"
    ]
    lines += [f"  FAIL {failure}" for failure in summary.failures]
    doc = {
        "command": "fuzz",
        "inputs": inputs,
        "result": _summary_json(summary),
        "pass": summary.failed == 0,
    }
    _emit(args, doc, "\n".join(lines))
    return EXIT_OK if summary.failed == 0 else EXIT_VIOLATION


def cmd_magic(args) -> int:
    res = theorems.solve_missing_digit(args.pattern, args.base)
    rendered = [_join_digits([d], args.base) for d in res.candidates]
    text = f"ambiguous: {rendered[0]} or {rendered[1]}" if res.ambiguous else rendered[0]
    doc = {
        "command": "magic",
        "inputs": {"pattern": args.pattern, "base": args.base},
        "result": {"digits": list(res.candidates), "ambiguous": res.ambiguous},
    }
    _emit(args, doc, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radixroot",
        description="Exact base-k representations, digital roots, orbit structure, "
                    "and exhaustive invariance checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a JSON document")

    p = sub.add_parser("classify", help="terminating/repeating classification of a value")
    p.add_argument("value")
    p.add_argument("--base", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("repr", help="canonical digit representation of a value")
    p.add_argument("value")
    p.add_argument("--base", type=int, required=True)
    p.add_argument("--infinite", action="store_true",
                   help="force the repeating form with a trailing repetend")
    add_json(p)
    p.set_defaults(func=cmd_repr)

    p = sub.add_parser("convert", help="re-encode a value in another base")
    p.add_argument("value")
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--infinite", action="store_true")
    add_json(p)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("digroot", help="digital root, persistence and trajectory")
    p.add_argument("value")
    p.add_argument("--base", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_digroot)

    p = sub.add_parser("orbits", help="orbit partition of the residues mod n")
    p.add_argument("--modulus", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("verify", help="run one invariance check")
    vsub = p.add_subparsers(dest="check", required=True)
    v = vsub.add_parser("main1", help="orbit invariance under division by r^j")
    v.add_argument("--q", required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--base", type=int, required=True)
    v.add_argument("--terms", type=int, default=5, help="largest exponent j")
    add_json(v)
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("main2", help="repetend digit-sum divisibility by base-1")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--s", type=int, required=True)
    v.add_argument("--base", type=int, required=True)
    add_json(v)
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("cor1", help="roots divisible by base-1 stay divisible under /r")
    v.add_argument("--q", required=True)
    v.add_argument("--r", type=int, required=True)
    v.add_argument("--base", type=int, required=True)
    add_json(v)
    v.set_defaults(func=cmd_verify)
    v = vsub.add_parser("lemma31", help="digit sum and digital root agree mod base-1")
    v.add_argument("--q", required=True)
    v.add_argument("--base", type=int, required=True)
    add_json(v)
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("fuzz", help="enumerate a check over whole input ranges")
    fsub = p.add_subparsers(dest="check", required=True)
    f = fsub.add_parser("main1")
    f.add_argument("--bases", required=True, help="base range, e.g. 2..16")
    f.add_argument("--bound", type=int, required=True,
                   help="cap on numerators and smooth denominators")
    f.add_argument("--terms", type=int, default=5)
    f.add_argument("--workers", type=int, default=None)
    add_json(f)
    f.set_defaults(func=cmd_fuzz)
    f = fsub.add_parser("main2")
    f.add_argument("--bases", required=True)
    f.add_argument("--n-bound", dest="n_bound", type=int, required=True)
    f.add_argument("--s-bound", dest="s_bound", type=int, required=True)
    f.add_argument("--workers", type=int, default=None)
    add_json(f)
    f.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("magic", help="recover the hidden digit of a multiple of base-1")
    p.add_argument("pattern", help="digit string with one '?' placeholder")
    p.add_argument("--base", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_magic)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

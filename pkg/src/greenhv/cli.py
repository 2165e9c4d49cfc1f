"""Command-line interface.

Exit status: 0 for decided verdicts and reports, 2 for inconclusive or
unknown verdicts, 1 for input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Optional, Sequence

from . import oracle
from .decomposition import BudgetExceeded, ReplayError
from .hvector import CharAssumption, SocleType, is_o_sequence, is_symmetric, parse_hvector
from .macaulay import expand, green_bound, macaulay_bound, mnz_h2_bound
from .prover import (
    FORCED_WLP,
    NOT_GORENSTEIN,
    NOT_LEVEL,
    Certificate,
    Verdict,
    analyze_gorenstein,
    enumerate_candidates,
    verify_certificate,
    wlp_analyze,
)

EXIT_OK, EXIT_INPUT, EXIT_UNDECIDED = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would exit 2, which we reserve for "inconclusive"
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _emit(args, data: dict, lines: Sequence[str]) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _char(text: str) -> CharAssumption:
    try:
        return CharAssumption.parse(text)
    except ValueError as exc:
        raise InputError(f"invalid --char {text!r}: {exc}") from None


def _field_char(text: str) -> int:
    try:
        p = int(text)
        oracle.FieldSpec(p)
    except ValueError:
        raise InputError(f"--char must be 0 or a prime, got {text!r}") from None
    return p


def _hvec(text: str):
    try:
        return parse_hvector(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _positive(args, *names):
    for name in names:
        if getattr(args, name) < 1:
            raise InputError(f"{name.upper()} must be a positive integer")


# -- subcommands --------------------------------------------------------------


def cmd_expand(args) -> int:
    _positive(args, "n", "d")
    x = expand(args.n, args.d)
    _emit(
        args,
        {"n": args.n, "d": args.d, "terms": [list(t) for t in x.terms]},
        [f"{args.n}_({args.d}) = {x}"],
    )
    return EXIT_OK


def cmd_bound(args) -> int:
    a, b = args.a, args.b
    if args.kind == "mnz-h2":
        if a < 1 or b < 2:
            raise InputError("mnz-h2 needs R >= 1 and E >= 2")
        value = mnz_h2_bound(a, b)
    else:
        if a < 0 or b < 1:
            raise InputError(f"{args.kind} needs N >= 0 and D >= 1")
        value = (macaulay_bound if args.kind == "macaulay" else green_bound)(a, b)
    _emit(args, {"kind": args.kind, "args": [a, b], "value": value}, [str(value)])
    return EXIT_OK


def cmd_check(args) -> int:
    h = _hvec(args.h)
    oseq, sym = is_o_sequence(h), is_symmetric(h)
    lines = [
        f"h = {h}",
        f"socle degree: {h.socle_degree}",
        f"codimension: {h.codim}",
        f"O-sequence: {'yes' if oseq else 'no'}",
        f"symmetric: {'yes' if sym else 'no'}",
    ]
    data = {"h": list(h.entries), "socle_degree": h.socle_degree, "codim": h.codim, "o_sequence": oseq, "symmetric": sym}
    if h.socle_degree >= 2:
        bound = mnz_h2_bound(h.codim, h.socle_degree)
        lines.append(f"h_2 lower bound (Gorenstein): {bound} ({'pass' if h[2] >= bound else 'fail'})")
        data["mnz_h2_bound"] = bound
    _emit(args, data, lines)
    return EXIT_OK


def _verdict_lines(v: Verdict) -> list[str]:
    title = v.tag.upper().replace("-", " ")
    lines = [title]
    if v.wlp_rule:
        lines.append(f"rule: {v.wlp_rule} (maximal rank forced through degree {v.wlp_through})")
    if v.certificate:
        for k, step in enumerate(v.certificate.to_dict()["steps"], 1):
            span = f"{step['before']} -> {step['after']}" if step["before"] is not None else ""
            lines.append(f"  {k:3d}. {step['rule']:<20} degree {step['degree']}: {span}  {step['detail']}")
        lines.append(f"conclusion: {v.certificate.conclusion}")
    if v.witnesses:
        lines.append(f"witness decompositions ({len(v.witnesses)} shown):")
        for b, c in v.witnesses:
            lines.append(f"  b = {b}  c = {c}")
    if v.note:
        lines.append(f"note: {v.note}")
    return lines


def _verdict_data(v: Verdict) -> dict:
    data = {"verdict": v.tag}
    if v.certificate:
        data["certificate"] = v.certificate.to_dict()
    if v.witnesses is not None:
        data["witnesses"] = [{"b": list(b), "c": list(c)} for b, c in v.witnesses]
    if v.wlp_rule:
        data["wlp_rule"] = v.wlp_rule
        data["wlp_through"] = v.wlp_through
    if v.note:
        data["note"] = v.note
    return data


def _verdict_exit(v: Verdict) -> int:
    return EXIT_OK if v.tag in (NOT_GORENSTEIN, FORCED_WLP, NOT_LEVEL) else EXIT_UNDECIDED


def cmd_analyze(args) -> int:
    h = _hvec(args.h)
    v = analyze_gorenstein(
        h, _char(args.char), witnesses=10 if args.witnesses else 0, budget=args.budget, plane_curve_gate=args.gate
    )
    if args.certificate and v.certificate:
        with open(args.certificate, "w") as fh:
            fh.write(v.certificate.to_json() + "\n")
    _emit(args, _verdict_data(v), _verdict_lines(v))
    return _verdict_exit(v)


def cmd_wlp(args) -> int:
    h = _hvec(args.h)
    try:
        socle = SocleType.parse(args.socle)
    except ValueError as exc:
        raise InputError(f"invalid --socle: {exc}") from None
    v = wlp_analyze(h, socle, _char(args.char), plane_curve_gate=args.gate)
    if args.certificate and v.certificate:
        with open(args.certificate, "w") as fh:
            fh.write(v.certificate.to_json() + "\n")
    _emit(args, _verdict_data(v), _verdict_lines(v))
    return _verdict_exit(v)


def cmd_enumerate(args) -> int:
    _positive(args, "codim", "socle_degree")
    rows = enumerate_candidates(args.codim, args.socle_degree, _char(args.char), budget=args.budget)
    counts: dict[str, int] = {}
    for row in rows:
        counts[row.label] = counts.get(row.label, 0) + 1
    lines = [f"{str(row.h):<32} {row.label}" for row in rows]
    lines.append("totals: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    _emit(
        args,
        {"candidates": [{"h": list(r.h.entries), "label": r.label} for r in rows], "counts": counts},
        lines,
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.file) as fh:
        text = fh.read()
    try:
        cert = Certificate.from_json(text)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed certificate {args.file}: {exc!r}") from None
    try:
        verify_certificate(cert)
    except ReplayError as exc:
        _emit(args, {"valid": False, "error": str(exc)}, [f"INVALID: {exc}"])
        return EXIT_INPUT
    _emit(args, {"valid": True, "verdict": cert.verdict}, [f"VALID: {cert.verdict} for h = {cert.h}"])
    return EXIT_OK


def _algebra(args) -> oracle.QuotientAlgebra:
    try:
        ideal = oracle.parse_ideal(args.ideal, args.vars)
        return oracle.QuotientAlgebra(ideal, oracle.FieldSpec(_field_char(args.char)), args.cap)
    except oracle.NotArtinianError as exc:
        raise InputError(f"{exc}") from None
    except ValueError as exc:
        raise InputError(f"invalid ideal: {exc}") from None


def cmd_oracle_algebra(args) -> int:
    A = _algebra(args)
    hf = A.hilbert
    data = {"ideal": A.ideal.format(), "char": A.characteristic, "hilbert": list(hf.values), "artinian": hf.artinian}
    lines = [
        f"R/I with I = ({A.ideal.format()}) over {A.field}",
        f"Hilbert function: {hf.values}" + ("" if hf.artinian else " (prefix, not artinian)"),
    ]
    if hf.artinian:
        soc = oracle.socle_vector(A)
        e = len(hf.values) - 1
        level = all(s == 0 for s in soc[:-1])
        data.update(socle=list(soc), level=level, gorenstein=level and soc[-1] == 1)
        kind = "Gorenstein" if level and soc[-1] == 1 else "level" if level else "not level"
        lines.append(f"socle vector: {soc} ({kind}, socle degree {e})")
    if args.restrict:
        rng = random.Random(args.seed)
        L = oracle.random_linear_form(A.num_vars, A.characteristic, rng)
        rows = []
        for d in range(1, len(hf.values)):
            got = oracle.restriction_dimension(A, L, d)
            cap = green_bound(hf.values[d], d)
            rows.append({"degree": d, "restriction": got, "green_bound": cap})
            lines.append(f"degree {d}: dim (A/(L))_d = {got} <= Green bound {cap}")
        data["restriction"] = {"L": list(L.coefficients), "degrees": rows}
    if args.wlp:
        if not hf.artinian:
            raise InputError("--wlp needs an artinian algebra")
        res = oracle.wlp_test(A, trials=args.trials, seed=args.seed)
        desc = res.describe()
        if not res.has_wlp and res.exhaustive and A.characteristic:
            desc = f"WLP fails (exhaustive over F_{A.characteristic})"
        lines.append(desc)
        lines.extend(f"  A_{i} -> A_{i + 1}: rank {got} / required {need}" for i, got, need in res.ranks)
        data["wlp"] = {
            "has_wlp": res.has_wlp,
            "exhaustive": res.exhaustive,
            "forms_tested": res.forms_tested,
            "witness": list(res.witness.coefficients) if res.witness else None,
            "ranks": [list(r) for r in res.ranks],
        }
    _emit(args, data, lines)
    return EXIT_OK


def cmd_oracle_lex(args) -> int:
    try:
        value = oracle.lex_growth(args.n, args.d, args.r)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    bound = macaulay_bound(args.n, args.d)
    _emit(
        args,
        {"n": args.n, "d": args.d, "r": args.r, "lex_growth": value, "macaulay_bound": bound},
        [f"lex growth: {value}", f"Macaulay bound: {bound}"],
    )
    return EXIT_OK


def cmd_oracle_charp(args) -> int:
    try:
        rep = oracle.charp_theorem4_counterexample(args.p, args.d, args.gdeg, seed=args.seed, samples=args.samples)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    lines = [
        f"W = <x^{rep.p} G, y^{rep.p} G, z^{rep.p} G> in degree {rep.d} over F_{rep.p}, G = {rep.G}",
        f"dim W = {rep.dim_W}, codim W = {rep.codim_W} (expected {rep.expected_codim_W})",
    ]
    lines += [f"H = {H}: dim W_H = {dim}, codim W_H = {codim} (expected {rep.expected_codim_WH})" for H, dim, codim in rep.restrictions]
    lines.append("all match" if rep.ok else "MISMATCH")
    data = {
        "p": rep.p,
        "d": rep.d,
        "g_degree": rep.g_degree,
        "G": rep.G,
        "dim_W": rep.dim_W,
        "codim_W": rep.codim_W,
        "expected_codim_W": rep.expected_codim_W,
        "restrictions": [{"H": list(H), "dim_WH": a, "codim_WH": b} for H, a, b in rep.restrictions],
        "expected_codim_WH": rep.expected_codim_WH,
        "ok": rep.ok,
    }
    _emit(args, data, lines)
    return EXIT_OK


def cmd_oracle_split(args) -> int:
    A = _algebra(args)
    names = "xyzw"
    var = args.var
    if var in names[: A.num_vars]:
        v = names.index(var)
    elif var.startswith("x") and var[1:].isdigit():
        v = int(var[1:]) - 1
    else:
        raise InputError(f"unknown variable {var!r}")
    if not 0 <= v < A.num_vars:
        raise InputError(f"variable {var!r} out of range")
    try:
        res = oracle.stanley_split(A, v)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(
        args,
        {"h": list(res.h), "b": list(res.b), "c": list(res.c), "b_vector": list(res.b_vector), "exact": res.exact},
        [
            f"h = {res.h}",
            f"b = {res.b}   (h-vector of R/(I:{var}): {res.b_vector})",
            f"c = {res.c}   (h-vector of R/(I,{var}))",
            f"h = b + c: {'yes' if res.exact else 'NO'}",
        ],
    )
    return EXIT_OK


# -- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting a --json given before it
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    parser = _Parser(prog="greenhv", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("expand", parents=[common], help="i-binomial expansion of N at level D")
    p.add_argument("n", type=int, metavar="N")
    p.add_argument("d", type=int, metavar="D")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("bound", parents=[common], help="Macaulay, Green or MNZ h_2 bound")
    p.add_argument("--kind", choices=("macaulay", "green", "mnz-h2"), required=True)
    p.add_argument("a", type=int, metavar="N|R")
    p.add_argument("b", type=int, metavar="D|E")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("check", parents=[common], help="O-sequence and symmetry report")
    p.add_argument("h", metavar="H")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("analyze", parents=[common], help="try to prove H is not a Gorenstein h-vector")
    p.add_argument("h", metavar="H")
    p.add_argument("--char", default="zero", help="zero | not-two | at-least:P | exactly:P | arbitrary")
    p.add_argument("--certificate", metavar="FILE", help="write the certificate JSON here")
    p.add_argument("--witnesses", action="store_true", help="list decompositions when inconclusive")
    p.add_argument("--budget", type=int, default=2_000_000)
    p.add_argument("--gate", choices=("appendix", "footnote"), default="appendix", help="plane-curve rigidity characteristic gate")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("wlp", parents=[common], help="is the weak Lefschetz property forced?")
    p.add_argument("h", metavar="H")
    p.add_argument("--socle", default="gorenstein", help="level | gorenstein | zero-below:D")
    p.add_argument("--char", default="not-two")
    p.add_argument("--certificate", metavar="FILE")
    p.add_argument("--gate", choices=("appendix", "footnote"), default="appendix")
    p.set_defaults(func=cmd_wlp)

    p = sub.add_parser("enumerate", parents=[common], help="classify symmetric O-sequences")
    p.add_argument("--codim", type=int, required=True)
    p.add_argument("--socle-degree", type=int, required=True)
    p.add_argument("--char", default="zero")
    p.add_argument("--budget", type=int, default=100_000)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="replay a certificate file")
    p.add_argument("file", metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force checks on monomial quotient algebras")
    osub = p.add_subparsers(dest="oracle_command", required=True, parser_class=_Parser)

    q = osub.add_parser("algebra", parents=[common], help="Hilbert function, socle, restriction, WLP")
    q.add_argument("--ideal", required=True)
    q.add_argument("--vars", type=int, required=True)
    q.add_argument("--char", default="0")
    q.add_argument("--cap", type=int, default=None, help="degree cap for non-artinian ideals")
    q.add_argument("--wlp", action="store_true")
    q.add_argument("--trials", type=int, default=20)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--restrict", action="store_true", help="compare restrictions with Green's bound")
    q.set_defaults(func=cmd_oracle_algebra)

    q = osub.add_parser("lex", parents=[common], help="lex-segment growth vs Macaulay bound")
    q.add_argument("n", type=int, metavar="N")
    q.add_argument("d", type=int, metavar="D")
    q.add_argument("r", type=int, metavar="R")
    q.set_defaults(func=cmd_oracle_lex)

    q = osub.add_parser("charp", parents=[common], help="positive-characteristic plane-curve counterexample")
    q.add_argument("-p", type=int, required=True)
    q.add_argument("-d", type=int, required=True)
    q.add_argument("--gdeg", type=int, default=0)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--samples", type=int, default=20)
    q.set_defaults(func=cmd_oracle_charp)

    q = osub.add_parser("split", parents=[common], help="observed decomposition h = b + c for a variable")
    q.add_argument("--ideal", required=True)
    q.add_argument("--vars", type=int, default=3)
    q.add_argument("--var", required=True)
    q.add_argument("--char", default="0")
    q.add_argument("--cap", type=int, default=None)
    q.set_defaults(func=cmd_oracle_split)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

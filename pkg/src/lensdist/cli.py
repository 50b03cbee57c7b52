"""Command-line frontend.

Grammar: `lens normalize|homeo`, `knot invariants|pi1`, `family eval|list`,
`surgery formula|coeffs`, `braid check`, `wu`, `distance report|witnesses|pair`.
Every subcommand honors `--format table|json` (default table); commands that
compare or normalize lens spaces honor `--convention oriented|unoriented`
(default unoriented).  Exit codes: 0 ok, 2 invalid input, 1 internal error.
The environment variable LENSDIST_FUEL overrides the simplifier fuel default.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import math
import os
import sys

from .distance import berge_pair, dh_bounds, enumerate_dh1_family
from .errors import InvalidInputError, LensdistError
from .lens import (
    CONVENTIONS,
    ORIENTED,
    UNORIENTED,
    LensSpace,
    RawLensParams,
    is_homeomorphic,
    normalize,
)
from .onebridge import classify
from .presentations import (
    DEFAULT_FUEL,
    abelianization,
    power_notation,
    presentation,
    simplify,
    word_to_string,
)
from .surgery import (
    BraidFamily,
    Slope,
    braid_surgery_lens,
    family_eval,
    family_info,
    family_names,
    filling_coefficients,
    parse_slope,
    pseudo_anosov_candidate,
    slope_distance,
    wu_hyperbolic_guarantee,
)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_USAGE = 2

FUEL_ENV = "LENSDIST_FUEL"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(f"{message}\n{self.format_usage().rstrip()}")


def _slope_arg(text: str) -> Slope:
    try:
        return parse_slope(text)
    except InvalidInputError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _braid_word_arg(text: str) -> tuple[int, ...]:
    try:
        letters = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"cannot parse braid word {text!r}; expected comma-separated signed integers"
        ) from None
    if not letters or any(x == 0 for x in letters):
        raise argparse.ArgumentTypeError("braid letters must be nonzero integers")
    return letters


def _coprime_pair(name_p: str, name_q: str, p: int, q: int) -> RawLensParams:
    if math.gcd(p, q) != 1:
        raise InvalidInputError(
            f"arguments {name_p}={p}, {name_q}={q} must be coprime"
        )
    return RawLensParams(p, q)


def _lens_record(space: LensSpace | RawLensParams) -> dict:
    return {"p": space.p, "q": space.q}


def _render(record: dict, table: str, fmt: str) -> str:
    return json.dumps(record, indent=2) if fmt == "json" else table


def _resolve_fuel(args: argparse.Namespace) -> int:
    if args.fuel is not None:
        return args.fuel
    raw = os.environ.get(FUEL_ENV)
    if raw is None:
        return DEFAULT_FUEL
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"{FUEL_ENV}={raw!r} is not an integer") from None


def _lens_with_raw(raw: RawLensParams, convention: str) -> tuple[LensSpace, str]:
    ls = normalize(raw, convention)
    if (raw.p, raw.q) == (ls.p, ls.q):
        return ls, str(ls)
    return ls, f"{ls} (raw {raw})"


# ---------------------------------------------------------------------------
# handlers


def _cmd_lens_normalize(args: argparse.Namespace) -> str:
    raw = _coprime_pair("p", "q", args.p, args.q)
    ls = normalize(raw, args.convention)
    record = {**_lens_record(ls), "rendered": str(ls), "convention": args.convention}
    return _render(record, str(ls), args.format)


def _cmd_lens_homeo(args: argparse.Namespace) -> str:
    a = normalize(_coprime_pair("p1", "q1", args.p1, args.q1), args.convention)
    b = normalize(_coprime_pair("p2", "q2", args.p2, args.q2), args.convention)
    same = is_homeomorphic(a, b, args.convention)
    verdict = "homeomorphic" if same else "not homeomorphic"
    record = {
        "a": _lens_record(a),
        "b": _lens_record(b),
        "homeomorphic": same,
        "convention": args.convention,
    }
    return _render(record, f"{a} and {b}: {verdict} ({args.convention})", args.format)


def _cmd_knot_invariants(args: argparse.Namespace) -> str:
    inv = classify(args.p, args.q, args.u)
    if inv.s3_candidates:
        note = (
            "|H1| = 1 holds for r in s3_candidates; necessary, not sufficient, "
            "for a longitudinal surgery yielding S3"
        )
    else:
        note = "no longitudinal surgery can yield S3 (homology obstruction)"
    record = {
        "p": args.p,
        "q": args.q,
        "u": args.u,
        "psi": inv.psi,
        "phi": inv.phi,
        "phi_tilde": inv.phi_tilde,
        "phi_tilde_parts": list(inv.phi_tilde_parts),
        "s3_candidates": list(inv.s3_candidates),
        "classification": inv.classification,
        "note": note,
    }
    parts = ", ".join(str(x) for x in inv.phi_tilde_parts)
    cands = ", ".join(str(r) for r in inv.s3_candidates) or "none"
    table = "\n".join(
        [
            f"knot: k({args.p},{args.q};{args.u})",
            f"psi: {inv.psi}",
            f"phi: {inv.phi}",
            f"phi_tilde: {inv.phi_tilde} (min of {parts})",
            f"s3_candidates: {cands}",
            f"classification: {inv.classification}",
            f"note: {note}",
        ]
    )
    return _render(record, table, args.format)


def _cmd_knot_pi1(args: argparse.Namespace) -> str:
    fuel = _resolve_fuel(args)
    g = presentation(args.p, args.q, args.u, args.r)
    rows, order = abelianization(g)
    outcome = simplify(g, fuel)
    if outcome.verdict == "CyclicOfOrder":
        verdict_text = f"CyclicOfOrder({outcome.order})"
        if outcome.order == 0:
            verdict_text += " (infinite cyclic)"
    else:
        verdict_text = outcome.verdict
    residual_record = None
    residual_line = ""
    if outcome.residual is not None:
        residual_record = {
            "gens": list(outcome.residual.gens),
            "relators": [
                word_to_string(w, outcome.residual.gens) for w in outcome.residual.relators
            ],
        }
        residual_line = f"\nresidual: {outcome.residual}"
    record = {
        "p": args.p,
        "q": args.q,
        "u": args.u,
        "r": args.r,
        "relators": [word_to_string(w) for w in g.relators],
        "relators_pretty": [power_notation(w) for w in g.relators],
        "abelianization": [list(row) for row in rows],
        "h1_order": order,
        "verdict": outcome.verdict,
        "order": outcome.order,
        "residual": residual_record,
        "steps": len(outcome.steps),
        "fuel": fuel,
    }
    matrix = "; ".join(f"({row[0]}, {row[1]})" for row in rows)
    table = "\n".join(
        [
            f"presentation: {g}",
            f"abelianization: rows {matrix}; |H1| = {order}",
            f"simplify: {verdict_text} after {len(outcome.steps)} steps (fuel {fuel})"
            + residual_line,
        ]
    )
    return _render(record, table, args.format)


def _family_record(name: str) -> dict:
    fam = family_info(name)
    if isinstance(fam, BraidFamily):
        return {
            "name": fam.name,
            "kind": "braid-closure",
            "n": fam.n,
            "filling": str(fam.filling),
            "exponent_sum": fam.exponent_sum,
            "citations": list(fam.citations),
        }
    a, b, c, d = fam.lens_coeffs
    return {
        "name": fam.name,
        "kind": "closed-form",
        "filling": str(fam.filling),
        "lens_coeffs": list(fam.lens_coeffs),
        "form": f"L({a}{b:+d}r, {c}{d:+d}r)",
        "citations": list(fam.citations),
    }


def _cmd_family_list(args: argparse.Namespace) -> str:
    records = [_family_record(name) for name in family_names()]
    lines = []
    for rec in records:
        bits = [f"{rec['name']}: {rec['kind']}, filling {rec['filling']}"]
        if rec["kind"] == "braid-closure":
            bits.append(f"n={rec['n']}, exponent sum {rec['exponent_sum']}")
        else:
            bits.append(f"r/1 -> {rec['form']}")
        bits.append(f"citations {', '.join(rec['citations'])}")
        lines.append("; ".join(bits))
    return _render({"families": records}, "\n".join(lines), args.format)


def _cmd_family_eval(args: argparse.Namespace) -> str:
    raw = family_eval(args.name, args.surgery)
    ls, text = _lens_with_raw(raw, args.convention)
    record = {
        "name": args.name,
        "surgery": str(args.surgery),
        **_lens_record(raw),
        "normalized": _lens_record(ls),
        "convention": args.convention,
    }
    return _render(record, text, args.format)


def _cmd_surgery_formula(args: argparse.Namespace) -> str:
    raw = braid_surgery_lens(args.n, args.surgery, args.filling)
    fc = filling_coefficients(args.n, args.filling)
    ls, text = _lens_with_raw(raw, args.convention)
    record = {
        "n": args.n,
        "surgery": str(args.surgery),
        "filling": str(args.filling),
        **_lens_record(raw),
        "x": fc.x,
        "y": fc.y,
        "normalized": _lens_record(ls),
        "convention": args.convention,
    }
    table = "\n".join(
        [
            f"K({args.surgery}, {args.filling}) on {args.n} strands: {text}",
            f"coefficients: x = {fc.x}, y = {fc.y}",
        ]
    )
    return _render(record, table, args.format)


def _cmd_surgery_coeffs(args: argparse.Namespace) -> str:
    fc = filling_coefficients(args.n, args.filling)
    record = {"n": args.n, "filling": str(args.filling), "x": fc.x, "y": fc.y}
    return _render(record, f"x = {fc.x}, y = {fc.y}", args.format)


def _cmd_braid_check(args: argparse.Namespace) -> str:
    if (args.word is None) == (args.family is None):
        raise InvalidInputError("pass exactly one of a braid word or --family")
    if args.family is not None:
        fam = family_info(args.family)
        if not isinstance(fam, BraidFamily):
            raise InvalidInputError(f"family {args.family!r} carries no braid data")
        n, exponent_sum = fam.n, fam.exponent_sum
    else:
        letters = args.word
        least = max(abs(x) for x in letters) + 1
        n = args.strands if args.strands is not None else least
        if n < least:
            raise InvalidInputError(
                f"--strands {n} is too small: the word uses generator {least - 1}"
            )
        exponent_sum = sum(1 if x > 0 else -1 for x in letters)
    verdict = pseudo_anosov_candidate(n, exponent_sum)
    record = {"n": n, "exponent_sum": exponent_sum, "verdict": verdict}
    table = "\n".join(
        [f"strands: {n}", f"exponent sum: {exponent_sum}", f"verdict: {verdict}"]
    )
    return _render(record, table, args.format)


def _cmd_wu(args: argparse.Namespace) -> str:
    delta = slope_distance(args.surgery, args.degeneracy)
    guaranteed = wu_hyperbolic_guarantee(args.surgery, args.degeneracy)
    record = {
        "surgery": str(args.surgery),
        "degeneracy": str(args.degeneracy),
        "delta": delta,
        "guaranteed": guaranteed,
    }
    table = (
        f"delta({args.surgery}, {args.degeneracy}) = {delta}; "
        f"hyperbolic guaranteed: {'yes' if guaranteed else 'no (criterion is sufficient only)'}"
    )
    return _render(record, table, args.format)


def _cmd_distance_report(args: argparse.Namespace) -> str:
    a = normalize(_coprime_pair("p1", "q1", args.p1, args.q1), args.convention)
    b = normalize(_coprime_pair("p2", "q2", args.p2, args.q2), args.convention)
    rep = dh_bounds(a, b, args.convention)
    notes = [
        "restricting intermediate manifolds to lens spaces gives a quantity >= d_H "
        "whose well-definedness is an open problem; no value is claimed for it"
    ]
    if args.convention == ORIENTED and rep.d_value == 1 and is_homeomorphic(a, b, UNORIENTED):
        notes.append(
            "the two sides differ only by orientation; orientation-reversing examples "
            "with d_H = 1 are known, but no general rule is encoded"
        )
    record = {
        "a": _lens_record(a),
        "b": _lens_record(b),
        "d_value": rep.d_value,
        "dh_lower": rep.dh_lower,
        "dh_upper": rep.dh_upper,
        "status": rep.status,
        "evidence": [
            {"kind": ev.kind, "citation": ev.citation, "detail": ev.detail}
            for ev in rep.evidence
        ],
        "convention": rep.convention,
        "notes": notes,
    }
    lines = [
        f"pair: {a} vs {b} ({rep.convention})",
        f"d = {rep.d_value}",
        f"d_H bounds: [{rep.dh_lower}, {rep.dh_upper}]; status: {rep.status}",
    ]
    if rep.evidence:
        lines.append("evidence:")
        lines.extend(f"  - [{ev.citation}] {ev.kind}: {ev.detail}" for ev in rep.evidence)
    lines.append("notes:")
    lines.extend(f"  - {note}" for note in notes)
    return _render(record, "\n".join(lines), args.format)


def _witness_record(pair) -> dict:
    return {
        "source": _lens_record(pair.source),
        "target": _lens_record(pair.target),
        "parameters": list(pair.parameters),
        "grade": pair.grade,
    }


def _cmd_distance_witnesses(args: argparse.Namespace) -> str:
    a = normalize(_coprime_pair("p", "q", args.p, args.q), args.convention)
    pairs = enumerate_dh1_family(a, args.count, args.qprime_min)
    record = {
        "a": _lens_record(a),
        "count": args.count,
        "qprime_min": args.qprime_min,
        "convention": args.convention,
        "pairs": [_witness_record(w) for w in pairs],
    }
    lines = [f"family witnesses for {a} (q' >= {args.qprime_min}):"]
    for w in pairs:
        target_norm = normalize(w.target, args.convention)
        lines.append(
            f"  q' = {w.parameters[1]}: {w.source} ~ {a}  ->  "
            f"{w.target} = {target_norm}; grade {w.grade}"
        )
    return _render(record, "\n".join(lines), args.format)


def _cmd_distance_pair(args: argparse.Namespace) -> str:
    pair = berge_pair(args.p, args.qprime, args.degeneracy)
    source_norm = normalize(pair.source, args.convention)
    target_norm = normalize(pair.target, args.convention)
    record = {
        **_witness_record(pair),
        "gap": abs(pair.source.p - pair.target.p),
        "convention": args.convention,
    }
    table = "\n".join(
        [
            f"d = 1 pair for (p, q') = ({args.p}, {args.qprime}):",
            f"source: {pair.source} (normalized {source_norm})",
            f"target: {pair.target} (normalized {target_norm})",
            f"first-parameter gap: {abs(pair.source.p - pair.target.p)}",
            f"grade: {pair.grade}",
        ]
    )
    return _render(record, table, args.format)


# ---------------------------------------------------------------------------
# parser


def _add_common(sub: argparse.ArgumentParser, convention: bool = True) -> None:
    sub.add_argument("--format", choices=("table", "json"), default="table")
    if convention:
        sub.add_argument("--convention", choices=CONVENTIONS, default=UNORIENTED)


def _missing_action(parser: argparse.ArgumentParser):
    def handler(args: argparse.Namespace) -> str:
        raise _UsageError(f"missing subcommand\n{parser.format_usage().rstrip()}")

    return handler


def build_parser() -> _Parser:
    top = _Parser(prog="lensdist", description="Exact Dehn-surgery calculus on lens spaces")
    top.set_defaults(func=_missing_action(top))
    groups = top.add_subparsers(metavar="command")

    lens = groups.add_parser("lens", help="normalization and homeomorphism tests")
    lens.set_defaults(func=_missing_action(lens))
    lens_sub = lens.add_subparsers(metavar="action")
    sub = lens_sub.add_parser("normalize", help="canonical form of raw parameters")
    sub.add_argument("p", type=int)
    sub.add_argument("q", type=int)
    _add_common(sub)
    sub.set_defaults(func=_cmd_lens_normalize)
    sub = lens_sub.add_parser("homeo", help="compare two lens spaces")
    for name in ("p1", "q1", "p2", "q2"):
        sub.add_argument(name, type=int)
    _add_common(sub)
    sub.set_defaults(func=_cmd_lens_homeo)

    knot = groups.add_parser("knot", help="one-bridge knot invariants and pi1")
    knot.set_defaults(func=_missing_action(knot))
    knot_sub = knot.add_subparsers(metavar="action")
    sub = knot_sub.add_parser("invariants", help="psi, phi, phi_tilde, classification")
    for name in ("p", "q", "u"):
        sub.add_argument(name, type=int)
    _add_common(sub, convention=False)
    sub.set_defaults(func=_cmd_knot_invariants)
    sub = knot_sub.add_parser("pi1", help="surgered-manifold group and simplification")
    for name in ("p", "q", "u", "r"):
        sub.add_argument(name, type=int)
    sub.add_argument("--fuel", type=int, default=None)
    _add_common(sub, convention=False)
    sub.set_defaults(func=_cmd_knot_pi1)

    family = groups.add_parser("family", help="registered link families")
    family.set_defaults(func=_missing_action(family))
    family_sub = family.add_subparsers(metavar="action")
    sub = family_sub.add_parser("list", help="show the registry")
    _add_common(sub, convention=False)
    sub.set_defaults(func=_cmd_family_list)
    sub = family_sub.add_parser("eval", help="evaluate a family at a surgery slope")
    sub.add_argument("name")
    sub.add_argument("surgery", type=_slope_arg)
    _add_common(sub)
    sub.set_defaults(func=_cmd_family_eval)

    surgery = groups.add_parser("surgery", help="braid-closure surgery formula")
    surgery.set_defaults(func=_missing_action(surgery))
    surgery_sub = surgery.add_subparsers(metavar="action")
    sub = surgery_sub.add_parser("formula", help="lens space of K(p/q, r/s)")
    sub.add_argument("n", type=int)
    sub.add_argument("surgery", type=_slope_arg)
    sub.add_argument("filling", type=_slope_arg)
    _add_common(sub)
    sub.set_defaults(func=_cmd_surgery_formula)
    sub = surgery_sub.add_parser("coeffs", help="Bezout coefficients for a filling")
    sub.add_argument("n", type=int)
    sub.add_argument("filling", type=_slope_arg)
    _add_common(sub, convention=False)
    sub.set_defaults(func=_cmd_surgery_coeffs)

    braid = groups.add_parser("braid", help="braid-word utilities")
    braid.set_defaults(func=_missing_action(braid))
    braid_sub = braid.add_subparsers(metavar="action")
    sub = braid_sub.add_parser("check", help="pseudo-Anosov exponent-sum test")
    sub.add_argument("word", nargs="?", type=_braid_word_arg, default=None)
    sub.add_argument("--family", default=None)
    sub.add_argument("--strands", type=int, default=None)
    _add_common(sub, convention=False)
    sub.set_defaults(func=_cmd_braid_check)

    sub = groups.add_parser("wu", help="distance >= 3 hyperbolicity test")
    sub.add_argument("surgery", type=_slope_arg)
    sub.add_argument("degeneracy", type=_slope_arg)
    _add_common(sub, convention=False)
    sub.set_defaults(func=_cmd_wu)

    distance = groups.add_parser("distance", help="surgical-distance bounds")
    distance.set_defaults(func=_missing_action(distance))
    distance_sub = distance.add_subparsers(metavar="action")
    sub = distance_sub.add_parser("report", help="d and d_H bounds with evidence")
    for name in ("p1", "q1", "p2", "q2"):
        sub.add_argument(name, type=int)
    _add_common(sub)
    sub.set_defaults(func=_cmd_distance_report)
    sub = distance_sub.add_parser("witnesses", help="enumerate d = 1 family pairs")
    sub.add_argument("p", type=int)
    sub.add_argument("q", type=int)
    sub.add_argument("--count", type=int, default=3)
    sub.add_argument("--qprime-min", type=int, default=1)
    _add_common(sub)
    sub.set_defaults(func=_cmd_distance_witnesses)
    sub = distance_sub.add_parser("pair", help="the d = 1 pair for (p, q')")
    sub.add_argument("p", type=int)
    sub.add_argument("qprime", type=int)
    sub.add_argument("--degeneracy", type=_slope_arg, default=None)
    _add_common(sub)
    sub.set_defaults(func=_cmd_distance_pair)

    return top


def run(argv: list[str]) -> tuple[int, str]:
    """Parse and dispatch; returns (exit_code, output_text)."""
    parser = build_parser()
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(buf):
            args = parser.parse_args(argv)
    except _UsageError as err:
        return EXIT_USAGE, (buf.getvalue() + f"error: {err}").rstrip("\n")
    except SystemExit:
        # --help prints and exits inside argparse
        return EXIT_OK, buf.getvalue().rstrip("\n")
    try:
        return EXIT_OK, args.func(args)
    except (_UsageError, LensdistError) as err:
        return EXIT_USAGE, f"error: {err}"
    except Exception as err:
        return EXIT_INTERNAL, f"internal error: {type(err).__name__}: {err}"


def main(argv: list[str] | None = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text, file=sys.stdout if code == EXIT_OK else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point: ``quotient-closed <command> [options]``.

Exit codes: 0 success, 1 a mathematical counterexample, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import antimatroid, arquiver, grassmann, leftmost, preproj, repkit, sortable, suites
from .errors import QuotientClosedError, TheoremViolation
from .quiver import load_quiver
from .weyl import parse_word, weyl_group

_INDEX = re.compile(r"^(?:t(?:au)?\^?-?(\d+))?P(\d+)$")


def parse_missing(text: str) -> list[arquiver.PreprojIndex]:
    """``"P1 P2 t^-1P2"``, ``"1:0,2:1"`` or a JSON list of ``{"j", "k"}``."""
    text = text.strip()
    if not text:
        return []
    if text.startswith("["):
        return [arquiver.PreprojIndex(int(d["j"]), int(d["k"])) for d in json.loads(text)]
    out = []
    for tok in re.split(r"[\s,]+", text):
        if ":" in tok:
            j, k = tok.split(":")
            out.append(arquiver.PreprojIndex(int(j), int(k)))
            continue
        m = _INDEX.match(tok)
        if not m:
            raise ValueError(f"cannot parse module {tok!r}")
        out.append(arquiver.PreprojIndex(int(m.group(2)), int(m.group(1) or 0)))
    return out


def _root_keys(cat, roots):
    return [list(cat.root_of[idx]) for idx in cat.as_indices(roots)]


def cmd_w2cat(args) -> dict:
    q = load_quiver(args.quiver)
    w = weyl_group(q).evaluate(parse_word(args.word))
    positions = leftmost.leftmost_positions(w)
    spec = leftmost.SubcategorySpec(q, tuple(leftmost.positions_to_indices(q, positions)))
    report = {"w": list(w.reduced_word()), "length": w.length,
              "positions": list(positions), "missing": spec.to_json(),
              "labels": [m.label() for m in spec.missing]}
    if args.format == "dot":
        k_max = max([m.k for m in spec.missing], default=0) + 1
        table = arquiver.enumerate_preprojectives(q, max(k_max, 1) if not q.is_dynkin else args.kmax)
        report["dot"] = arquiver.emit_dot(table, spec)
    return report


def cmd_cat2w(args) -> dict:
    q = load_quiver(args.quiver)
    missing = sorted(parse_missing(args.missing), key=lambda m: (m.k, m.j))
    table = arquiver.enumerate_preprojectives(q, max([m.k for m in missing], default=0))
    present = {idx for idx, _ in table.rows}
    bad = [m.label() for m in missing if m not in present or m.j > q.n]
    if bad:
        raise ValueError(f"not indecomposable preprojective modules of {q}: {bad}")
    spec = leftmost.SubcategorySpec(q, tuple(missing))
    word = leftmost.word_from_missing(spec)
    w = weyl_group(q).evaluate(word)
    report = {"word": list(word), "reduced": w.length == len(word), "length": w.length}
    if q.is_dynkin:
        cat = repkit.catalogue(q, args.p, args.seed)
        s = repkit.complement(cat, missing)
        report["quotient_closed"] = repkit.is_quotient_closed(cat, s)
        report["matches_leftmost"] = leftmost.category_of(w).missing == spec.missing
    return report


def cmd_ideal(args) -> dict:
    q = load_quiver(args.quiver)
    pi = preproj.preprojective_algebra(q, args.p)
    cat = repkit.catalogue(q, args.p, args.seed)
    w = weyl_group(q).evaluate(parse_word(args.word))
    ideal = preproj.ideal_Iw(pi, w.reduced_word())
    return {"w": list(w.reduced_word()), "dim_Pi": pi.dim, "dim_Iw": ideal.dim,
            "C_of": _root_keys(cat, preproj.C_of(pi, w, cat)),
            "C_of_quotient": _root_keys(cat, preproj.C_of_quotient(pi, w, cat))}


def cmd_sorting(args) -> dict | list:
    q = load_quiver(args.quiver)
    g = weyl_group(q)
    targets = [g.evaluate(parse_word(args.word))] if args.word is not None else g.enumerate()

    def row(w):
        return {"w": list(w.reduced_word()), "c_sortable": sortable.is_c_sortable(w),
                "sort_c": list(sortable.sort_c(w).reduced_word()),
                "torsion": sortable.is_torsion_candidate(w)}

    rows = [row(w) for w in targets]
    return rows[0] if args.word is not None else rows


def cmd_table(args):
    q = load_quiver(args.quiver)
    table = arquiver.enumerate_preprojectives(q, args.kmax)
    if args.format == "dot":
        return arquiver.emit_dot(table)
    return table.to_json()


def cmd_verify(args) -> tuple[dict, int]:
    q = load_quiver(args.quiver)
    checks = suites.run_suite(q, args.suite, args.p, args.seed)
    passed = all(c["passed"] for c in checks)
    return ({"quiver": q.to_json(), "suite": args.suite, "p": args.p, "seed": args.seed,
             "passed": passed, "checks": checks}, 0 if passed else 1)


def cmd_verify_le(args) -> tuple[dict, int]:
    bad = grassmann.le_counterexamples(args.n, args.k, limit=10)
    return {"n": args.n, "k": args.k, "holds": not bad, "counterexamples": bad}, (1 if bad else 0)


def cmd_verify_antimatroid(args) -> tuple[dict, int]:
    q = load_quiver(args.quiver)
    word = parse_word(args.word) if args.word is not None else arquiver.ar_word_w0(q)
    if len(word) > 20:
        raise ValueError("word longer than the 20-letter cap")
    system = antimatroid.feasible_sets_from_word(q, word)
    acc = antimatroid.is_accessible(system)
    anti = antimatroid.antimatroid_violation(system)
    sup = antimatroid.supersolvable_violation(system)
    report = {"word": list(word), "feasible": len(system.feasible), "accessible": acc,
              "antimatroid": anti is None, "supersolvable": sup is None}
    if anti or sup:
        report["counterexample"] = anti or sup
    return report, 0


def _render(obj, fmt: str) -> str:
    if isinstance(obj, str):
        return obj
    if fmt == "dot" and isinstance(obj, dict) and "dot" in obj:
        return obj["dot"]
    if fmt == "text":
        return _text(obj)
    return json.dumps(obj, sort_keys=True)


def _text(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key in sorted(obj):
            val = obj[key]
            if isinstance(val, (dict, list)) and val and any(isinstance(x, (dict, list)) for x in
                                                          (val.values() if isinstance(val, dict) else val)):
                lines.append(f"{pad}{key}:")
                lines.append(_text(val, indent + 1))
            else:
                lines.append(f"{pad}{key}: {json.dumps(val, sort_keys=True)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_text(x, indent) if isinstance(x, (dict, list))
                         else f"{pad}- {x}" for x in obj)
    return f"{pad}{obj}"


def _prime(text: str) -> int:
    p = int(text)
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise argparse.ArgumentTypeError(f"{p} is not prime")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiver", default="A3", help="built-in name, JSON file or inline JSON")
    common.add_argument("--p", type=_prime, default=repkit.DEFAULT_P, help="field characteristic")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--kmax", type=int, default=50, help="tau^-k bound for non-Dynkin quivers")
    common.add_argument("--format", choices=("json", "dot", "text"), default="json")

    parser = argparse.ArgumentParser(prog="quotient-closed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("w2cat", parents=[common], help="element -> missing indecomposables")
    p.add_argument("--word", default="", help='e.g. "1 2 3 2" or "s1s2s3s2"')
    p.set_defaults(func=cmd_w2cat)

    p = sub.add_parser("cat2w", parents=[common], help="missing indecomposables -> word")
    p.add_argument("--missing", default="", help='e.g. "P1 P2 P3 t^-1P2" or "1:0,2:1"')
    p.set_defaults(func=cmd_cat2w)

    p = sub.add_parser("ideal", parents=[common], help="I_w and its categories")
    p.add_argument("--word", default="")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("sorting", parents=[common], help="c-sortability report")
    p.add_argument("--word", default=None, help="omit to report every element")
    p.set_defaults(func=cmd_sorting)

    p = sub.add_parser("table", parents=[common], help="preprojective dimension vectors")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=suites.SUITES + ("all",), default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-le", parents=[common], help="leftmost <=> no bad <= check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_verify_le)

    p = sub.add_parser("verify-antimatroid", parents=[common], help="antimatroid axioms for a word")
    p.add_argument("--word", default=None, help="defaults to the AR word of w0")
    p.set_defaults(func=cmd_verify_antimatroid)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except TheoremViolation as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    except (QuotientClosedError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(_render(result, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands:
    factorize    complete set of factorizations of a matrix into conjugates of U
    wj           well-jointed factorizations of a word
    wjs          the all-short subset of wj
    normalize    canonical form of a factorization, with a move witness
    orbit-check  bounded breadth-first orbit of a factorization under moves
    decompose    a matrix as a word in S and U
    pi           the class of a matrix in the modular group

Exit codes: 0 success (an empty result set is success), 1 syntax error in
an input, 2 semantic violation (determinant != 1, missing/negative factor
count, non-conjugate tuple entry, non-positive bounds).

Output is deterministic: JSON is emitted with sorted keys, and the
enumeration order never depends on HURWITZ_THREADS (which only caps the
worker pool; 0 means sequential).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .enumeration import (
    enumerate_matrix_factorizations,
    well_jointed_factorizations,
    well_jointed_short_factorizations,
)
from .moves import Factorization, from_words, normalize, orbit
from .sl2 import (
    MatrixSyntaxError,
    SL2Matrix,
    decompose_su,
    format_su,
    parse_matrix,
    project,
    su_product,
)
from .words import Word, WordSyntaxError, parse_word

EXIT_OK = 0
EXIT_SYNTAX = 1
EXIT_SEMANTIC = 2


class SemanticError(Exception):
    pass


def _parse_tuple(text: str) -> list:
    return [parse_word(part) for part in text.split(",")] if text else []


def _fac_json(fac: Factorization) -> list:
    return [str(w) for w in fac.words()]


def _require(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise SemanticError(f"missing required option for this command: {name}")
    return value


def _threads() -> int:
    raw = os.environ.get("HURWITZ_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        raise SemanticError(f"HURWITZ_THREADS must be an integer, got {raw!r}")
    if k < 0:
        raise SemanticError("HURWITZ_THREADS must be >= 0")
    return k


def cmd_factorize(args) -> dict:
    matrix = parse_matrix(_require(args, "matrix"))
    n = _require(args, "factors")
    if n < 0:
        raise SemanticError("factor count must be >= 0")
    found = enumerate_matrix_factorizations(matrix, n, threads=_threads())
    report = {
        "command": "factorize",
        "target": {"matrix": matrix.to_json(), "pi": str(found.pi_word)},
        "n": n,
        "factorizations": [[str(w) for w in r.words] for r in found.results],
        "lifts": [[m.to_json() for m in r.matrices] for r in found.results],
        "meta": {
            "wj_size": found.wj_size,
            "candidates": found.candidates,
            "branches": list(found.branches),
            "empty": not found.results,
        },
    }
    if not found.results:
        report["meta"]["explanation"] = (
            "no factorization of this matrix into exactly "
            f"{n} conjugates of U exists: every projective candidate "
            "lifted to the opposite sign or the family is empty at this size"
        )
    return report


def cmd_wj(args, short_only: bool = False) -> dict:
    word = parse_word(_require(args, "word"))
    fn = well_jointed_short_factorizations if short_only else well_jointed_factorizations
    facs = fn(word, threads=_threads())
    return {
        "command": "wjs" if short_only else "wj",
        "target": {"word": str(word)},
        "factorizations": [_fac_json(f) for f in facs],
        "meta": {"count": len(facs)},
    }


def cmd_normalize(args) -> dict:
    words = _parse_tuple(_require(args, "tuple"))
    try:
        fac = from_words(words)
    except ValueError as e:
        raise SemanticError(str(e))
    form = normalize(fac)
    return {
        "command": "normalize",
        "input": _fac_json(fac),
        "prefix": _fac_json(form.prefix),
        "pairs": form.pairs,
        "realized": _fac_json(form.realized()),
        "moves": [f"{kind}{i}" for kind, i in form.moves],
        "meta": {"move_count": len(form.moves)},
    }


def cmd_orbit_check(args) -> dict:
    words = _parse_tuple(_require(args, "tuple"))
    if args.max_len <= 0 or args.max_nodes <= 0:
        raise SemanticError("--max-len and --max-nodes must be positive")
    try:
        fac = from_words(words)
    except ValueError as e:
        raise SemanticError(str(e))
    states, truncated = orbit(fac, args.max_len, args.max_nodes)
    ordered = sorted(states, key=Factorization.sort_key)
    return {
        "command": "orbit-check",
        "input": _fac_json(fac),
        "orbit": [_fac_json(f) for f in ordered],
        "truncated": truncated,
        "meta": {"size": len(ordered)},
    }


def cmd_decompose(args) -> dict:
    matrix = parse_matrix(_require(args, "matrix"))
    word = decompose_su(matrix)
    product = su_product(word)
    return {
        "command": "decompose",
        "target": {"matrix": matrix.to_json()},
        "su_word": format_su(word),
        "check": {"product": product.to_json(), "equal": product == matrix},
    }


def cmd_pi(args) -> dict:
    matrix = parse_matrix(_require(args, "matrix"))
    return {
        "command": "pi",
        "target": {"matrix": matrix.to_json()},
        "word": str(project(matrix)),
    }


def _render_text(report: dict) -> str:
    lines = []
    cmd = report["command"]
    if cmd == "factorize":
        t = report["target"]
        m = t["matrix"]
        lines.append(f"matrix: {m[0][0]} {m[0][1]}; {m[1][0]} {m[1][1]}")
        lines.append(f"pi: {t['pi']}")
        lines.append(f"n: {report['n']}")
        lines.append(f"found: {len(report['factorizations'])}")
        for words, mats in zip(report["factorizations"], report["lifts"]):
            lines.append("  words: " + ",".join(words))
            for mm in mats:
                lines.append(f"    {mm[0][0]} {mm[0][1]}; {mm[1][0]} {mm[1][1]}")
        meta = report["meta"]
        lines.append(
            f"meta: wj_size={meta['wj_size']} candidates={meta['candidates']} "
            f"branches={','.join(meta['branches']) or '-'}"
        )
        if meta["empty"]:
            lines.append(f"note: {meta['explanation']}")
    elif cmd in ("wj", "wjs"):
        lines.append(f"word: {report['target']['word']}")
        lines.append(f"count: {report['meta']['count']}")
        for f in report["factorizations"]:
            lines.append("  (" + ",".join(f) + ")")
    elif cmd == "normalize":
        lines.append("input: " + ",".join(report["input"]))
        lines.append("prefix: " + (",".join(report["prefix"]) or "(empty)"))
        lines.append(f"pairs: {report['pairs']}")
        lines.append("realized: " + ",".join(report["realized"]))
        lines.append("moves: " + (" ".join(report["moves"]) or "(none)"))
    elif cmd == "orbit-check":
        lines.append("input: " + ",".join(report["input"]))
        lines.append(f"size: {report['meta']['size']}")
        lines.append(f"truncated: {str(report['truncated']).lower()}")
        for f in report["orbit"]:
            lines.append("  (" + ",".join(f) + ")")
    elif cmd == "decompose":
        m = report["target"]["matrix"]
        lines.append(f"matrix: {m[0][0]} {m[0][1]}; {m[1][0]} {m[1][1]}")
        lines.append(f"su_word: {report['su_word']}")
        p = report["check"]["product"]
        lines.append(f"check: {p[0][0]} {p[0][1]}; {p[1][0]} {p[1][1]}")
        lines.append(f"equal: {str(report['check']['equal']).lower()}")
    elif cmd == "pi":
        m = report["target"]["matrix"]
        lines.append(f"matrix: {m[0][0]} {m[0][1]}; {m[1][0]} {m[1][1]}")
        lines.append(f"word: {report['word']}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hurwitzfact",
        description="complete sets of Hurwitz representatives for "
        "factorizations of SL(2,Z) matrices into conjugates of U",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("factorize", "wj", "wjs", "normalize", "orbit-check", "decompose", "pi"):
        p = sub.add_parser(name)
        p.add_argument("-m", "--matrix", help='matrix as "a b; c d"')
        p.add_argument("-w", "--word", help="reduced word over w, b, B (identity: 1)")
        p.add_argument("-t", "--tuple", help="comma-separated words")
        p.add_argument("-n", "--factors", type=int, help="number of factors")
        p.add_argument("--max-len", type=int, default=9, help="orbit entry-length bound")
        p.add_argument("--max-nodes", type=int, default=100000, help="orbit node budget")
        p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


_HANDLERS = {
    "factorize": cmd_factorize,
    "wj": lambda a: cmd_wj(a, short_only=False),
    "wjs": lambda a: cmd_wj(a, short_only=True),
    "normalize": cmd_normalize,
    "orbit-check": cmd_orbit_check,
    "decompose": cmd_decompose,
    "pi": cmd_pi,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = _HANDLERS[args.command](args)
    except (WordSyntaxError, MatrixSyntaxError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SYNTAX
    except (SemanticError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEMANTIC
    if args.format == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write(_render_text(report))
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())

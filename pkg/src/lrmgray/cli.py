"""Command line: build, check, rank, and simulate the codes.

Code files come in two equivalent shapes.  Text is '#'-prefixed key=value
header lines followed by one codeword per line (index 0 leftmost), which
diffs well and makes good golden files.  JSON is a single object with
keys n, w, cyclic, single_track, size, efficiency {num, den}, words, and
transitions.  Every command is deterministic; exit codes are stable:
0 success, 1 verification failure, 2 infeasible or unsupported parameters.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, TextIO

from .chargesim import traverse
from .colors import (
    color_count_formula,
    color_counts_bruteforce,
    color_imbalance,
    optimal_cyclic_feasible,
)
from .oracle import longest_code, reverify
from .weight2 import build_weight2
from .weight3 import build_weight3
from .words import (
    GrayCode,
    Word,
    efficiency,
    is_single_track,
    next_word,
    transition_index,
    validate_code,
)


class CodeFileError(ValueError):
    """The given file does not describe a well-formed code."""


def _recomputed_transitions(words: tuple[Word, ...], cyclic: bool) -> tuple[int, ...]:
    count = len(words)
    hops = count if cyclic else max(count - 1, 0)
    out = []
    for i in range(hops):
        j = transition_index(words[i], words[(i + 1) % count])
        if j is None:
            raise CodeFileError(f"rows {i} and {(i + 1) % count} are not one transition apart")
        out.append(j)
    return tuple(out)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as handle:
        return handle.read()


def load_code(path: str) -> tuple[GrayCode, dict[str, str]]:
    """Parse a text or JSON code file; returns the code and header metadata."""
    text = _read_source(path)
    if text.lstrip().startswith("{"):
        return _parse_json(text)
    return _parse_text(text)


def _parse_json(text: str) -> tuple[GrayCode, dict[str, str]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"bad JSON: {exc}") from None
    try:
        n = int(data["n"])
        cyclic = bool(data["cyclic"])
        words = tuple(Word.parse(s) for s in data["words"])
    except (KeyError, TypeError, ValueError) as exc:
        raise CodeFileError(f"bad code object: {exc}") from None
    if any(word.n != n for word in words):
        raise CodeFileError("codeword length disagrees with n")
    transitions = tuple(int(j) for j in data.get("transitions") or ())
    if not transitions and words:
        transitions = _recomputed_transitions(words, cyclic)
    w = data.get("w")
    meta = {
        "n": str(n),
        "cyclic": "true" if cyclic else "false",
    }
    for key in ("w", "single_track", "construction"):
        if data.get(key) is not None:
            value = data[key]
            meta[key] = ("true" if value else "false") if isinstance(value, bool) else str(value)
    code = GrayCode(
        n=n,
        w=int(w) if w is not None else None,
        words=words,
        transitions=transitions,
        cyclic=cyclic,
    )
    return code, meta


def _parse_text(text: str) -> tuple[GrayCode, dict[str, str]]:
    meta: dict[str, str] = {}
    body: list[str] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            entry = line.lstrip("#").strip()
            key, sep, value = entry.partition("=")
            if sep:
                meta[key.strip()] = value.strip()
            continue
        body.append(line)
    if not body:
        raise CodeFileError("no codewords in file")
    try:
        words = tuple(Word.parse(line) for line in body)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from None
    n = int(meta["n"]) if "n" in meta else words[0].n
    if any(word.n != n for word in words):
        raise CodeFileError("codeword length disagrees with n")
    cyclic = meta.get("cyclic", "false").lower() == "true"
    if "w" in meta:
        w: int | None = int(meta["w"])
    else:
        weights = {word.weight for word in words}
        w = weights.pop() if len(weights) == 1 else None
    transitions = _recomputed_transitions(words, cyclic)
    code = GrayCode(n=n, w=w, words=words, transitions=transitions, cyclic=cyclic)
    return code, meta


def _code_payload(code: GrayCode, construction: str | None = None) -> dict[str, Any]:
    eff = efficiency(code)
    payload: dict[str, Any] = {
        "n": code.n,
        "w": code.w,
        "cyclic": code.cyclic,
        "single_track": is_single_track(code),
        "size": code.size,
        "efficiency": {"num": eff.numerator, "den": eff.denominator},
        "words": [str(word) for word in code.words],
        "transitions": list(code.transitions),
    }
    if construction is not None:
        payload["construction"] = construction
    return payload


def write_code(code: GrayCode, fmt: str, out: TextIO, construction: str | None = None) -> None:
    payload = _code_payload(code, construction)
    if fmt == "json":
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    eff = efficiency(code)
    out.write(f"# n={code.n}\n")
    out.write(f"# w={code.w}\n")
    out.write(f"# cyclic={'true' if code.cyclic else 'false'}\n")
    out.write(f"# single_track={'true' if payload['single_track'] else 'false'}\n")
    if construction is not None:
        out.write(f"# construction={construction}\n")
    out.write(f"# size={code.size}\n")
    out.write(f"# efficiency={eff.numerator}/{eff.denominator}\n")
    out.write(f"# efficiency_decimal={float(eff):.6f}\n")
    for word in code.words:
        out.write(f"{word}\n")


def _cmd_generate(args: argparse.Namespace) -> int:
    construction = args.construction
    if construction == "auto":
        if args.w == 2:
            construction = "c1"
        elif args.w == 3:
            construction = "c2"
        else:
            print(f"no construction for weight {args.w}; supported weights are 2 and 3", file=sys.stderr)
            return 2
    try:
        if construction == "c1":
            if args.w != 2:
                raise ValueError(f"construction c1 builds weight-2 codes, not w={args.w}")
            code = build_weight2(args.n)
        else:
            if args.w != 3:
                raise ValueError(f"construction c2 builds weight-3 codes, not w={args.w}")
            code = build_weight3(args.n)
    except ValueError as exc:
        print(f"cannot build: {exc}", file=sys.stderr)
        return 2
    write_code(code, args.format, sys.stdout, construction)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        code, meta = load_code(args.file)
    except (OSError, CodeFileError) as exc:
        print(f"cannot read code: {exc}", file=sys.stderr)
        return 1
    expect_cyclic = args.cyclic or meta.get("cyclic", "").lower() == "true"
    expect_cw = args.constant_weight or code.w is not None
    expect_single = args.single_track or meta.get("single_track", "").lower() == "true"

    report = validate_code(code, expect_constant_weight=expect_cw, expect_cyclic=expect_cyclic)
    recheck = reverify(code)
    ok = report.ok and recheck.ok
    print(f"validate: {'ok' if report.ok else 'FAILED'}")
    for pos, reason in report.failures:
        print(f"  at {pos}: {reason}")
    print(f"recheck: {'ok' if recheck.ok else 'FAILED'}")
    for pos, reason in recheck.failures:
        print(f"  at {pos}: {reason}")
    if expect_single:
        fast = is_single_track(code)
        slow = bool(recheck.details.get("single_track")) if recheck.ok else False
        print(f"single_track: {'true' if fast and slow else 'false'}")
        ok = ok and fast and slow
    return 0 if ok else 1


def _cmd_feasible(args: argparse.Namespace) -> int:
    verdict = optimal_cyclic_feasible(args.n, args.w)
    print(f"n={args.n} w={args.w}: {verdict.status.replace('_', ' ')}")
    for tag, detail in verdict.reasons:
        print(f"- {tag}: {detail}")
        if tag == "color-balance":
            print(f"  color imbalance (count 0 minus count 1): {color_imbalance(args.n, args.w)}")
    return 0 if verdict.status == "possible" else 2


def _cmd_colors(args: argparse.Namespace) -> int:
    n, w = args.n, args.w
    print(f"# n={n} w={w} mode={args.mode}")
    if args.mode == "formula":
        for a in range(n):
            print(f"{a} {color_count_formula(n, w, a)}")
        return 0
    if args.mode == "brute":
        hist = color_counts_bruteforce(n, w)
        for a, count in enumerate(hist.counts):
            print(f"{a} {count}")
        return 0
    hist = color_counts_bruteforce(n, w)
    mismatches = 0
    for a in range(n):
        formula = color_count_formula(n, w, a)
        brute = hist.counts[a]
        marker = "" if formula == brute else "  MISMATCH"
        print(f"{a} {formula} {brute}{marker}")
        mismatches += formula != brute
    print(f"# {'match' if not mismatches else f'{mismatches} mismatches'}")
    return 0 if not mismatches else 1


def _cmd_simulate(args: argparse.Namespace) -> int:
    try:
        code, _ = load_code(args.file)
    except (OSError, CodeFileError) as exc:
        print(f"cannot read code: {exc}", file=sys.stderr)
        return 1
    try:
        stats = traverse(code, laps=args.laps)
    except (ValueError, AssertionError) as exc:
        print(f"traversal failed: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        print(
            json.dumps(
                {
                    "steps": stats.steps,
                    "max_jump": stats.max_jump,
                    "max_level": stats.max_level,
                    "jump_bound": stats.jump_bound,
                    "diff_multiset_preserved": stats.diff_multiset_preserved,
                },
                indent=2,
            )
        )
    else:
        print(f"steps={stats.steps}")
        print(f"max_jump={stats.max_jump}")
        print(f"max_level={stats.max_level}")
        print(f"jump_bound={stats.jump_bound}")
        print(f"diff_multiset_preserved={'true' if stats.diff_multiset_preserved else 'false'}")
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    result = longest_code(
        args.n,
        args.w,
        cyclic=args.cyclic,
        budget=args.budget,
        color_pruning=not args.no_color_pruning,
    )
    print(f"n={result.n} w={result.w} cyclic={'true' if result.cyclic else 'false'}")
    print(f"best_length={result.best_length}")
    print(f"exhausted={'true' if result.exhausted else 'false'}")
    print(f"nodes_expanded={result.nodes_expanded}")
    print(f"budget={result.budget}")
    if args.witness:
        if result.witness is None:
            print("witness=none")
        else:
            with open(args.witness, "w", encoding="ascii") as handle:
                write_code(result.witness, "text", handle)
            print(f"witness={args.witness}")
    return 0


def _cmd_next(args: argparse.Namespace) -> int:
    try:
        code, _ = load_code(args.file)
        v = Word.parse(args.word)
    except (OSError, CodeFileError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        print(next_word(code, v))
    except (KeyError, ValueError) as exc:
        message = exc.args[0] if exc.args else str(exc)
        print(f"error: {message}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lrmgray",
        description="Constant-weight Gray codes over sliding-window rank demodulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="build a code and print it")
    p.add_argument("n", type=int)
    p.add_argument("w", type=int)
    p.add_argument("--construction", choices=("auto", "c1", "c2"), default="auto")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("verify", help="check a code file ('-' reads stdin)")
    p.add_argument("file")
    p.add_argument("--cyclic", action="store_true", help="require cyclic closure")
    p.add_argument("--single-track", action="store_true", dest="single_track")
    p.add_argument("--constant-weight", action="store_true", dest="constant_weight")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("feasible", help="screen (n, w) for a full cyclic code")
    p.add_argument("n", type=int)
    p.add_argument("w", type=int)
    p.set_defaults(func=_cmd_feasible)

    p = sub.add_parser("colors", help="codewords per color class")
    p.add_argument("n", type=int)
    p.add_argument("w", type=int)
    p.add_argument("--mode", choices=("formula", "brute", "both"), default="both")
    p.set_defaults(func=_cmd_colors)

    p = sub.add_parser("simulate", help="drive a code on integer charge levels")
    p.add_argument("file")
    p.add_argument("--laps", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("search", help="exhaustive longest-code search (small n)")
    p.add_argument("n", type=int)
    p.add_argument("w", type=int)
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--no-color-pruning", action="store_true", dest="no_color_pruning")
    p.add_argument("--witness", metavar="PATH", help="write the best code found here")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("next", help="successor of a codeword within a code file")
    p.add_argument("file")
    p.add_argument("word")
    p.set_defaults(func=_cmd_next)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())

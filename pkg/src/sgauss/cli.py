"""Command-line front end.

Every subcommand reads one paragraph from a positional file path or stdin
("-" or omitted) and writes text, or JSON with --json.  Exit status: 0 on
success, 1 on a domain error (invalid input, failed precondition, failed
verification), 2 on usage errors.  Set GAUSS_COLOR=0 to disable ANSI
styling of diagnostics.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .homology import pairing, profile
from .model import (
    GaussError,
    OperationError,
    canonicalize,
    is_isomorphic,
    parse_paragraph,
    paragraph_dict,
    render,
)
from .surface import build_ribbon, edge_token, summarize, trace_circles
from .transforms import join, reduce_to_word, split
from .verify import (
    KIND_PARAGRAPHS,
    KIND_WORDS,
    CorpusSpec,
    verify,
)

__all__ = ["main"]


def _color_enabled(stream) -> bool:
    if os.environ.get("GAUSS_COLOR", "") == "0":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


def _error(e: GaussError) -> int:
    kind = getattr(e, "kind", None)
    text = f"error: {e}" + (f" [{kind}]" if kind else "")
    if _color_enabled(sys.stderr):
        text = f"\x1b[31m{text}\x1b[0m"
    print(text, file=sys.stderr)
    return 1


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as f:
        return f.read()


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _single_word(p):
    if len(p.words) != 1:
        raise OperationError(
            f"expected a single-word paragraph, got {len(p.words)} words"
        )
    return p.words[0]


def _cmd_validate(args) -> int:
    p = parse_paragraph(_read(args.file), pairwise=args.pairwise)
    if args.json:
        _emit({"valid": True, "words": len(p.words), "symbols": p.n})
    else:
        print(f"valid: words={len(p.words)} symbols={p.n}")
    return 0


def _cmd_canon(args) -> int:
    c = canonicalize(parse_paragraph(_read(args.file)))
    _emit(paragraph_dict(c)) if args.json else print(render(c))
    return 0


def _cmd_iso(args) -> int:
    if args.file == "-" and args.other == "-":
        print("error: only one input may come from stdin", file=sys.stderr)
        return 2
    p = parse_paragraph(_read(args.file))
    q = parse_paragraph(_read(args.other))
    verdict = is_isomorphic(p, q)
    if args.json:
        _emit({"isomorphic": verdict})
    else:
        print("isomorphic" if verdict else "not isomorphic")
    return 0


def _cmd_summary(args) -> int:
    s = summarize(parse_paragraph(_read(args.file)))
    if args.json:
        _emit(s.as_dict())
    else:
        print(
            f"n={s.n} b={s.b} genus={s.genus} "
            f"geometric={str(s.geometric).lower()}"
        )
    return 0


def _cmd_circles(args) -> int:
    p = parse_paragraph(_read(args.file))
    r = build_ribbon(p)
    circles = trace_circles(r)
    if args.json:
        _emit(
            {
                "n": p.n,
                "edges": 2 * p.n,
                "b": len(circles),
                "circles": [
                    {
                        "darts": list(c.signed_ids()),
                        "edges": [edge_token(d, r) for d in c.darts],
                    }
                    for c in circles
                ],
            }
        )
    else:
        print(f"n={p.n} b={len(circles)}")
        for i, c in enumerate(circles, start=1):
            ids = " ".join(f"{d:+d}" for d in c.signed_ids())
            edges = " ".join(edge_token(d, r) for d in c.darts)
            print(f"circle {i}: {ids} | {edges}")
    return 0


def _cmd_profile(args) -> int:
    w = _single_word(parse_paragraph(_read(args.file)))
    pr = profile(w)
    if args.json:
        _emit(pr.as_dict())
    else:
        d = pr.as_dict()
        print("alpha: " + " ".join(f"{s}={v}" for s, v in d["alpha"].items()))
        print("beta:" + "".join(f" {i},{j}={v}" for i, j, v in d["beta"]))
        print(f"planar: {str(d['planar']).lower()}")
    return 0


def _cmd_pairing(args) -> int:
    value = pairing(parse_paragraph(_read(args.file)))
    _emit({"pairing": value}) if args.json else print(f"pairing={value}")
    return 0


def _cmd_split(args) -> int:
    result = split(_single_word(parse_paragraph(_read(args.file))), args.at)
    _emit(paragraph_dict(result)) if args.json else print(render(result))
    return 0


def _cmd_join(args) -> int:
    p = parse_paragraph(_read(args.file))
    pos, neg = p.occurrences(args.shared)
    if pos.word == neg.word:
        raise OperationError(
            f"symbol {args.shared!r} occurs twice in one component; nothing to join"
        )
    result = join(p, pos.word, neg.word, args.shared, args.fresh)
    _emit(paragraph_dict(result)) if args.json else print(render(result))
    return 0


def _cmd_reduce(args) -> int:
    w = reduce_to_word(parse_paragraph(_read(args.file)), args.prefix)
    p = w.as_paragraph()
    _emit(paragraph_dict(p)) if args.json else print(render(p))
    return 0


def _cmd_verify(args) -> int:
    words_report = verify(CorpusSpec(args.max_n, dedupe=args.dedupe, kind=KIND_WORDS))
    par_report = None
    if args.max_n > 1:
        par_report = verify(
            CorpusSpec(args.max_n - 1, dedupe=args.dedupe, kind=KIND_PARAGRAPHS)
        )
    ok = words_report.ok and (par_report is None or par_report.ok)
    if args.json:
        _emit(
            {
                "words": words_report.as_dict(),
                "paragraphs": par_report.as_dict() if par_report else None,
                "ok": ok,
            }
        )
    else:
        print(words_report.to_text())
        if par_report is not None:
            print()
            print(par_report.to_text())
        print()
        print(f"verify: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sgauss",
        description="Realizability of signed Gauss words and paragraphs: "
        "Carter circles, minimal genus, planarity, split/join transforms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, *, reads_file=True):
        sp = sub.add_parser(name, help=help)
        if reads_file:
            sp.add_argument(
                "file",
                nargs="?",
                default="-",
                help="paragraph file, or - for stdin (default)",
            )
        sp.add_argument("--json", action="store_true", help="JSON output")
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", _cmd_validate, "parse and validate a paragraph")
    sp.add_argument(
        "--pairwise",
        action="store_true",
        help="additionally require every pair of words to share a symbol",
    )
    add("canon", _cmd_canon, "canonical representative of the isomorphism class")
    sp = add("iso", _cmd_iso, "decide whether two paragraphs are isomorphic")
    sp.add_argument("other", help="second paragraph file, or - for stdin")
    add("summary", _cmd_summary, "crossing count, Carter circles, genus")
    add("circles", _cmd_circles, "list the Carter circles")
    add("profile", _cmd_profile, "alpha/beta intersection profile of a word")
    add("pairing", _cmd_pairing, "intersection pairing of a 2-component paragraph")
    sp = add("split", _cmd_split, "split a word at a crossing")
    sp.add_argument("--at", required=True, metavar="SYM", help="crossing to split at")
    sp = add("join", _cmd_join, "join the two components sharing a crossing")
    sp.add_argument("--shared", required=True, metavar="SYM")
    sp.add_argument("--fresh", required=True, metavar="SYM")
    sp = add("reduce", _cmd_reduce, "join components until a single word remains")
    sp.add_argument("--prefix", default="j", help="fresh-symbol prefix (default: j)")
    sp = add("verify", _cmd_verify, "exhaustive consistency checks", reads_file=False)
    sp.add_argument(
        "--max-n",
        type=int,
        default=4,
        metavar="K",
        help="word corpus bound (paragraphs use K-1; default 4)",
    )
    sp.add_argument("--dedupe", action="store_true", help="one word per isomorphism class")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except GaussError as e:
        return _error(e)
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

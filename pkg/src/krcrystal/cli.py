"""``krc``: command-line access to the library.

Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Optional, Sequence

from . import polytope, tableau
from .core import DecodeError, ParamError, Params, decode_element, encode_element
from .iso import build_graph, image_of, param_range, to_dot, to_json, verify_suite
from .pathstats import stat_bundle
from .words import WordError, WordSyntaxError, apply_word, parse_word, render_word
from .words import word_full_path, word_P_small_i, word_Q_large_i


class DomainError(Exception):
    pass


def _params(args) -> Params:
    missing = [k for k in ("n", "i", "m") if getattr(args, k) is None]
    if missing:
        raise DomainError("missing parameter(s): " + ", ".join("--" + k for k in missing))
    return Params(args.n, args.i, args.m)


def _element_text(text: str, p: Params, model: str) -> str:
    """Normalise FILE, inline JSON, nested list, or a flat tuple '(0,1)'."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("{"):
        return text
    if text.startswith("[["):
        return json.dumps({"model": model, "rows": json.loads(text)})
    if re.fullmatch(r"\(\s*\d+(\s*,\s*\d+)*\s*,?\s*\)", text):
        flat = [int(v) for v in re.findall(r"\d+", text)]
        width = p.i if model == "polytope" else p.m
        if width == 0 or len(flat) % width:
            raise DecodeError(f"flat element has {len(flat)} entries, not a multiple of {width}")
        rows = [flat[k:k + width] for k in range(0, len(flat), width)]
        return json.dumps({"model": model, "rows": rows})
    raise DecodeError("element must be a file, a JSON object, a nested list or '(a,b,...)'")


def _element(args, p: Params, model: Optional[str] = None):
    if args.element is None:
        raise DomainError("--element is required")
    return decode_element(_element_text(args.element, p, model or args.model), p)


def _emit(args, lines):
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for line in lines:
            out.write(line)
            out.write("\n")
    finally:
        if args.out:
            out.close()


def cmd_enumerate(args):
    p = _params(args)
    source = polytope.enumerate_points(p) if args.model == "polytope" else tableau.enumerate_tableaux(p)
    _emit(args, (encode_element(x) for x in source))


def cmd_apply(args):
    p = _params(args)
    if args.word is None:
        raise DomainError("--word is required")
    x = _element(args, p)
    _emit(args, [encode_element(apply_word(parse_word(args.word), x))])


def cmd_stats(args):
    p = _params(args)
    a = _element(args, p, "polytope")
    if a.model != "polytope":
        raise DomainError("stats are defined for polytope points only")
    if args.column is None:
        raise DomainError("--column is required")
    try:
        bundle = stat_bundle(a, args.column)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit(args, [json.dumps(bundle.as_json(), separators=(",", ":"))])


def cmd_path(args):
    p = _params(args)
    a = _element(args, p, "polytope")
    if a.model != "polytope":
        raise DomainError("path words start from a polytope point")
    build = {"full": word_full_path, "P": word_P_small_i, "Q": word_Q_large_i}[args.method]
    try:
        word = build(a)
    except ValueError as exc:
        raise DomainError(str(exc)) from None
    _emit(args, [render_word(word)])


def cmd_iso(args):
    p = _params(args)
    a = _element(args, p, "polytope")
    if a.model != "polytope":
        raise DomainError("iso maps polytope points to tableaux")
    _emit(args, [encode_element(image_of(a))])


def cmd_graph(args):
    p = _params(args)
    g = build_graph(p, args.model, include_affine=args.affine)
    _emit(args, to_dot(g) if args.format == "dot" else to_json(g))


def cmd_verify(args):
    report = verify_suite(param_range(args.n_max, args.m_max))
    _emit(args, [r.line() for r in report] + [
        f"{sum(r.passed for r in report)}/{len(report)} checks passed"
    ])
    return 0 if all(r.passed for r in report) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int)
    common.add_argument("--i", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--model", choices=("tableau", "polytope"), default="polytope")
    common.add_argument("--format", choices=("json", "dot"), default="json")
    common.add_argument("--affine", action="store_true", help="include 0-arrows")
    common.add_argument("--element", help="FILE or inline element")
    common.add_argument("--word", help="operator word, rightmost factor first")
    common.add_argument("--out", help="write output to FILE")

    parser = argparse.ArgumentParser(prog="krc", description="Kirillov-Reshetikhin crystals of type A_n^(1)")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="list all elements, one JSON per line")
    sub.add_parser("apply", parents=[common], help="apply an operator word to an element")
    st = sub.add_parser("stats", parents=[common], help="step-path statistics of a polytope point")
    st.add_argument("--column", type=int)
    pa = sub.add_parser("path", parents=[common], help="word reaching a point from the highest weight")
    pa.add_argument("--method", choices=("full", "P", "Q"), default="full")
    sub.add_parser("iso", parents=[common], help="image of a polytope point as a tableau")
    sub.add_parser("graph", parents=[common], help="export the crystal graph")
    ve = sub.add_parser("verify", parents=[common], help="run the verification suite")
    ve.add_argument("--n-max", type=int, default=3)
    ve.add_argument("--m-max", type=int, default=2)
    return parser


COMMANDS = {
    "enumerate": cmd_enumerate,
    "apply": cmd_apply,
    "stats": cmd_stats,
    "path": cmd_path,
    "iso": cmd_iso,
    "graph": cmd_graph,
    "verify": cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args) or 0
    except (DomainError, ParamError, DecodeError, WordError, WordSyntaxError) as exc:
        print(f"krc {args.command}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

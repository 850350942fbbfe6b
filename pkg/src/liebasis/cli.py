"""``liebasis`` command line.

Exit codes: 0 success, 1 domain failure (word does not partition, verification
failed, ...), 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import LieBasisError, NotPartitionable, ParseError
from .graphs import LabeledDigraph, star_graph, to_dot
from .lie import LieCombo, LieExpr, expr_from_json, expr_to_json, left_greedy_bracket, parse_combo, parse_expr, standard_bracket
from .pairing import EVALUATORS, pair
from .partition import format_tree, full_partition, levels, tree_to_json
from .projection import project, project_combo, verify_basis
from .words import Alphabet, Content, enumerate_lyndon_by_content, enumerate_lyndon_by_length

ENV_ALPHABET = "LIEBASIS_ALPHABET"


def _alphabet(args: argparse.Namespace, letters: str = "", fallback: str | None = None) -> Alphabet:
    """Explicit flag, then the environment, then codepoint order of ``letters``."""
    spec = args.alphabet or os.environ.get(ENV_ALPHABET)
    if spec:
        try:
            alpha = Alphabet(spec)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc
        missing = sorted(set(letters) - set(alpha.letters))
        if missing:
            raise ParseError(f"letters {''.join(missing)!r} are not in alphabet {alpha.letters!r}")
        return alpha
    if letters:
        return Alphabet.default(letters)
    return Alphabet(fallback or "ab")


def _emit(args: argparse.Namespace, data) -> None:
    print(json.dumps(data, indent=2))


def _read_expr(args: argparse.Namespace, text: str | None) -> LieExpr:
    if args.json_expr is not None:
        raw = args.json_expr
        path = Path(raw)
        if path.is_file():
            raw = path.read_text()
        try:
            return expr_from_json(json.loads(raw))
        except json.JSONDecodeError as exc:
            raise ParseError(f"--json-expr is not valid JSON: {exc}") from exc
    if text is None:
        raise ParseError("missing expression")
    return parse_expr(text)


def cmd_lyndon(args: argparse.Namespace) -> int:
    if args.content is not None:
        content = Content.parse(args.content)
        words = enumerate_lyndon_by_content(content, _alphabet(args, content.letters))
    else:
        if args.length < 1:
            raise ParseError("--length must be positive")
        words = enumerate_lyndon_by_length(_alphabet(args), args.length)
    if args.format == "json":
        _emit(args, {"format": 1, "words": words})
    else:
        for w in words:
            print(w)
    return 0


def cmd_partition(args: argparse.Namespace) -> int:
    try:
        t = full_partition(args.word)
    except NotPartitionable as exc:
        stage = getattr(exc, "stage", 1)
        blocks = "".join(exc.blocks)
        print(f"{args.word}: does not fully partition: {exc.reason} (stage {stage}: {blocks})", file=sys.stderr)
        return 1
    if args.format == "json":
        _emit(args, {"format": 1, "word": args.word, "tree": tree_to_json(t), "levels": levels(t)})
    else:
        print(format_tree(t))
    return 0


def cmd_bracket(args: argparse.Namespace) -> int:
    if args.style == "standard":
        e = standard_bracket(args.word, _alphabet(args, args.word))
    else:
        e = left_greedy_bracket(args.word)
    if args.format == "json":
        _emit(args, {"format": 1, "word": args.word, "style": args.style, "expr": expr_to_json(e)})
    else:
        print(e)
    return 0


def cmd_star(args: argparse.Namespace) -> int:
    g = star_graph(args.word)
    if args.format == "dot":
        sys.stdout.write(to_dot(g))
    else:
        _emit(args, g.to_json())
    return 0


def cmd_pair(args: argparse.Namespace) -> int:
    rest = list(args.args)
    if args.star is not None:
        g = star_graph(args.star)
    else:
        if not rest:
            raise ParseError("give a graph JSON file or --star WORD")
        path = rest.pop(0)
        try:
            g = LabeledDigraph.from_json(Path(path).read_text())
        except (OSError, json.JSONDecodeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"cannot read graph {path!r}: {exc}") from exc
    if len(rest) > 1:
        raise ParseError("too many arguments")
    e = _read_expr(args, rest[0] if rest else None)
    print(pair(g, e, args.evaluator))
    return 0


def cmd_project(args: argparse.Namespace) -> int:
    combo = None
    if args.json_expr is None and args.expr is not None:
        try:
            combo = LieCombo.single(parse_expr(args.expr))
        except ParseError:
            combo = parse_combo(args.expr)
    else:
        combo = LieCombo.single(_read_expr(args, args.expr))
    alpha = _alphabet(args, "".join(e.letters for e, _ in combo))
    if len(combo) == 1 and next(iter(combo))[1] == 1:
        expansion = project(next(iter(combo))[0], args.evaluator, alpha)
    else:
        expansion = project_combo(combo, args.evaluator, alpha)
    if args.format == "json":
        _emit(args, expansion.to_json())
    elif args.words:
        print(expansion.words_text())
    else:
        print(expansion)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    alpha = _alphabet(args)
    report = verify_basis(alpha, args.max_degree, args.evaluator)
    if args.format == "json":
        print(report.dumps())
    else:
        print(report.table())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", help=f"letter order, e.g. 'abc' (default: ${ENV_ALPHABET} or codepoint order)")
    evaluator = argparse.ArgumentParser(add_help=False)
    evaluator.add_argument("--evaluator", choices=EVALUATORS, default="recursive")
    json_expr = argparse.ArgumentParser(add_help=False)
    json_expr.add_argument("--json-expr", metavar="JSON", help="expression as JSON text or file: letters and [left, right] lists")

    p = argparse.ArgumentParser(prog="liebasis", description="Left-greedy Lyndon basis tools for free Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lyndon", parents=[common], help="enumerate Lyndon-Shirshov words")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--length", type=int)
    g.add_argument("--content", help="multiset such as a:3,b:3")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_lyndon)

    s = sub.add_parser("partition", parents=[common], help="full partition of a word")
    s.add_argument("word")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("bracket", parents=[common], help="left-greedy or standard bracketing")
    s.add_argument("word")
    s.add_argument("--style", choices=["leftgreedy", "standard"], default="leftgreedy")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_bracket)

    s = sub.add_parser("star", parents=[common], help="star graph of a word")
    s.add_argument("word")
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.set_defaults(func=cmd_star)

    s = sub.add_parser("pair", parents=[common, evaluator, json_expr], help="configuration pairing")
    s.add_argument("--star", metavar="WORD", help="pair against the star graph of WORD")
    s.add_argument("args", nargs="*", metavar="GRAPH.json EXPR")
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("project", parents=[common, evaluator, json_expr], help="expand in the left-greedy basis")
    s.add_argument("expr", nargs="?", help="bracket expression, or a signed sum like '+1*[a,b] +1*[b,a]'")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.add_argument("--words", action="store_true", help="index terms by Lyndon word instead of bracket")
    s.set_defaults(func=cmd_project)

    s = sub.add_parser("verify", parents=[common], help="diagonality and Witt-count report")
    # verification cross-checks the cut recursion against the bijection sum by default
    s.add_argument("--evaluator", choices=EVALUATORS, default="checked")
    s.add_argument("--max-degree", type=int, default=None)
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"liebasis {args.command}: {exc}", file=sys.stderr)
        return 2
    except LieBasisError as exc:
        print(f"liebasis {args.command}: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"liebasis {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command line interface.

    netgames normalize -e "vertex # vertex ; cup"
    netgames eq -e "swap(1,1) ; cup" -e "cup"
    netgames nash --graph triangle.json --game '{"game": "majority"}'
    netgames check axioms|props|functor [--seed N]

Exit status: 0 success or equal, 1 different or a failed check,
2 bad input, 3 a search bound was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from . import natmat as nm
from .diagram_lang import DiagramSyntaxError, DiagramTypeError, axiom_suite, evaluate, parse
from .errors import BoundExceededError, EntryOverflowError, NetGamesError
from .network_games import DEFAULT_PROFILE_GUARD, classical_nash, game_from_json
from .open_graph import OpenGraph, canonicalize, og_equal

SCHEMA = 1
EXIT_OK, EXIT_DIFFERENT, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Source(argparse.Action):
    """Collect -e/-f/--graph in the order given on the command line."""

    def __call__(self, parser, namespace, values, option_string=None):
        items = list(getattr(namespace, "inputs", None) or [])
        items.append((self.const, values))
        namespace.inputs = items


def _add_sources(p):
    p.add_argument("-e", "--expr", action=_Source, const="expr", metavar="TERM",
                   help="diagram term given inline")
    p.add_argument("-f", "--file", action=_Source, const="file", metavar="PATH",
                   help="file holding a diagram term")
    p.add_argument("--graph", action=_Source, const="graph", metavar="JSON",
                   help="graph as JSON (a path, or an inline object starting with '{')")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--perm-bound", type=int, default=nm.DEFAULT_PERM_BOUND,
                        help="largest vertex count canonicalised by exhaustive relabelling")

    parser = argparse.ArgumentParser(prog="netgames", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", parents=[common], help="print the canonical normal form")
    _add_sources(p)
    p = sub.add_parser("eq", parents=[common], help="compare two diagrams or graphs")
    _add_sources(p)
    p = sub.add_parser("nash", parents=[common], help="pure equilibria on a closed graph")
    _add_sources(p)
    p.add_argument("--game", default='{"game": "majority"}',
                   help="game config (a path, inline JSON, 'majority' or 'best_shot')")
    p.add_argument("--cap", type=int, help="counter cap for the majority game")
    p.add_argument("--profile-guard", type=int, default=DEFAULT_PROFILE_GUARD)
    p = sub.add_parser("check", parents=[common], help="run a built-in suite")
    p.add_argument("suite", choices=["axioms", "props", "functor"])
    p.add_argument("--seed", type=int, default=0)
    return parser


# ---------------------------------------------------------------- inputs

def _read_json(value: str):
    text = value if value.lstrip().startswith(("{", "[")) else _read_file(value)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _load(kind: str, value: str, *, canonical: bool, perm_bound: int) -> OpenGraph:
    if kind == "graph":
        obj = _read_json(value)
        try:
            return OpenGraph.from_json(obj, canonical=canonical, perm_bound=perm_bound)
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed graph JSON: {exc}") from None
    src = value if kind == "expr" else _read_file(value)
    return evaluate(parse(src), canonical=canonical, perm_bound=perm_bound)


def _inputs(args, count: int) -> list:
    items = getattr(args, "inputs", None) or []
    if len(items) != count:
        raise InputError(f"{args.command} takes exactly {count} input(s) "
                         f"(-e, -f or --graph), got {len(items)}")
    return items


def _game(args):
    choice = args.game
    if choice in ("majority", "best_shot"):
        obj = {"game": choice}
    else:
        obj = _read_json(choice)
    if not isinstance(obj, dict):
        raise InputError("game config must be a JSON object")
    try:
        game = game_from_json(obj)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed game config: {exc}") from None
    if args.cap is not None:
        game = game.with_cap(args.cap)
    return game


def _emit(args, payload: dict, human: list[str]):
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload},
                         sort_keys=True))
    else:
        for line in human:
            print(line)


# ---------------------------------------------------------------- commands

def cmd_normalize(args) -> int:
    (kind, value), = _inputs(args, 1)
    g = canonicalize(_load(kind, value, canonical=False, perm_bound=args.perm_bound),
                     perm_bound=args.perm_bound)
    _emit(args, {"graph": g.to_json()}, [json.dumps(g.to_json())])
    return EXIT_OK


def cmd_eq(args) -> int:
    (k1, v1), (k2, v2) = _inputs(args, 2)
    g1 = _load(k1, v1, canonical=False, perm_bound=args.perm_bound)
    g2 = _load(k2, v2, canonical=False, perm_bound=args.perm_bound)
    if g1.type != g2.type:
        raise InputError(f"type mismatch: {g1.m}->{g1.n} vs {g2.m}->{g2.n}")
    equal = og_equal(g1, g2, perm_bound=args.perm_bound)
    _emit(args, {"equal": equal}, ["equal" if equal else "different"])
    return EXIT_OK if equal else EXIT_DIFFERENT


def _fmt_profile(profile) -> str:
    parts = [str(s) for s in profile]
    return "".join(parts) if all(len(p) == 1 for p in parts) else ",".join(parts)


def cmd_nash(args) -> int:
    from .semantics import SemanticsConfig, SaturationWarning, nash
    (kind, value), = _inputs(args, 1)
    g = _load(kind, value, canonical=False, perm_bound=args.perm_bound)
    if not g.is_closed():
        raise InputError(f"nash needs a closed graph (0 -> 0), got {g.m}->{g.n}")
    game = _game(args)
    cfg = SemanticsConfig(game, perm_bound=args.perm_bound, profile_guard=args.profile_guard)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", SaturationWarning)
        found = nash(g, cfg)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    oracle = classical_nash(game, g, args.profile_guard)
    if found != oracle:
        print(f"error: equilibria disagree with the brute-force oracle: "
              f"{found} vs {oracle}", file=sys.stderr)
        return EXIT_DIFFERENT
    scanned = len(game.strategies) ** g.k
    cap = game.monoid.cap
    _emit(args, {"equilibria": [list(p) for p in found], "profiles_scanned": scanned,
                 "game": game.name, "monoid": game.monoid.name, "cap": cap},
          [_fmt_profile(p) for p in found])
    if not args.json:
        print(f"{len(found)} equilibria among {scanned} profiles; game {game.name}, "
              f"monoid {game.monoid.name}", file=sys.stderr)
    return EXIT_OK


def cmd_check(args) -> int:
    from . import checks
    if args.suite == "axioms":
        results = axiom_suite()
    elif args.suite == "props":
        results = checks.prop_law_suite(args.seed) + checks.path_count_suite(args.seed)
    else:
        results = checks.functor_suite(args.seed)
    passed = all(r.passed for r in results)
    _emit(args, {"suite": args.suite, "seed": args.seed, "passed": passed,
                 "results": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                             for r in results]},
          [r.line() for r in results]
          + [f"{sum(r.passed for r in results)}/{len(results)} passed"])
    return EXIT_OK if passed else EXIT_DIFFERENT


COMMANDS = {"normalize": cmd_normalize, "eq": cmd_eq, "nash": cmd_nash, "check": cmd_check}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except BoundExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except EntryOverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InputError, DiagramSyntaxError, DiagramTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NetGamesError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

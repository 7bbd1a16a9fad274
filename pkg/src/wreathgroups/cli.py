"""Command-line interface: ``grp <command> ...``.

Exit codes: 0 success, 1 precondition failure (e.g. witness for an element
outside the commutator subgroup), 2 parse or type error, 3 a verification
suite failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .analysis import (
    NotACommutatorError, abelianize, center_generators, commutator_witness,
    format_vector, is_central, is_commutator_element, product_of,
)
from .element import (
    ElementSyntaxError, ElementTypeError, commutator, inverse, parse_element,
    print_element, random_element,
)
from .oracle import SizeCapError, run_oracle21
from .suites import SUITES, run_suite
from .word import WordSyntaxError, beta1, normalize, parse_word, print_word

DEFAULT_SEED = 0
DEFAULT_BOUND = 8
DEFAULT_TRIALS = 1000


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    seed: int = DEFAULT_SEED
    bound: int = DEFAULT_BOUND
    trials: int = DEFAULT_TRIALS
    output_format: str = "text"
    word: str | None = None
    words: list[str] = field(default_factory=list)
    elements: list[str] = field(default_factory=list)

    @property
    def element(self) -> str | None:
        return self.elements[0] if self.elements else None


def resolve_seed(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get("GRP_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"GRP_SEED must be an integer, got {env!r}")
    return DEFAULT_SEED


def make_config(args: argparse.Namespace) -> RunConfig:
    words = list(args.word_flag or [])
    if getattr(args, "word_arg", None):
        words.insert(0, args.word_arg)
    return RunConfig(
        seed=resolve_seed(args.seed),
        bound=args.bound if args.bound is not None else DEFAULT_BOUND,
        trials=args.trials if args.trials is not None else DEFAULT_TRIALS,
        output_format="json" if args.json else "text",
        word=words[0] if words else None,
        words=words,
        elements=list(args.element or []),
    )


def _emit(cfg: RunConfig, text: str, payload) -> None:
    if cfg.output_format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _need_word(cfg: RunConfig):
    if cfg.word is None:
        raise UsageError("a word is required (positional or -w/--word)")
    return parse_word(cfg.word)


def _need_elements(cfg: RunConfig, w, count: int | None = None, at_least: int = 1):
    if count is not None and len(cfg.elements) != count:
        raise UsageError(f"expected exactly {count} element(s) via -e/--element")
    if len(cfg.elements) < at_least:
        raise UsageError(f"expected at least {at_least} element(s) via -e/--element")
    return [parse_element(w, e) for e in cfg.elements]


def cmd_eval(command: str, cfg: RunConfig) -> int:
    w = _need_word(cfg)
    show = lambda x: print_element(w, x)  # noqa: E731
    if command == "parse":
        _emit(cfg, repr(w), {"ast": repr(w), "word": print_word(w)})
    elif command == "print":
        _emit(cfg, print_word(w), {"word": print_word(w)})
    elif command == "normalize":
        n = print_word(normalize(w))
        _emit(cfg, n, {"word": n})
    elif command == "beta1":
        b = beta1(w)
        _emit(cfg, str(b), {"beta1": b})
    elif command == "mul":
        x = product_of(w, _need_elements(cfg, w))
        _emit(cfg, show(x), {"element": show(x)})
    elif command == "inv":
        (x,) = _need_elements(cfg, w, count=1)
        _emit(cfg, show(inverse(w, x)), {"element": show(inverse(w, x))})
    elif command == "comm":
        x, y = _need_elements(cfg, w, count=2)
        c = show(commutator(w, x, y))
        _emit(cfg, c, {"element": c})
    elif command == "abelianize":
        (x,) = _need_elements(cfg, w, count=1)
        v = abelianize(w, x)
        _emit(cfg, format_vector(v), {"vector": list(v)})
    elif command == "is-central":
        (x,) = _need_elements(cfg, w, count=1)
        r = is_central(w, x)
        _emit(cfg, str(r).lower(), {"central": r})
    elif command == "is-commutator":
        (x,) = _need_elements(cfg, w, count=1)
        r = is_commutator_element(w, x)
        _emit(cfg, str(r).lower(), {"commutator": r})
    elif command == "witness":
        (x,) = _need_elements(cfg, w, count=1)
        pairs = [[show(a), show(b)] for a, b in commutator_witness(w, x).pairs]
        _emit(cfg, "\n".join(f"[{a}, {b}]" for a, b in pairs), {"pairs": pairs})
    elif command == "center-gens":
        gens = [show(g) for g in center_generators(w)]
        _emit(cfg, "\n".join(gens), {"generators": gens})
    elif command == "random":
        x = show(random_element(w, cfg.bound, cfg.seed))
        _emit(cfg, x, {"element": x})
    else:
        raise UsageError(f"unknown command {command!r}")
    return 0


def _summary(report: dict) -> str:
    lines = [f"{report['suite']}: {'PASS' if report['pass'] else 'FAIL'} "
             f"(trials={report['trials']}, failures={len(report['failures'])})"]
    d = report.get("details", {})
    if report["suite"] == "zc":
        lines.append("beta1  words  generators  rank")
        for r in d["rank_table"]:
            lines.append(f"{r['beta1']:>5}  {r['words']:>5}  {r['generators']:>10}  {r['rank']:>4}")
    elif report["suite"] == "oracle21":
        lines.append(f"agreements: {d['agreements']}/{report['trials']} "
                     f"(non-effective actions: {d['non_effective']})")
    elif report["suite"] == "all":
        lines = [lines[0]] + ["  " + _summary(r).splitlines()[0] for r in d["suites"]]
    for f in report["failures"][:10]:
        lines.append(f"  failure: {json.dumps(f, sort_keys=True)}")
    return "\n".join(lines)


def cmd_verify(cfg: RunConfig, args: argparse.Namespace) -> int:
    kwargs = dict(seed=cfg.seed, bound=args.bound, trials=cfg.trials,
                  witness_trials=max(1, cfg.trials // 10),
                  max_len=args.max_len, max_arity=args.max_arity, configs=args.configs,
                  words=cfg.words or None)
    report = run_suite(args.suite, **kwargs)
    if args.report_dir:
        from .plotting import write_report

        for path in write_report(report, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    _emit(cfg, _summary(report), report)
    return 0 if report["pass"] else 3


def cmd_oracle21(cfg: RunConfig, args: argparse.Namespace) -> int:
    report = run_oracle21(args.configs if args.configs is not None else 100, cfg.seed)
    _emit(cfg, _summary(report), report)
    return 0 if report["pass"] else 3


EVAL_COMMANDS = {
    "parse": "print the syntax tree of a word",
    "print": "print a word in canonical form",
    "normalize": "rewrite a word with 1 wr_n Z = Z, A wr_1 Z = A x Z, 1 x A = A",
    "beta1": "number of Z symbols in a word",
    "mul": "product of the given elements, left to right",
    "inv": "inverse of an element",
    "comm": "commutator x y x^-1 y^-1",
    "abelianize": "image in Z^beta1",
    "is-central": "whether an element is central",
    "is-commutator": "whether an element lies in the commutator subgroup",
    "witness": "express a commutator-subgroup element as a product of commutators",
    "center-gens": "free generators of the center",
    "random": "random element with entries in [-bound, bound]",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-w", "--word", dest="word_flag", action="append",
                        help="group word, e.g. 'Z wr2 Z' (repeatable for verify)")
    common.add_argument("-e", "--element", action="append", help="element text (repeatable)")
    common.add_argument("--seed", type=int, default=None, help="random seed (default: $GRP_SEED or 0)")
    common.add_argument("--bound", type=int, default=None, help=f"entry bound (default {DEFAULT_BOUND})")
    common.add_argument("--trials", type=int, default=None, help=f"trials (default {DEFAULT_TRIALS})")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-len", type=int, default=None)
    common.add_argument("--max-arity", type=int, default=None)
    common.add_argument("--configs", type=int, default=None, help="oracle configurations")

    parser = argparse.ArgumentParser(prog="grp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in EVAL_COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("word_arg", nargs="?", metavar="WORD")
    sub.add_parser("oracle21", parents=[common], help="finite wreath-product center oracle")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=[*SUITES, "all"], default="all")
    v.add_argument("--report-dir", help="also write <suite>.json/.csv/.png here")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        if args.command == "verify":
            return cmd_verify(cfg, args)
        if args.command == "oracle21":
            return cmd_oracle21(cfg, args)
        return cmd_eval(args.command, cfg)
    except (WordSyntaxError, ElementSyntaxError, ElementTypeError, UsageError) as exc:
        print(f"grp: error: {exc}", file=sys.stderr)
        return 2
    except (NotACommutatorError, SizeCapError) as exc:
        print(f"grp: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

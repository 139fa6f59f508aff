"""Command-line interface"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, List, Optional, TextIO

from applications import PlaneTree, RaneySequence, TreeCodec
from brickstack import BrickStack, StackAnalyzer
from config import Config
from counting import CountingFormulas
from seqcore import BitString, CyclicArrangement, SequenceUtils
from stack_bijection import StackBijection
from stack_factory import StackFactory
from stack_renderer import StackRenderer
from verification import CheckCapExceeded, Verifier

logger = logging.getLogger(__name__)

EXIT_CODES = {"OK": 0, "PASS": 0, "FAIL": 1}
USAGE_EXIT = 2


class UsageError(Exception):
    """Missing or invalid command parameters"""
    pass


@dataclass
class CommandResult:
    status: str
    payload: List[str] = field(default_factory=list)
    diagnostics: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]


class CommandLineInterface:
    """Parses arguments and dispatches to the command handlers"""

    # parsers for each `enumerate --format json` record
    JSON_PARSERS = {
        "stacks": BrickStack.from_json,
        "sequences": BitString.from_json,
        "arrangements": CyclicArrangement.from_json,
        "raney": RaneySequence.from_json,
        "trees": PlaneTree.from_json,
    }

    def __init__(self, out: TextIO = None, err: TextIO = None):
        self.config = Config()
        self.out = out or sys.stdout
        self.err = err or sys.stderr
        self.analyzer = StackAnalyzer()
        self.factory = StackFactory()
        self.bijection = StackBijection()
        self.renderer = StackRenderer()
        self.verifier = Verifier()

    def build_parser(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        for flag in ("--q", "--m", "--n", "--k", "--p", "--ones", "--max-size", "--cap", "--seed"):
            common.add_argument(flag, type=int, default=None)
        common.add_argument("--format", choices=self.config.OUTPUT_FORMATS, default="text")
        common.add_argument("--verbose", action="store_true", help="Log progress at DEBUG level")

        parser = argparse.ArgumentParser(
            prog="bricklayer",
            description="Stacks, q-satisfying strings and the Cycle Lemma family",
        )
        commands = parser.add_subparsers(dest="command", required=True)

        count = commands.add_parser("count", parents=[common], help="Exact counts")
        count.add_argument("kind", choices=self.config.COUNT_KINDS)

        enumerate_ = commands.add_parser("enumerate", parents=[common], help="List objects one per line")
        enumerate_.add_argument("kind", choices=self.config.ENUMERATE_KINDS)

        mapping = commands.add_parser("map", parents=[common], help="Apply the stack bijection")
        mapping.add_argument("direction", choices=self.config.MAP_DIRECTIONS)
        mapping.add_argument("input")

        verify = commands.add_parser("verify", parents=[common], help="Run a verification sweep")
        verify.add_argument("suite", choices=list(self.config.VERIFY_SUITES.keys()))
        verify.add_argument("--emit-all", action="store_true", help="Print every checked line, not only failures")

        render = commands.add_parser("render", parents=[common], help="Draw a stack")
        render.add_argument("input")
        render.add_argument("--shaved", action="store_true", help="Draw bricks with shaved top corners")

        return parser

    def run(self, argv: Optional[List[str]] = None) -> int:
        args = self.build_parser().parse_args(argv)
        if args.verbose:
            logging.getLogger().setLevel(logging.DEBUG)

        handlers = {
            "count": self.cmd_count,
            "enumerate": self.cmd_enumerate,
            "map": self.cmd_map,
            "verify": self.cmd_verify,
            "render": self.cmd_render,
        }
        try:
            result = handlers[args.command](args)
        except UsageError as e:
            print(f"usage error: {e}", file=self.err)
            return USAGE_EXIT

        for line in result.payload:
            print(line, file=self.out)
        for line in result.diagnostics:
            print(line, file=self.err)
        return result.exit_code

    @staticmethod
    def _require(args: argparse.Namespace, *names: str) -> None:
        missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
        if missing:
            raise UsageError(f"{args.command} {args.kind} needs {', '.join(missing)}")
        negative = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) < 0]
        if negative:
            raise UsageError(f"{', '.join(negative)} must be nonnegative")

    @staticmethod
    def _require_positive_q(args: argparse.Namespace) -> None:
        if args.q < 1:
            raise UsageError(f"--q must be positive for {args.kind}")

    def cmd_count(self, args: argparse.Namespace) -> CommandResult:
        kind = args.kind
        if kind == "stacks":
            self._require(args, "m", "q")
            self._require_positive_q(args)
            total = CountingFormulas.count_q_stacks_total(args.m, args.q)
            if args.format == "json":
                return CommandResult("OK", [json.dumps({"total": str(total), "nonempty": str(total - 1)})])
            return CommandResult("OK", [f"total={total} nonempty={total - 1}"])

        if kind == "table":
            self._require(args, "m", "q")
            self._require_positive_q(args)
            if args.m < 1:
                raise UsageError("--m must be at least 1")
            table = CountingFormulas.recurrence_table(args.m, args.q)
            return CommandResult("OK", table.to_csv().splitlines())

        if kind == "satisfying":
            if args.k is not None and args.p is not None:
                self._require(args, "k", "p", "q")
                if args.p < 1:
                    raise UsageError("--p must be positive")
                value = CountingFormulas.count_q_satisfying(args.k, args.p, args.q)
            else:
                self._require(args, "m", "q")
                value = CountingFormulas.count_q_satisfying_length(args.m, args.q)
        elif kind == "catalan":
            self._require(args, "n")
            value = CountingFormulas.catalan(args.n)
        elif kind == "raney":
            self._require(args, "k", "q")
            self._require_positive_q(args)
            value = CountingFormulas.generalized_catalan(args.k, args.q)
        else:
            # gcatalan and trees
            self._require(args, "n", "q")
            value = CountingFormulas.generalized_catalan(args.n, args.q)

        if args.format == "json":
            return CommandResult("OK", [json.dumps({"kind": kind, "count": str(value)})])
        return CommandResult("OK", [str(value)])

    def cmd_enumerate(self, args: argparse.Namespace) -> CommandResult:
        kind = args.kind
        as_json = args.format == "json"

        if kind == "stacks":
            self._require(args, "m", "q")
            self._require_positive_q(args)
            items = self.factory.enumerate_stacks(args.m, args.q)
            render: Callable = (lambda s: json.dumps(s.to_json())) if as_json else BrickStack.to_text
        elif kind == "sequences":
            self._require(args, "m", "q")
            items = self._satisfying_strings(args.m, args.q, args.ones)
            render = (lambda s: json.dumps(s.to_json())) if as_json else BitString.to_text
        elif kind == "arrangements":
            self._require(args, "m", "ones")
            if args.ones > args.m:
                raise UsageError("--ones cannot exceed --m")
            items = SequenceUtils.enumerate_arrangements(args.ones, args.m - args.ones)
            render = (lambda a: json.dumps(a.to_json())) if as_json else (lambda a: a.to_text())
        elif kind == "raney":
            self._require(args, "k", "q")
            self._require_positive_q(args)
            items = TreeCodec.enumerate_raney(args.k, args.q)
            render = (lambda r: json.dumps(r.to_json())) if as_json else (lambda r: r.to_text())
        else:
            self._require(args, "n", "q")
            self._require_positive_q(args)
            items = TreeCodec.enumerate_plane_trees(args.n, args.q)
            render = self._tree_json if as_json else (lambda t: t.to_text())

        cap = self.config.DEFAULT_OUTPUT_CAP if args.cap is None else args.cap
        lines = []
        for item in items:
            if len(lines) >= cap:
                raise UsageError(f"more than {cap} objects; raise --cap to list them")
            line = render(item)
            if as_json and self.JSON_PARSERS[kind](json.loads(line)) != item:
                return CommandResult("FAIL", diagnostics=[f"FAIL {line} does not parse back to {item}"])
            lines.append(line)
        logger.debug("Enumerated %d %s", len(lines), kind)
        return CommandResult("OK", lines)

    @staticmethod
    def _satisfying_strings(m: int, q: int, ones: Optional[int]) -> Iterator[BitString]:
        counts = [ones] if ones is not None else range(m // (q + 1) + 1) if q > 0 else range(m + 1)
        for n in counts:
            if n > m:
                continue
            for s in SequenceUtils.enumerate_bitstrings(n, m - n):
                if SequenceUtils.is_q_satisfying(s, q):
                    yield s

    @staticmethod
    def _tree_json(tree) -> str:
        return json.dumps({
            "tree": tree.to_text(),
            "bracketing": TreeCodec.render_labeled(tree),
            "bits": TreeCodec.tree_to_sequence(tree).to_text(),
        }, ensure_ascii=False)

    def cmd_map(self, args: argparse.Namespace) -> CommandResult:
        as_json = args.format == "json"
        try:
            if args.direction == "seq-to-stack":
                if args.q is None:
                    raise UsageError("map seq-to-stack needs --q")
                stack = self.bijection.sequence_to_stack(BitString.from_text(args.input), args.q)
                return CommandResult("OK", [json.dumps(stack.to_json()) if as_json else stack.to_text()])

            stack = BrickStack.from_json(json.loads(args.input)) if as_json else BrickStack.from_text(args.input)
            bits = self.bijection.stack_to_sequence(stack)
            return CommandResult("OK", [json.dumps(bits.to_json()) if as_json else bits.to_text()])
        except (ValueError, RuntimeError) as e:
            return CommandResult("FAIL", diagnostics=[f"FAIL {e}"])

    def cmd_verify(self, args: argparse.Namespace) -> CommandResult:
        overrides = {name: getattr(args, name) for name in ("max_size", "q", "p", "m", "n", "k")}
        try:
            self.config.suite_bounds(args.suite, overrides)
        except ValueError as e:
            raise UsageError(str(e))
        try:
            report = self.verifier.run(args.suite, overrides, cap=args.cap, seed=args.seed,
                                       emit_all=args.emit_all)
        except CheckCapExceeded as e:
            raise UsageError(f"{e}; raise --cap to run it")

        shown: Iterable = report.lines if args.emit_all else report.failures
        payload = [line.format() for line in shown]
        payload.append(report.summary())
        if report.passed:
            return CommandResult("PASS", payload)
        return CommandResult("FAIL", payload, [f"FAIL {report.summary()}"])

    def cmd_render(self, args: argparse.Namespace) -> CommandResult:
        try:
            stack = BrickStack.from_text(args.input)
        except ValueError as e:
            return CommandResult("FAIL", diagnostics=[f"FAIL {e}"])

        violations = self.analyzer.validate(stack)
        if violations:
            return CommandResult("FAIL", diagnostics=[f"FAIL {v}" for v in violations])
        return CommandResult("OK", self.renderer.render_ascii(stack, shaved=args.shaved).split("\n"))


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    logging.basicConfig(format=Config.LOG_FORMAT, level=Config.LOG_LEVEL, stream=sys.stderr)
    return CommandLineInterface().run(argv)


if __name__ == "__main__":
    sys.exit(main())

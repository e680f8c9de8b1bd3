"""The ``topo`` command: run scripts, an interactive REPL, and the theorem1 report."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import NoReturn, TextIO

from . import __version__
from .config import Settings, load_settings
from .errors import ParseError, PreconditionError, TopoError
from .parser import Value, parse
from .render import JSON, TEXT, render, render_run
from .runner import ExitCode, exit_code, outcome_code, run_script
from .theorem import theorem1

try:
    import readline

    is_rl_available = True
except ModuleNotFoundError:
    is_rl_available = False

logger = logging.getLogger(__name__)


def _positive_fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc
    if value <= 0:
        raise argparse.ArgumentTypeError(f"a must be positive, got {text}")
    return value


def _terms(text: str) -> int:
    if not text.isdigit() or not 1 <= int(text) <= 1_000_000:
        raise argparse.ArgumentTypeError(f"terms must be in 1..1000000, got {text!r}")
    return int(text)


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 3 instead of 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(ExitCode.USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="topo",
        description="exact point-set topology on the real line",
    )
    parser.add_argument("--version", action="version", version=f"topo {__version__}")
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log rule firings to stderr"
    )
    parser.add_argument(
        "--workers", type=int, default=None, help="threads for continuity case checks"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a .topo script")
    run.add_argument("file", type=Path)
    run.add_argument("--json", action="store_true", help="JSON output")

    sub.add_parser("repl", help="interactive session")

    thm = sub.add_parser("theorem1", help="certify the indicator-of-U counterexample")
    thm.add_argument("--a", type=_positive_fraction, default=Fraction(1))
    thm.add_argument("--terms", type=_terms, default=None)
    thm.add_argument("--json", action="store_true", help="JSON output")
    return parser


def _run_file(
    path: Path, settings: Settings, fmt: str, workers: int | None, out: TextIO
) -> ExitCode:
    try:
        text = path.read_bytes()
    except OSError as exc:
        print(f"topo: cannot read {path}: {exc.strerror}", file=sys.stderr)
        return ExitCode.USAGE
    try:
        script = parse(text)
    except ParseError as exc:
        print(f"{path}: {exc}", file=sys.stderr)
        return ExitCode.USAGE
    executed = run_script(script, settings, workers)
    out.write(render_run(executed, fmt))
    return exit_code(executed)


def repl(settings: Settings, workers: int | None, out: TextIO) -> ExitCode:
    """Read statements line by line; ``let`` bindings persist for the session."""
    bindings: dict[str, Value] = {}
    if is_rl_available:
        readline.parse_and_bind("tab: complete")
    print(f"topo {__version__}; end with Ctrl-D", file=out)
    while True:
        try:
            line = input("topo> ")
        except (EOFError, KeyboardInterrupt):
            print(file=out)
            return ExitCode.OK
        # Parse into a scratch copy so a failed line leaves no partial bindings.
        scratch = dict(bindings)
        try:
            script = parse(line, scratch)
        except ParseError as exc:
            print(f"error: {exc}", file=out)
            continue
        bindings = scratch
        out.write(render_run(run_script(script, settings, workers)))


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        settings = load_settings()
    except PreconditionError as exc:
        print(f"topo: {exc}", file=sys.stderr)
        return ExitCode.USAGE
    out = sys.stdout
    fmt = JSON if getattr(args, "json", False) else TEXT

    if args.command == "run":
        return _run_file(args.file, settings, fmt, args.workers, out)
    if args.command == "repl":
        return repl(settings, args.workers, out)
    try:
        report = theorem1(args.a, args.terms or settings.default_terms, args.workers)
    except TopoError as exc:
        print(f"topo: {exc}", file=sys.stderr)
        return ExitCode.USAGE
    out.write(render(report, fmt))
    return outcome_code(report.status)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: ``pfkit expand|findop|analyze|mirror|fixtures``."""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

from .errors import NotFound, NotMUM, ParseError, PFKitError, PreconditionError
from .exact.series import PowerSeries
from .exact.textio import dumps_series, loads_series, parse_rational
from .fixtures import FIXTURES, get_fixture
from .opfind.operator import dumps_operator, loads_operator

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_NOTFOUND = 0, 2, 3, 4


@dataclass(frozen=True)
class JobSpec:
    subcommand: str
    path: str | None = None
    fixture: str | None = None
    out: str | None = None

    def __post_init__(self):
        if (self.path is None) == (self.fixture is None):
            raise ParseError("give exactly one input: a file or --fixture NAME")

    def read(self) -> str:
        try:
            with open(self.path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {self.path}: {exc.strerror}") from None


def threads() -> int:
    """PFKIT_THREADS caps parallelism; every engine here runs sequentially."""
    raw = os.environ.get("PFKIT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ParseError(f"PFKIT_THREADS must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ParseError(f"PFKIT_THREADS must be a positive integer, got {raw!r}")
    return n


def fixture_series(name: str) -> PowerSeries:
    """The longest stored series for a fixture (package data if present)."""
    fx = get_fixture(name)
    data = resources.files("pfkit") / "data" / f"{name}_150.txt"
    if data.is_file():
        return loads_series(data.read_text(encoding="utf-8"))
    if not fx.series_prefix:
        raise PreconditionError(f"fixture {name} has no series")
    return PowerSeries(list(fx.series_prefix), fx.series_offset)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _job(args) -> JobSpec:
    return JobSpec(args.command, getattr(args, "input", None), getattr(args, "fixture", None), getattr(args, "out", None))


def cmd_expand(args) -> int:
    from .periods import constant_term_series, morse_period, parse_laurent, parse_morse_problem, parse_simplex_problem, simplex_period

    job = _job(args)
    if job.fixture is not None:
        fx = get_fixture(job.fixture)
        if fx.problem_kind != args.kind:
            raise PreconditionError(f"fixture {fx.name} has no {args.kind} problem")
        text = fx.problem
    else:
        text = job.read()
    if args.kind == "ct":
        if args.order is None:
            raise ParseError("expand ct needs --order")
        s = constant_term_series(parse_laurent(text), args.order)
        _emit(dumps_series(s, ["constant terms [f^m]_0"]), job.out)
        return EXIT_OK
    if args.kind == "simplex":
        exp = simplex_period(parse_simplex_problem(text, args.order))
    else:
        exp = morse_period(parse_morse_problem(text, args.order))
    _emit(dumps_series(exp.series, exp.describe()), job.out)
    return EXIT_OK


def cmd_findop(args) -> int:
    from .opfind import search_minimal_operator

    job = _job(args)
    s = fixture_series(job.fixture) if job.fixture else loads_series(job.read())
    try:
        res = search_minimal_operator(s, args.dmax, args.rmax, args.holdout, args.dmin)
    except NotFound as exc:
        for line in exc.trace:
            print(f"# {line}", file=sys.stderr)
        raise
    _emit(dumps_operator(res.operator, res.trace), job.out)
    return EXIT_OK


def _operator_input(job: JobSpec):
    if job.fixture is not None:
        fx = get_fixture(job.fixture)
        if fx.operator is None:
            raise PreconditionError(f"fixture {fx.name} stores no operator; run findop on its series")
        return fx.operator, fx
    return loads_operator(job.read()), None


def cmd_analyze(args) -> int:
    from .opalg import analysis_report

    P, _ = _operator_input(_job(args))
    _emit(analysis_report(P), args.out)
    return EXIT_OK


def cmd_mirror(args) -> int:
    from .mirror import mirror_report
    from .mirror.frobenius import mum_normalized

    P, fx = _operator_input(_job(args))
    mum_normalized(P)
    n0 = args.n0
    if n0 is None and fx is not None:
        n0 = fx.n0
    if n0 is None:
        raise PreconditionError("the normalization K(0) = n0 is not determined by the operator; pass --n0")
    _emit(mirror_report(P, n0, args.depth, args.order), args.out)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.action == "list":
        _emit("".join(f"{name}\n" for name in FIXTURES), None)
        return EXIT_OK
    if not args.name:
        raise ParseError("fixtures show needs a fixture name")
    _emit(get_fixture(args.name).show(), None)
    return EXIT_OK


def _rational(token: str) -> Fraction:
    try:
        return parse_rational(token)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pfkit", description="Exact period expansions and Picard-Fuchs operators.")
    sub = ap.add_subparsers(dest="command", required=True)

    def inputs(p, what):
        p.add_argument("input", nargs="?", help=f"{what} file")
        p.add_argument("--fixture", help="use a built-in fixture instead of a file")
        p.add_argument("--out", help="output path (default: stdout)")

    p = sub.add_parser("expand", help="expand a period into an exact series")
    p.add_argument("kind", choices=["simplex", "ct", "morse"])
    inputs(p, "problem")
    p.add_argument("--order", type=int, help="number of terms beyond the leading one")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("findop", help="find a minimal operator annihilating a series")
    inputs(p, "series")
    p.add_argument("--dmax", type=int, default=4, help="maximal theta-degree")
    p.add_argument("--rmax", type=int, default=8, help="maximal t-degree")
    p.add_argument("--dmin", type=int, default=1, help="minimal theta-degree")
    p.add_argument("--holdout", type=int, default=6, help="equations beyond the unknown count")
    p.set_defaults(func=cmd_findop)

    p = sub.add_parser("analyze", help="Riemann symbol and classification report")
    inputs(p, "operator")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mirror", help="mirror map, Yukawa coupling and instanton numbers")
    inputs(p, "operator")
    p.add_argument("--n0", type=_rational, help="K(0), e.g. the degree")
    p.add_argument("--depth", type=int, default=5, help="number of instanton numbers")
    p.add_argument("--order", type=int, help="series order for integrality checks")
    p.set_defaults(func=cmd_mirror)

    p = sub.add_parser("fixtures", help="built-in examples")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        threads()
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except KeyError as exc:  # unknown fixture
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_PARSE
    except (NotFound, NotMUM) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOTFOUND
    except (PreconditionError, PFKitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Every command except ``construct`` writes a report::

    {"command", "input_digest", "results", "seed", "bounds"}

Exit codes: 0 success, 2 usage or schema error, 3 a mathematical
precondition failed, 4 a property suite failed.
"""

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Any

from . import analysis, archimedeanization as arch, classification as cls, properties
from .errors import DimensionMismatch, InvalidOrder, PreconditionError, SearchExhausted, ZmaxError
from .extensions import (
    Extension,
    make_Fn,
    make_identity,
    make_lex_example,
    make_scaled,
)
from .lattice import INFINITE
from .semifield import Unit
from .serialize import (
    SchemaError,
    dumps,
    element_from_json,
    element_to_json,
    encode,
    extension_from_json,
    extension_to_json,
    group_to_json,
    matrix_to_json,
    safe,
    verdict_to_json,
)

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_SUITE = 0, 2, 3, 4

BUILTINS = {
    "Fn": make_Fn,
    "scaled": make_scaled,
    "lex": lambda n: make_lex_example(),
    "identity": lambda n: make_identity(),
}


class UsageError(Exception):
    pass


def canonical(obj: Any) -> str:
    return json.dumps(safe(obj), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def digest(obj: Any) -> str:
    return "sha256:" + hashlib.sha256(canonical(obj).encode("utf-8")).hexdigest()


def load_extension(args) -> Extension:
    if args.builtin is not None:
        if args.input is not None:
            raise UsageError("give either an input file or --builtin, not both")
        if args.builtin in ("Fn", "scaled") and args.n is None:
            raise UsageError(f"--builtin {args.builtin} needs --n")
        return BUILTINS[args.builtin](args.n)
    if args.input is None:
        raise UsageError("an extension JSON file (or '-' for stdin) or --builtin is required")
    text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None
    return extension_from_json(data, getattr(args, "bound", None))


def report(command: str, source: Any, results: Any, seed: int, bounds: dict) -> dict:
    return {
        "command": command,
        "input_digest": digest(source),
        "results": results,
        "seed": seed,
        "bounds": bounds,
    }


def cmd_construct(args) -> tuple[Any, int]:
    return extension_to_json(load_extension(args)), EXIT_OK


def cmd_analyze(args) -> tuple[Any, int]:
    e = load_extension(args)
    B = args.bound
    ui = cls.unit_index(e)
    results = {
        "selective": analysis.selectivity(e.L),
        "archimedean": verdict_to_json(analysis.is_archimedean(e, B)),
        "convex": verdict_to_json(analysis.is_convex(e, B)),
        "arch_subextension": [list(g) for g in analysis.arch_subextension(e, B)],
        "unit_index": "infinite" if ui is INFINITE else ui,
        "order_check": None if e.order_check is None else verdict_to_json(e.order_check),
    }
    return report("analyze", extension_to_json(e), results, args.seed, {"bound": B}), EXIT_OK


def cmd_classify(args) -> tuple[Any, int]:
    e = load_extension(args)
    res = cls.classify(e, args.window)
    return report("classify", extension_to_json(e), res.report(), args.seed, {"window": args.window}), EXIT_OK


def _generators(args, e: Extension) -> list[Unit]:
    if args.generators is not None:
        try:
            raw = json.loads(args.generators)
        except json.JSONDecodeError as exc:
            raise SchemaError("--generators", exc.msg) from None
        if not isinstance(raw, list):
            raise SchemaError("--generators", "expected a JSON array of elements")
        return [element_from_json(g, e.L.rank, f"--generators[{i}]") for i, g in enumerate(raw)]
    if e.generators is not None:
        return list(e.generators)
    # without a generating set, fall back to 1 and the coordinate units of L
    rank = e.L.rank
    return [e.L.one()] + [Unit(tuple(int(i == j) for j in range(rank))) for i in range(rank)]


def cmd_archimedeanize(args) -> tuple[Any, int]:
    e = load_extension(args)
    S = _generators(args, e)
    source = {"extension": extension_to_json(e), "S": [element_to_json(s) for s in S]}
    bounds = {"bound": args.bound}
    try:
        run = arch.archimedeanize(e, S, args.bound)
    except SearchExhausted as exc:
        results = {"outcome": "unknown", "reason": str(exc), "bound": exc.bound}
        return report("archimedeanize", source, results, args.seed, bounds), EXIT_OK
    results = {
        "outcome": "complete",
        **run.report(),
        "level_sizes": list(run.level_sizes),
        "unit_index_upper_bound": arch.unit_index_upper_bound(run),
        "S": [element_to_json(s) for s in run.S],
        "T": [element_to_json(t) for t in run.T],
    }
    return report("archimedeanize", source, results, args.seed, bounds), EXIT_OK


def cmd_quotient(args) -> tuple[Any, int]:
    e = load_extension(args)
    Q = analysis.quotient(e, args.bound)
    results = {
        "quotient_group": group_to_json(Q.quotient_group),
        "projection": matrix_to_json(Q.projection),
    }
    return report("quotient", extension_to_json(e), results, args.seed, {"bound": args.bound}), EXIT_OK


def cmd_verify(args) -> tuple[Any, int]:
    results = properties.run_suite(args.suite, args.seed, args.trials)
    ok = all(r.passed for r in results)
    body = {
        "suite": args.suite,
        "passed": ok,
        "properties": [r.to_json() for r in results],
    }
    bounds = {"trials": args.trials, "sample_range": properties.SAMPLE_RANGE}
    source = {"suite": args.suite, "trials": args.trials}
    return report("verify", source, body, args.seed, bounds), EXIT_OK if ok else EXIT_SUITE


COMMANDS = {
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "archimedeanize": cmd_archimedeanize,
    "quotient": cmd_quotient,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zmaxext", description="Extensions of Z_max: analysis and verification.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="write the JSON output to this file instead of stdout")

    ext = argparse.ArgumentParser(add_help=False)
    ext.add_argument("input", nargs="?", help="extension JSON file, or '-' for stdin")
    ext.add_argument("--builtin", choices=sorted(BUILTINS))
    ext.add_argument("--n", type=int, help="parameter for --builtin Fn / scaled")
    ext.add_argument("--bound", type=int, default=64, help="search window for bounded searches")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("construct", parents=[common, ext], help="emit canonical extension JSON")
    sub.add_parser("analyze", parents=[common, ext], help="selectivity, archimedean, convexity, unit index")
    p = sub.add_parser("classify", parents=[common, ext], help="identify L with F^(n)")
    p.add_argument("--window", type=int, default=cls.DEFAULT_WINDOW, help="addition-law check window")
    p = sub.add_parser("archimedeanize", parents=[common, ext], help="run the T-set construction")
    p.add_argument("--generators", help='JSON array of elements, e.g. \'[{"exp": [0]}, {"exp": [1]}]\'')
    sub.add_parser("quotient", parents=[common, ext], help="quotient of L by the convex subsemifield K")
    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=[*properties.SUITES, "all"], default="all")
    p.add_argument("--trials", type=int, default=500)
    return parser


def _error(kind: str, exc: BaseException, code: int) -> int:
    payload = {"error": kind, "message": str(exc)}
    for attr in ("counterexample", "bound", "path"):
        if getattr(exc, attr, None) is not None:
            payload[attr] = encode(getattr(exc, attr))
    sys.stderr.write(dumps(payload))
    return code


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = COMMANDS[args.command](args)
    except (UsageError, OSError) as exc:
        return _error(type(exc).__name__, exc, EXIT_USAGE)
    except (SchemaError, InvalidOrder, DimensionMismatch) as exc:
        return _error(type(exc).__name__, exc, EXIT_USAGE)
    except (PreconditionError, ZmaxError) as exc:
        return _error(type(exc).__name__, exc, EXIT_PRECONDITION)
    text = dumps(out)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

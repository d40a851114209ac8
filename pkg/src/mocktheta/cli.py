"""Command-line front end.

    mocktheta expand "phi(q)^2/phi(-q)" --order 10 --mod 8
    mocktheta verify --suite T6
    mocktheta matrix M 8 9
    mocktheta scan --a 416 --mod 13 --count 30

Exit codes: 0 success, 1 a check failed, 2 usage or parse error, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import congruence, opmatrix, suites
from .qexpr import EvalError, ParseError, evaluate
from .series import ZZ, RingError, Zmod
from .theta import ResourceLimitError, set_memory_cap

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    order: int | None = None
    modulus: int | None = None
    fmt: str = "text"
    out: str | None = None
    mem_cap: int | None = None

    def __post_init__(self):
        if self.order is not None and self.order < 1:
            raise UsageError("--order must be >= 1")
        if self.modulus is not None and self.modulus < 2:
            raise UsageError("--mod must be >= 2")
        if self.mem_cap is not None and self.mem_cap < 1:
            raise UsageError("--mem-cap must be positive")


def _uint(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an unsigned integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"not an unsigned integer: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    common.add_argument("--mem-cap", type=_uint, metavar="BYTES", help="memory cap for series tables")

    ap = argparse.ArgumentParser(prog="mocktheta", description="q-series expansion and v0(n) congruence checks")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common], help="print coefficients 0..N-1 of an expression")
    p.add_argument("expr")
    p.add_argument("--order", type=_uint, default=20)
    p.add_argument("--mod", type=_uint, dest="modulus")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", required=True, help=", ".join(suites.SUITE_NAMES))
    p.add_argument("--order", type=_uint)

    p = sub.add_parser("matrix", parents=[common], help="print the top-left block of a matrix")
    p.add_argument("name", choices=("M", "N", "P", "A", "B", "C", "D"))
    p.add_argument("rows", type=_uint)
    p.add_argument("cols", type=_uint)

    p = sub.add_parser("scan", parents=[common], help="search for progressions with v0 = 0 mod m")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", type=_uint, help="scan offsets b of a single modulus a")
    g.add_argument("--amax", type=_uint, help="scan every a <= amax")
    p.add_argument("--mod", type=_uint, dest="modulus", required=True)
    p.add_argument("--count", type=_uint, default=50)
    return ap


# -- commands ----------------------------------------------------------------


def cmd_expand(expr: str, cfg: CliConfig) -> tuple[str, int]:
    ring = Zmod(cfg.modulus) if cfg.modulus else ZZ
    s = evaluate(expr, ring=ring, order=cfg.order)
    coeffs = [str(int(c)) for c in s.coeffs]
    if cfg.fmt == "json":
        return json.dumps(coeffs), EXIT_OK
    return " ".join(coeffs), EXIT_OK


def cmd_verify(suite: str, cfg: CliConfig) -> tuple[str, int]:
    if suite not in suites.SUITE_NAMES:
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(suites.SUITE_NAMES)}")
    rep = suites.run_suite(suite, cfg.order)
    text = rep.to_json() if cfg.fmt == "json" else rep.render_text()
    return text, EXIT_OK if rep.passed else EXIT_FAIL


def cmd_matrix(name: str, rows: int, cols: int, cfg: CliConfig) -> tuple[str, int]:
    if rows < 1 or cols < 1:
        raise UsageError("rows and cols must be >= 1")
    blk = opmatrix.block(name, rows, cols)
    if cfg.fmt == "json":
        return json.dumps([[str(x) for x in row] for row in blk]), EXIT_OK
    width = max(len(str(x)) for row in blk for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in blk), EXIT_OK


def cmd_scan(a: int | None, amax: int | None, cfg: CliConfig, count: int) -> tuple[str, int]:
    m = cfg.modulus
    if count < 1:
        raise UsageError("--count must be >= 1")
    if a is not None:
        if a < 1:
            raise UsageError("--a must be >= 1")
        pairs = [(a, b) for b in congruence.scan_progression(a, m, count)]
    else:
        if amax < 1:
            raise UsageError("--amax must be >= 1")
        pairs = congruence.scan_discover(amax, m, count)
    if cfg.fmt == "json":
        doc = {
            "status": "unproven",
            "modulus": m,
            "count": count,
            "candidates": [{"a": x, "b": y} for x, y in pairs],
        }
        return json.dumps(doc, indent=2), EXIT_OK
    head = f"unproven candidates v0(an+b) = 0 mod {m} for all n<{count}: {len(pairs)}"
    return "\n".join([head] + [f"  unproven  v0({x}n+{y})" for x, y in pairs]), EXIT_OK


def run(cfg: CliConfig, args: argparse.Namespace) -> tuple[str, int]:
    if cfg.command == "expand":
        return cmd_expand(args.expr, cfg)
    if cfg.command == "verify":
        return cmd_verify(args.suite, cfg)
    if cfg.command == "matrix":
        return cmd_matrix(args.name, args.rows, args.cols, cfg)
    return cmd_scan(args.a, args.amax, cfg, args.count)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = CliConfig(
            args.command,
            getattr(args, "order", None),
            getattr(args, "modulus", None),
            args.format,
            args.out,
            args.mem_cap,
        )
        if cfg.mem_cap is not None:
            set_memory_cap(cfg.mem_cap)
        text, code = run(cfg, args)
    except ParseError as exc:
        print(f"mocktheta: parse error: {exc.message} at byte offset {exc.offset}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, EvalError, RingError, ZeroDivisionError) as exc:
        print(f"mocktheta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, MemoryError) as exc:
        print(f"mocktheta: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    finally:
        if getattr(args, "mem_cap", None) is not None:
            set_memory_cap(None)

    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from . import export, verify
from .bernoulli import BernoulliCache
from .pk import EQ11_SIGN, CrossCheckError, PkConsistencyError, build_pk_sequence
from .stirling import build_stirling_table


@dataclass(frozen=True)
class RunConfig:
    command: str
    max_n: int = 7
    max_k: int = 10
    max_m: int = 10
    depth: Optional[int] = None
    method: str = "interp"
    suite: str = "all"
    format: str = "text"
    out: Optional[Path] = None
    eq11_sign: int = EQ11_SIGN


def _positive(name: str, minimum: int):
    def conv(s: str) -> int:
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {s!r}")
        if v < minimum:
            raise argparse.ArgumentTypeError(f"{name} must be >= {minimum}, got {v}")
        return v
    return conv


def _sign(s: str) -> int:
    if s in ("+1", "1"):
        return 1
    if s == "-1":
        return -1
    raise argparse.ArgumentTypeError("sign must be +1 or -1")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="stirpoly", description="Stirling triangle, Bernoulli data and P_k polynomials.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, with_format=True):
        if with_format:
            sp.add_argument("--format", choices=export.FORMATS, default="text")
        sp.add_argument("--out", type=Path, default=None, help="write here instead of stdout")

    sp = sub.add_parser("stirling", help="dump the T(n,k) triangle")
    sp.add_argument("--max-n", type=_positive("--max-n", 1), default=7)
    common(sp)

    sp = sub.add_parser("pk", help="derive P_0..P_K")
    sp.add_argument("--max-k", type=_positive("--max-k", 0), default=10)
    sp.add_argument("--method", choices=("interp", "recursion", "cross-check-all"), default="interp")
    sp.add_argument("--eq11-sign", type=_sign, default=EQ11_SIGN, help=argparse.SUPPRESS)
    common(sp)

    sp = sub.add_parser("verify", help="run identity checks")
    sp.add_argument("suite", choices=verify.SUITES + ("all",))
    sp.add_argument("--depth", type=_positive("--depth", 1), default=None)
    sp.add_argument("--eq11-sign", type=_sign, default=EQ11_SIGN, help=argparse.SUPPRESS)
    common(sp, with_format=False)

    sp = sub.add_parser("bernoulli", help="dump B_n and B_m(x)")
    sp.add_argument("--max-m", type=_positive("--max-m", 0), default=10)
    common(sp)
    return p


def parse_config(argv: Optional[List[str]] = None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    fields = {k: v for k, v in vars(ns).items() if v is not None or k == "depth"}
    fields = {k.replace("-", "_"): v for k, v in fields.items()}
    return RunConfig(**fields)


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_stirling(cfg: RunConfig) -> int:
    _emit(export.render_table(build_stirling_table(cfg.max_n), cfg.format), cfg.out)
    return 0


def cmd_pk(cfg: RunConfig) -> int:
    try:
        seq = build_pk_sequence(cfg.max_k, cfg.method, sign=cfg.eq11_sign)
    except (CrossCheckError, PkConsistencyError) as exc:
        sys.stderr.write(f"cross-check failed: {exc}\n")
        return 1
    _emit(export.render_pk(seq, cfg.format), cfg.out)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    results = verify.run_suites(cfg.suite, cfg.depth, cfg.eq11_sign)
    _emit(verify.format_report(results), cfg.out)
    return 0 if all(r.passed for r in results) else 1


def cmd_bernoulli(cfg: RunConfig) -> int:
    _emit(export.render_bernoulli(BernoulliCache(), cfg.max_m, cfg.format), cfg.out)
    return 0


COMMANDS = {"stirling": cmd_stirling, "pk": cmd_pk, "verify": cmd_verify, "bernoulli": cmd_bernoulli}


def main(argv: Optional[List[str]] = None) -> int:
    cfg = parse_config(argv)
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())

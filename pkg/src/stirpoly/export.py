"""Renderers for tables, polynomial sequences and Bernoulli data.

Every renderer returns a string ending in a newline; output is deterministic.
"""
from __future__ import annotations

import csv
import io
import json
from typing import List

from .bernoulli import BernoulliCache
from .numeric import format_rational, parse_rational
from .pk import PkSequence
from .polynomial import Poly
from .stirling import StirlingTable, t_rows

FORMATS = ("csv", "json", "latex", "text")


def _csv(rows: List[list]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# T triangle

def render_table(t: StirlingTable, fmt: str, max_n: int | None = None) -> str:
    rows = t_rows(t, max_n)
    if fmt == "csv":
        return _csv(rows)
    if fmt == "json":
        return _dump(table_to_json(rows))
    if fmt == "latex":
        lines = ["\\begin{array}{" + "c" * (len(rows) + 2) + "}"]
        for n, row in enumerate(rows, 1):
            lines.append(f"T_{{{n},k}}:&\\quad&" + "&".join(map(str, row)) + "\\\\")
        lines.append("\\end{array}")
        return "\n".join(lines) + "\n"
    if fmt == "text":
        width = max(len(str(v)) for row in rows for v in row)
        label = max(len(f"T_{{{n},k}}:") for n in range(1, len(rows) + 1))
        out = []
        for n, row in enumerate(rows, 1):
            cells = " ".join(str(v).rjust(width) for v in row)
            out.append(f"{f'T_{{{n},k}}:'.ljust(label)}  {cells}")
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def table_to_json(rows: List[List[int]]) -> dict:
    return {"max_n": len(rows), "T": rows}


def table_from_json(obj: dict) -> List[List[int]]:
    return [list(map(int, row)) for row in obj["T"]]


# P_k sequences

def pk_to_json(seq: PkSequence) -> list:
    return [
        {"k": k, "method": seq.provenance[k], "coeffs": p.to_json()["coeffs"]}
        for k, p in enumerate(seq.polys)
    ]


def pk_from_json(items: list) -> PkSequence:
    items = sorted(items, key=lambda d: d["k"])
    if [d["k"] for d in items] != list(range(len(items))):
        raise ValueError("P_k entries must cover k = 0..K without gaps")
    polys = tuple(Poly.from_json(d) for d in items)
    prov = tuple(d["method"] for d in items)
    return PkSequence(polys, prov, tuple((m,) for m in prov))


def render_pk(seq: PkSequence, fmt: str) -> str:
    if fmt == "json":
        return _dump(pk_to_json(seq))
    if fmt == "csv":
        rows = [["k", "method", "coeffs_ascending"]]
        rows += [[k, seq.provenance[k], " ".join(p.to_json()["coeffs"])] for k, p in enumerate(seq.polys)]
        return _csv(rows)
    if fmt == "latex":
        lines = [f"P_{{{k}}}(n)&=&{p.to_latex('n')},\\\\" for k, p in enumerate(seq.polys)]
        return "\\begin{eqnarray}\n" + "\n".join(lines) + "\n\\end{eqnarray}\n"
    if fmt == "text":
        return "".join(
            f"P_{k}(n) = {p.to_text('n')}  [{'+'.join(seq.verified[k]) if seq.verified else seq.provenance[k]}]\n"
            for k, p in enumerate(seq.polys)
        )
    raise ValueError(f"unknown format {fmt!r}")


# Bernoulli

def render_bernoulli(cache: BernoulliCache, max_m: int, fmt: str) -> str:
    ms = range(max_m + 1)
    if fmt == "json":
        return _dump({
            "numbers": [format_rational(cache.number(m)) for m in ms],
            "polynomials": [{"m": m, **cache.polynomial(m).to_json()} for m in ms],
        })
    if fmt == "csv":
        rows = [["m", "B_m", "B_m(x)_coeffs_ascending"]]
        rows += [[m, format_rational(cache.number(m)), " ".join(cache.polynomial(m).to_json()["coeffs"])] for m in ms]
        return _csv(rows)
    if fmt == "latex":
        lines = [f"B_{{{m}}}&=&{_latex_rat(cache.number(m))},\\\\" for m in ms]
        lines += [f"B_{{{m}}}(x)&=&{cache.polynomial(m).to_latex('x')},\\\\" for m in ms]
        return "\\begin{eqnarray}\n" + "\n".join(lines) + "\n\\end{eqnarray}\n"
    if fmt == "text":
        lines = [f"B_{m} = {format_rational(cache.number(m))}" for m in ms]
        lines += [f"B_{m}(x) = {cache.polynomial(m).to_text('x')}" for m in ms]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def _latex_rat(x) -> str:
    return Poly.const(x).to_latex()


def bernoulli_from_json(obj: dict):
    nums = [parse_rational(s) for s in obj["numbers"]]
    polys = [Poly.from_json(d) for d in sorted(obj["polynomials"], key=lambda d: d["m"])]
    return nums, polys

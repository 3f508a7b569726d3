"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import __version__
from .expr import Degree, ParseError, format_state, parse_expression, evaluate
from .fock import BosonAlgebra, DegenerateFormError, colored_partition_count, make_algebra
from .graded import semi_primary_decompose
from .radical import (
    NotInRadicalError,
    commutant_basis,
    default_bound,
    degree,
    oinfinity_member,
    radical_decompose,
    radical_member,
    tensor_factor_dim_check,
)
from .sampling import DEFAULT_SEED
from .verify import SUITES, run_suite

REPORT_VERSION = "1"

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "algebra", "inputs", "result", "certificate", "seed", "version"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "algebra": {
            "type": "object",
            "required": ["rank", "gram"],
            "properties": {
                "rank": {"type": "integer", "minimum": 1},
                "gram": {
                    "type": "array",
                    "items": {"type": "array", "items": {"type": "string", "pattern": r"^-?\d+/\d+$"}},
                },
            },
        },
        "inputs": {"type": "object"},
        "result": {},
        "certificate": {"type": ["object", "null"]},
        "seed": {"type": "integer"},
        "version": {"const": REPORT_VERSION},
    },
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# algebra files


def load_algebra_text(text: str) -> BosonAlgebra:
    """Parse ``rank = r`` and ``gram = [[p/q, ...], ...]`` (gram may span lines)."""
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    m_rank = re.search(r"^\s*rank\s*=\s*(\d+)\s*$", body, re.MULTILINE)
    if not m_rank:
        raise UsageError("algebra file: missing 'rank = <integer>' line")
    rank = int(m_rank.group(1))
    m_gram = re.search(r"^\s*gram\s*=\s*(\[.*\])", body, re.MULTILINE | re.DOTALL)
    if not m_gram:
        if re.search(r"^\s*gram\b", body, re.MULTILINE):
            raise UsageError("algebra file: gram must look like [[p/q, ...], ...]")
        return make_algebra(rank)
    gram_text = m_gram.group(1).strip()
    inner = gram_text[1:-1] if gram_text.startswith("[") and gram_text.endswith("]") else None
    rows_text = re.findall(r"\[([^\[\]]*)\]", inner or "")
    if inner is None or not rows_text:
        raise UsageError("algebra file: gram must look like [[p/q, ...], ...]")
    rows = []
    for row in rows_text:
        entries = []
        for e in row.split(","):
            e = e.strip().strip("\"'")
            if not re.fullmatch(r"-?\d+(/\d+)?", e):
                raise UsageError(f"algebra file: malformed rational {e!r} in gram")
            try:
                entries.append(Fraction(e))
            except ZeroDivisionError:
                raise UsageError(f"algebra file: zero denominator in {e!r}") from None
        rows.append(entries)
    return make_algebra(rank, rows)


def load_algebra_file(path: str) -> BosonAlgebra:
    with open(path, encoding="utf-8") as fh:
        return load_algebra_text(fh.read())


# ---------------------------------------------------------------------------
# reports


def _report(args, algebra: BosonAlgebra, inputs: dict, result: Any, certificate: Optional[dict]) -> dict:
    return {
        "command": args.command,
        "algebra": algebra.describe(),
        "inputs": inputs,
        "result": result,
        "certificate": certificate,
        "seed": getattr(args, "seed", None) if getattr(args, "seed", None) is not None else DEFAULT_SEED,
        "version": REPORT_VERSION,
    }


def _flatten(prefix: str, value: Any, out: list[str]) -> None:
    if isinstance(value, dict):
        if not value:
            out.append(f"{prefix}: {{}}")
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), v, out)
    elif isinstance(value, list) and not all(isinstance(x, (int, float)) for x in value):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    elif isinstance(value, list):
        out.append(f"{prefix}: " + " ".join(str(x) for x in value))
    else:
        out.append(f"{prefix}: {_scalar_text(value)}")


def _scalar_text(value: Any) -> str:
    # JSON spellings, so text and JSON reports read the same
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_text(report: dict) -> str:
    lines: list[str] = []
    _flatten("", report, lines)
    return "\n".join(lines)


def emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print(render_text(report))


# ---------------------------------------------------------------------------
# commands


def _algebra(args) -> BosonAlgebra:
    if args.algebra and args.rank is not None:
        raise UsageError("give either --algebra or --rank, not both")
    if args.algebra:
        return load_algebra_file(args.algebra)
    return make_algebra(args.rank if args.rank is not None else 1)


def cmd_dims(args, algebra: BosonAlgebra) -> tuple[dict, int]:
    dims = [colored_partition_count(n, algebra.rank) for n in range(args.max_weight + 1)]
    return _report(args, algebra, {"max_weight": args.max_weight}, dims, None), 0


def _parse(args, algebra: BosonAlgebra):
    node = parse_expression(args.expr, algebra)
    if isinstance(node, Degree):
        node = node.body
    return evaluate(node, algebra)


def cmd_degree(args, algebra: BosonAlgebra) -> tuple[dict, int]:
    v = _parse(args, algebra)
    bound = args.bound if args.bound is not None else default_bound(algebra)
    res = degree(algebra, v, bound)
    cert = res.to_dict(format_state)
    cert.pop("degree")
    return _report(args, algebra, {"expr": format_state(v), "bound": bound}, res.degree, cert), 0


def cmd_radical(args, algebra: BosonAlgebra) -> tuple[dict, int]:
    v = _parse(args, algebra)
    bound = args.bound if args.bound is not None else default_bound(algebra)
    cert = radical_member(algebra, v, bound)
    return _report(
        args, algebra, {"expr": format_state(v), "bound": bound}, {"member": cert.member}, cert.to_dict(format_state)
    ), 0


def cmd_decompose(args, algebra: BosonAlgebra) -> tuple[dict, int]:
    v = _parse(args, algebra)
    parts = semi_primary_decompose(algebra, v)
    result: dict = {"semi_primary": [format_state(u) for u in parts]}
    try:
        j1, w = radical_decompose(algebra, v)
        result["radical"] = {"member": True, "j1": format_state(j1), "w": format_state(w)}
    except NotInRadicalError:
        result["radical"] = {"member": False}
    return _report(args, algebra, {"expr": format_state(v)}, result, None), 0


def cmd_oinf(args, algebra: BosonAlgebra) -> tuple[dict, int]:
    v = _parse(args, algebra)
    bound = args.bound if args.bound is not None else default_bound(algebra)
    cert = oinfinity_member(algebra, v, bound)
    return _report(
        args, algebra, {"expr": format_state(v), "bound": bound}, {"member": cert.member}, cert.to_dict(format_state)
    ), 0


def cmd_commutant(args, algebra: BosonAlgebra) -> tuple[dict, int]:
    try:
        idx = [int(x) for x in args.bosons.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--bosons expects comma-separated integers, got {args.bosons!r}") from None
    for i in idx:
        if not 1 <= i <= algebra.rank:
            raise UsageError(f"boson index {i} exceeds rank {algebra.rank}")
    hp = [[int(j == i - 1) for j in range(algebra.rank)] for i in idx]
    bases = {str(n): [format_state(s) for s in commutant_basis(algebra, hp, n)] for n in range(args.max_weight + 1)}
    check = tensor_factor_dim_check(algebra, hp, args.max_weight)
    result = {"dims": [len(bases[str(n)]) for n in range(args.max_weight + 1)], "basis": bases}
    return (
        _report(args, algebra, {"bosons": idx, "max_weight": args.max_weight}, result, check.to_dict()),
        0 if check.passed else 1,
    )


def cmd_verify(args, algebra: BosonAlgebra) -> tuple[dict, int]:
    reports = run_suite(args.suite, algebra, args.max_weight, args.seed, args.trials)
    passed = all(r.passed for r in reports)
    first = next((r for r in reports if not r.passed), None)
    result = {"passed": passed, "checks": [{"name": r.name, "passed": r.passed, "checked": r.checked} for r in reports]}
    cert = None if first is None else {"failed_check": first.name, "counterexample": first.counterexample}
    inputs = {"suite": args.suite, "max_weight": args.max_weight, "trials": args.trials}
    return _report(args, algebra, inputs, result, cert), 0 if passed else 1


COMMANDS = {
    "dims": cmd_dims,
    "degree": cmd_degree,
    "radical": cmd_radical,
    "decompose": cmd_decompose,
    "oinf": cmd_oinf,
    "commutant": cmd_commutant,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--algebra", metavar="FILE", help="algebra file with 'rank = r' and 'gram = [[...]]'")
    common.add_argument("--rank", type=int, help="rank with the identity Gram matrix (default 1)")
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = argparse.ArgumentParser(
        prog="heisenberg-voa", description="Exact computations in the Heisenberg vertex operator algebra M(1)."
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", parents=[common], help="graded dimensions")
    p.add_argument("--max-weight", type=int, default=6)

    for name, helptext in [
        ("degree", "degree of a state"),
        ("radical", "radical membership certificate"),
        ("decompose", "semi-primary and radical decompositions"),
        ("oinf", "membership in (L(0)+L(-1))V with module witness"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("expr", help='state expression, e.g. "1/2*h1(-1)h1(-1)|0> + h1(-2)|0>"')
        if name != "decompose":
            p.add_argument("--bound", type=int, help="truncation weight for witness scans")

    p = sub.add_parser("commutant", parents=[common], help="commutant of a set of bosons")
    p.add_argument("--bosons", required=True, help="comma-separated boson indices, e.g. 1,2")
    p.add_argument("--max-weight", type=int, default=6)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=sorted(SUITES), default="all")
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--trials", type=int, default=20)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        algebra = _algebra(args)
        report, code = COMMANDS[args.command](args, algebra)
    except (ParseError, UsageError, DegenerateFormError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit(report, args.format)
    return code


def main() -> None:
    sys.exit(run())

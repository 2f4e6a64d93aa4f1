"""Command-line front end for certified enclosures, series, and inequality checks.

Exit codes: 0 when every requested verdict is ``holds`` (or the command is
purely informational and succeeds), 1 when any verdict is ``undecided`` or
``violated``, 2 for usage errors (malformed rationals, out-of-domain grids,
bad flags).  All output goes to stdout; diagnostics go to stderr.

Rationals on the command line are written ``p/q``, as integers, or as
decimal literals; decimals are converted exactly, so no rounding happens at
the boundary of the system.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .elementary import iv_pi
from .interval import DomainError, Interval, parse_rational
from .polygamma import (
    batir_bstar_enclosure,
    digamma_enclosure,
    digamma_zero,
    euler_gamma_enclosure,
    trigamma_enclosure,
)
from .series import (
    AsymptoticExpansion,
    digamma_expansion,
    bernoulli,
    format_expansion,
    theta_expansion,
    trigamma_exp_digamma_expansion,
    trigamma_expansion,
)
from .theorems import (
    CertReport,
    catalog,
    certify_symbolic,
    check_grid,
    compare_bounds,
    default_grid,
    entry,
    geometric_grid,
    tightness_report,
)

__all__ = ["main"]

EXIT_OK = 0
EXIT_UNDECIDED = 1
EXIT_USAGE = 2

CERTIFY_GROUPS: dict[str, tuple[str, ...]] = {
    "thm1": ("THM1",),
    "thm2": ("THM2",),
    "thm3": ("THM3a", "THM3b"),
    "classical": ("ELE", "GUO-QI", "BATIR", "YCT", "XP1"),
    "remark1": ("R1U", "R1V", "BATIR-THETA"),
    "all": (
        "THM1",
        "THM2",
        "THM3a",
        "THM3b",
        "ELE",
        "GUO-QI",
        "BATIR",
        "YCT",
        "XP1",
        "R1U",
        "R1V",
        "BATIR-THETA",
    ),
}

SYMBOLIC_GROUPS: dict[str, tuple[str, ...]] = {
    "thm1": ("THM1",),
    "thm2": ("THM2",),
    "thm3": ("THM3a-lower",),
    "remark1": ("R1U",),
    "all": ("THM1", "THM2", "THM3a-lower", "R1U"),
}


class UsageError(Exception):
    """Bad command-line input; reported on stderr with exit code 2."""


# ---------------------------------------------------------------------------
# formatting helpers
# ---------------------------------------------------------------------------


def _decimal(value: Fraction, places: int = 20) -> str:
    """Fixed-point decimal rendering of an exact rational."""
    sign = "-" if value < 0 else ""
    scaled = round(abs(Fraction(value)) * 10**places)
    digits = str(scaled).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def _scientific(value: Fraction, digits: int = 3) -> str:
    """Scientific-notation rendering that cannot underflow like floats."""
    if value == 0:
        return "0"
    sign = "-" if value < 0 else ""
    magnitude = abs(Fraction(value))
    exponent = len(str(magnitude.numerator)) - len(str(magnitude.denominator))
    while magnitude >= 10**(exponent + 1):
        exponent += 1
    while magnitude < 10**exponent:
        exponent -= 1
    mantissa = round(magnitude * Fraction(10) ** (digits - exponent))
    if mantissa >= 10 ** (digits + 1):
        mantissa //= 10
        exponent += 1
    text = str(mantissa)
    return f"{sign}{text[0]}.{text[1:]}e{exponent:+03d}"


def _iv_text(iv: Interval, places: int = 20) -> str:
    return f"[{_decimal(iv.lo, places)}, {_decimal(iv.hi, places)}]"


def _iv_json(iv: Interval) -> dict[str, str]:
    return {
        "lo": str(iv.lo),
        "hi": str(iv.hi),
        "lo_decimal": _decimal(iv.lo, 30),
        "hi_decimal": _decimal(iv.hi, 30),
    }


def _json_value(value: object) -> object:
    if isinstance(value, Interval):
        return _iv_json(value)
    if isinstance(value, Fraction):
        return str(value)
    return value


def _print_json(payload: dict[str, object]) -> None:
    print(json.dumps(payload, indent=2))


def _print_csv(rows: list[dict[str, object]]) -> None:
    fieldnames: list[str] = []
    for row in rows:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    writer = csv.DictWriter(sys.stdout, fieldnames=fieldnames, restval="")
    writer.writeheader()
    writer.writerows(rows)


def _flatten_for_csv(row: dict[str, object]) -> dict[str, object]:
    flat: dict[str, object] = {}
    for key, value in row.items():
        if isinstance(value, Interval):
            flat[f"{key}_lo"] = str(value.lo)
            flat[f"{key}_hi"] = str(value.hi)
        elif isinstance(value, Fraction):
            flat[key] = str(value)
        else:
            flat[key] = value
    return flat


def _parse_grid_spec(spec: str) -> list[Fraction]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError(
            f"grid spec must be start:stop:count, got {spec!r}"
        )
    try:
        start = parse_rational(parts[0])
        stop = parse_rational(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad grid spec {spec!r}: {exc}") from exc
    try:
        return geometric_grid(start, stop, count)
    except ValueError as exc:
        raise UsageError(f"bad grid spec {spec!r}: {exc}") from exc


def _combined_total(totals: list[str]) -> str:
    if "violated" in totals:
        return "violated"
    if "undecided" in totals:
        return "undecided"
    return "holds"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_bern(args: argparse.Namespace) -> int:
    if args.n < 0:
        raise UsageError("bern index must be >= 0")
    values = [(n, bernoulli(n)) for n in range(args.n + 1)]
    if args.format == "json":
        _print_json(
            {
                "command": "bern",
                "max_index": args.n,
                "values": {str(n): str(v) for n, v in values},
            }
        )
    elif args.format == "csv":
        _print_csv([{"n": n, "value": str(v)} for n, v in values])
    else:
        for n, v in values:
            print(f"B_{n} = {v}")
    return EXIT_OK


def _build_series(args: argparse.Namespace) -> AsymptoticExpansion:
    if args.kind == "digamma":
        return digamma_expansion(args.order)
    if args.kind == "trigamma":
        return trigamma_expansion(args.order)
    if args.kind == "theta":
        return theta_expansion(parse_rational(args.m), args.order)
    return trigamma_exp_digamma_expansion(args.order)


def _cmd_series(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise UsageError("series order must be >= 0")
    try:
        series = _build_series(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    terms = [
        {"power": -k, "coefficient": str(series.coeff(k))}
        for k in range(-series.low_degree, series.order + 1)
    ]
    if args.format == "json":
        _print_json(
            {
                "command": "series",
                "kind": args.kind,
                "order": series.order,
                "log_coeff": str(series.log_coeff),
                "terms": terms,
            }
        )
    elif args.format == "csv":
        _print_csv(list(terms))
    else:
        print(format_expansion(series))
    return EXIT_OK


def _cmd_enclose(args: argparse.Namespace) -> int:
    x = parse_rational(args.x)
    shift = parse_rational(args.shift) if args.shift is not None else args.shift_frac
    if shift < 1:
        raise UsageError("shift target must be >= 1")
    if x <= 0:
        raise UsageError(f"{args.function} enclosure requires x > 0, got {x}")
    fn = digamma_enclosure if args.function == "digamma" else trigamma_enclosure
    enclosure = fn(x, shift)
    width = enclosure.hi - enclosure.lo
    if args.format == "json":
        _print_json(
            {
                "command": "enclose",
                "function": args.function,
                "x": str(x),
                "shift_target": str(shift),
                "enclosure": _iv_json(enclosure),
                "width": str(width),
            }
        )
    elif args.format == "csv":
        _print_csv(
            [
                {
                    "function": args.function,
                    "x": str(x),
                    "lo": str(enclosure.lo),
                    "hi": str(enclosure.hi),
                }
            ]
        )
    else:
        name = "psi" if args.function == "digamma" else "psi'"
        print(
            f"{name}({x}) in {_iv_text(enclosure)}  (width ~ {_scientific(width)})"
        )
    return EXIT_OK


_CONSTANT_LABELS = {
    "gamma": "Euler-Mascheroni constant",
    "bstar": "pi^2 / (6 exp(2 gamma))",
    "pi": "pi",
    "digamma-zero": "positive zero of psi",
}


def _cmd_const(args: argparse.Namespace) -> int:
    tolerance = parse_rational(args.tol) if args.tol is not None else None
    if tolerance is not None and tolerance <= 0:
        raise UsageError("tolerance must be positive")
    name = args.name
    if name == "digamma-zero":
        enclosure = digamma_zero(tolerance if tolerance is not None else Fraction(1, 10**6))
    else:
        if name == "pi":
            parameter: Fraction | int = max(args.precision, 8)
            produce = iv_pi
        elif name == "gamma":
            parameter = args.shift_frac
            produce = euler_gamma_enclosure
        else:
            parameter = args.shift_frac
            produce = batir_bstar_enclosure
        enclosure = produce(parameter)
        attempts = 0
        while tolerance is not None and enclosure.hi - enclosure.lo > tolerance:
            attempts += 1
            if attempts > 30:
                print("error: tolerance not reached", file=sys.stderr)
                return EXIT_UNDECIDED
            parameter = parameter * 2
            enclosure = produce(parameter)
    width = enclosure.hi - enclosure.lo
    if args.format == "json":
        _print_json(
            {
                "command": "const",
                "name": name,
                "description": _CONSTANT_LABELS[name],
                "enclosure": _iv_json(enclosure),
                "width": str(width),
            }
        )
    elif args.format == "csv":
        _print_csv(
            [{"name": name, "lo": str(enclosure.lo), "hi": str(enclosure.hi)}]
        )
    else:
        print(
            f"{name} in {_iv_text(enclosure)}  (width ~ {_scientific(width)})"
        )
    return EXIT_OK


def _report_text(report: CertReport) -> list[str]:
    lines = [f"{report.id} [{report.method}] -> {report.total}"]
    shown = 0
    for check in report.checks:
        if report.method == "symbolic":
            mark = "ok" if check.verdict == "holds" else "??"
            lines.append(f"  {mark} {check.label}: {check.evidence.get('detail', '')}")
        elif check.verdict != "holds":
            evidence = check.evidence
            lhs = Interval(Fraction(evidence["lhs_lo"]), Fraction(evidence["lhs_hi"]))
            rhs = Interval(Fraction(evidence["rhs_lo"]), Fraction(evidence["rhs_hi"]))
            lines.append(
                f"  {check.verdict.upper()} {check.label}: "
                f"lhs {_iv_text(lhs, 12)} vs rhs {_iv_text(rhs, 12)}"
            )
            shown += 1
            if shown >= 20:
                remaining = sum(
                    1 for c in report.checks if c.verdict != "holds"
                ) - shown
                if remaining > 0:
                    lines.append(f"  ... and {remaining} more")
                break
    if report.method == "grid":
        counts: dict[str, int] = {}
        for check in report.checks:
            counts[check.verdict] = counts.get(check.verdict, 0) + 1
        summary = ", ".join(f"{v}: {n}" for v, n in sorted(counts.items()))
        lines.append(f"  checks -- {summary}")
    return lines


def _certify_csv_rows(reports: list[CertReport]) -> list[dict[str, object]]:
    rows: list[dict[str, object]] = []
    for report in reports:
        for check in report.checks:
            row: dict[str, object] = {
                "id": report.id,
                "method": report.method,
                "label": check.label,
                "verdict": check.verdict,
            }
            row.update(check.evidence)
            rows.append(row)
    return rows


def _cmd_certify(args: argparse.Namespace) -> int:
    if args.symbolic and args.grid:
        raise UsageError("--symbolic and --grid are mutually exclusive")
    reports: list[CertReport] = []
    if args.symbolic:
        symbolic = SYMBOLIC_GROUPS.get(args.selection)
        if not symbolic:
            raise UsageError(
                f"no symbolic certificates for selection {args.selection!r}"
            )
        reports = [certify_symbolic(sid) for sid in symbolic]
    else:
        grid_points = _parse_grid_spec(args.grid) if args.grid else None
        for entry_id in CERTIFY_GROUPS[args.selection]:
            grid = grid_points if grid_points is not None else default_grid(entry(entry_id))
            reports.append(
                check_grid(
                    entry_id,
                    grid,
                    shift_target=args.shift_frac,
                    work_precision=args.precision,
                )
            )
    total = _combined_total([r.total for r in reports])
    if args.format == "json":
        _print_json(
            {
                "command": "certify",
                "selection": args.selection,
                "mode": "symbolic" if args.symbolic else "grid",
                "total": total,
                "reports": [r.to_json_dict() for r in reports],
            }
        )
    elif args.format == "csv":
        _print_csv(_certify_csv_rows(reports))
    else:
        for report in reports:
            for line in _report_text(report):
                print(line)
        print(f"total: {total}")
    return EXIT_OK if total == "holds" else EXIT_UNDECIDED


def _tightness_outcome(rows: list[dict[str, object]]) -> str:
    verdicts = {row["x5_verdict"] for row in rows} | {row["x7_verdict"] for row in rows}
    if "out" in verdicts:
        return "violated"
    if "undecided" in verdicts:
        return "undecided"
    return "holds"


def _cmd_report(args: argparse.Namespace) -> int:
    grid = _parse_grid_spec(args.grid)
    if args.kind == "tightness":
        rows = tightness_report(
            grid, shift_target=args.shift_frac, work_precision=args.precision
        )
        outcome = _tightness_outcome(rows)
        if args.format == "json":
            _print_json(
                {
                    "command": "report",
                    "kind": "tightness",
                    "total": outcome,
                    "rows": [
                        {key: _json_value(value) for key, value in row.items()}
                        for row in rows
                    ],
                }
            )
        elif args.format == "csv":
            _print_csv([_flatten_for_csv(row) for row in rows])
        else:
            for row in rows:
                print(
                    f"x={row['x']}: x^5*d1 ~ {_iv_text(row['x5_d1'], 12)}"
                    f" ({row['x5_verdict']}),"
                    f" x^7*d2 ~ {_iv_text(row['x7_d2'], 12)}"
                    f" ({row['x7_verdict']})"
                )
                print(
                    f"    gaps: thm1 ~ {_scientific(row['thm1_gap'].hi)},"
                    f" thm2 ~ {_scientific(row['thm2_gap'].hi)},"
                    f" thm3a = {row['thm3a_gap']},"
                    f" thm3b = {row['thm3b_gap']}"
                )
            print(f"total: {outcome}")
        return EXIT_OK if outcome == "holds" else EXIT_UNDECIDED

    comparisons = [
        compare_bounds(x, shift_target=args.shift_frac, work_precision=args.precision)
        for x in grid
    ]
    total = _combined_total([c.total for c in comparisons])
    if args.format == "json":
        _print_json(
            {
                "command": "report",
                "kind": "compare",
                "total": total,
                "points": [
                    {
                        "x": str(c.x),
                        "targets": {
                            label: _iv_json(iv) for label, iv in c.targets.items()
                        },
                        "bounds": [
                            {
                                "id": row.entry_id,
                                "side": row.side,
                                "target": row.target,
                                "enclosure": _iv_json(row.enclosure),
                            }
                            for row in c.rows
                        ],
                        "relations": [r.to_json_dict() for r in c.relations],
                    }
                    for c in comparisons
                ],
            }
        )
    elif args.format == "csv":
        rows: list[dict[str, object]] = []
        for c in comparisons:
            for row in c.rows:
                rows.append(
                    {
                        "record": "bound",
                        "x": str(c.x),
                        "id": row.entry_id,
                        "side": row.side,
                        "target": row.target,
                        "lo": str(row.enclosure.lo),
                        "hi": str(row.enclosure.hi),
                        "verdict": "",
                    }
                )
            for relation in c.relations:
                rows.append(
                    {
                        "record": "relation",
                        "x": str(c.x),
                        "id": relation.label,
                        "side": "",
                        "target": "",
                        "lo": relation.evidence.get("lhs_lo", ""),
                        "hi": relation.evidence.get("rhs_hi", ""),
                        "verdict": relation.verdict,
                    }
                )
        _print_csv(rows)
    else:
        for c in comparisons:
            print(f"x = {c.x}")
            for label, iv in sorted(c.targets.items()):
                print(f"  {label:11s} = {_iv_text(iv)}")
            for row in c.rows:
                print(
                    f"  {row.target:11s} {row.entry_id:11s} {row.side:16s}"
                    f" {_iv_text(row.enclosure)}"
                )
            for relation in c.relations:
                print(f"  {relation.verdict:9s} {relation.label}")
        print(f"total: {total}")
    return EXIT_OK if total == "holds" else EXIT_UNDECIDED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="psicert",
        description=(
            "Certified rational enclosures of digamma/trigamma values, exact "
            "asymptotic series, and replayable inequality certificates."
        ),
    )
    parser.add_argument(
        "--precision",
        type=int,
        default=64,
        help="working precision in bits, >= 8 (default 64)",
    )
    parser.add_argument(
        "--shift-target",
        default="10",
        help="argument-shift target for polygamma enclosures (default 10)",
    )
    parser.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default="text",
        help="output format (default text)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bern = sub.add_parser("bern", help="print Bernoulli numbers B_0..B_n")
    p_bern.add_argument("n", type=int)
    p_bern.set_defaults(handler=_cmd_bern)

    p_series = sub.add_parser("series", help="exact asymptotic expansions")
    p_series.add_argument(
        "kind", choices=("digamma", "trigamma", "theta", "product")
    )
    p_series.add_argument("--order", type=int, required=True)
    p_series.add_argument(
        "--m", default="1", help="theta parameter (rational, default 1)"
    )
    p_series.set_defaults(handler=_cmd_series)

    p_enclose = sub.add_parser(
        "enclose", help="certified enclosure of psi or psi' at a rational point"
    )
    p_enclose.add_argument("function", choices=("digamma", "trigamma"))
    p_enclose.add_argument("x")
    p_enclose.add_argument("--shift", default=None, help="override shift target")
    p_enclose.set_defaults(handler=_cmd_enclose)

    p_const = sub.add_parser("const", help="certified enclosures of constants")
    p_const.add_argument("name", choices=("gamma", "bstar", "pi", "digamma-zero"))
    p_const.add_argument("--tol", default=None, help="target enclosure width")
    p_const.set_defaults(handler=_cmd_const)

    p_certify = sub.add_parser(
        "certify", help="check catalog inequalities on a grid or symbolically"
    )
    p_certify.add_argument("selection", choices=tuple(CERTIFY_GROUPS))
    p_certify.add_argument("--symbolic", action="store_true")
    p_certify.add_argument(
        "--grid", default=None, help="geometric grid spec start:stop:count"
    )
    p_certify.set_defaults(handler=_cmd_certify)

    p_report = sub.add_parser(
        "report", help="tightness or bound-comparison tables"
    )
    p_report.add_argument("kind", choices=("tightness", "compare"))
    p_report.add_argument(
        "--grid", required=True, help="geometric grid spec start:stop:count"
    )
    p_report.set_defaults(handler=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.precision < 8:
            raise UsageError("precision must be at least 8 bits")
        args.shift_frac = parse_rational(str(args.shift_target))
        if args.shift_frac < 1:
            raise UsageError("shift target must be >= 1")
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

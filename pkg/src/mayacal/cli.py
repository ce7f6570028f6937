"""Command-line surface: conversions, verification suites, lunar tools, tables.

Every command builds one :class:`OutputEnvelope`; the ``--format`` flag
picks the rendering (text or JSON) of that same envelope, so the two views
never diverge.  Exit codes: 0 success, 1 verification mismatch, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import INT63_MAX, decimal_str, factorize, round_nearest
from .checks import Check, jsonable
from .correlation import GMT_CORRELATION, CorrelationConstant, describe
from .cycles import cycle_date
from .lunar import (
    MODERN_SYNODIC_MONTH,
    TABLE_SOURCES,
    LunarCandidate,
    eclipse_commensuration,
    moon_age,
    ratio_table,
    search,
    verify_palenque,
    verify_ratio_table,
    verify_search,
)
from .notation import DateParseError, era_display, parse, resolution
from .supernumber import (
    creation_residues,
    cultural_dates,
    derive_constants,
    verify_aeon_division,
    verify_aeon_identity,
    verify_cultural_dates,
    verify_grand_cycle_division,
    verify_supernumber,
    verify_xultun,
)

FORMAT_ENV_VAR = "MAYACAL_FORMAT"

VERIFY_SCOPES = ("all", "eq1", "eq2", "eq3", "eq4", "residues", "dates", "lunar", "eclipse")

#: Days the model names; convert identifies them in its output.
NAMED_DAYS = {
    0: "mythical date of creation",
    341640: "first Xultun number (X0)",
    1195740: "second Xultun number (X1)",
    1366560: "Long Round (Dresden Codex Venus table)",
    1708200: "date of the Itza prophecy (5*X0)",
    1765140: "third Xultun number (X2)",
    1872000: "end of the 13 Baktun Era",
    2448420: "fourth Xultun number (X3)",
    136656000: "Maya Aeon",
    683280000: "end of the 5 Maya Aeon",
    956592000: "end of the Maya grand cycle",
}


class UsageError(Exception):
    """Bad command input; exits 2."""


@dataclass
class OutputEnvelope:
    """One command result, rendered identically to text and JSON."""

    command: str
    status: str  # ok | mismatch | error
    payload: dict
    checks: list[Check] = field(default_factory=list)

    @classmethod
    def result(cls, command: str, payload: dict, checks: list[Check] | None = None) -> "OutputEnvelope":
        checks = checks or []
        status = "mismatch" if any(not c.passed for c in checks) else "ok"
        return cls(command=command, status=status, payload=payload, checks=checks)

    @classmethod
    def error(cls, command: str, message: str, **extra) -> "OutputEnvelope":
        return cls(command=command, status="error", payload={"error": message, **extra})

    @property
    def exit_code(self) -> int:
        return {"ok": 0, "mismatch": 1}.get(self.status, 2)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "status": self.status,
            "payload": jsonable(self.payload),
            "checks": [c.as_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"status: {self.status}"]
        lines += _text_lines(jsonable(self.payload))
        if self.checks:
            failed = sum(1 for c in self.checks if not c.passed)
            lines.append(f"checks: {len(self.checks) - failed} passed, {failed} failed")
            for c in self.checks:
                if c.passed:
                    lines.append(f"  [ok] {c.name} = {jsonable(c.computed)}")
                else:
                    lines.append(
                        f"  [FAIL] {c.name}: expected {jsonable(c.expected)}, got {jsonable(c.computed)}"
                    )
        return "\n".join(lines)


def _text_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    for key, item in value.items():
        if isinstance(item, dict):
            lines.append(f"{pad}{key}:")
            lines += _text_lines(item, indent + 1)
        elif isinstance(item, list) and item and all(isinstance(i, dict) for i in item):
            lines.append(f"{pad}{key}:")
            for entry in item:
                block = _text_lines(entry, indent + 2)
                lines.append(f"{'  ' * (indent + 1)}- {block[0].lstrip()}")
                lines += block[1:]
        elif isinstance(item, list):
            rendered = ", ".join(str(i) for i in item)
            lines.append(f"{pad}{key}: [{rendered}]")
        else:
            lines.append(f"{pad}{key}: {item}")
    return lines


def _describe_day(day: int, constant: CorrelationConstant) -> dict:
    cd = cycle_date(day)
    corr = describe(day, constant)
    payload = {
        "day": day,
        "long_count": str(cd.long_count),
        "tzolkin": str(cd.tzolkin),
        "haab": str(cd.haab),
        "tzolkin_position": cd.tzolkin_pos,
        "haab_position": cd.haab_pos,
        "kawil": cd.kawil,
        "direction_color": cd.direction_color,
        "direction_color_name": cd.direction_color_name,
    }
    if day % 1872000 == 0:
        payload["long_count_annotated"] = era_display(day)
    if day in NAMED_DAYS:
        payload["identity"] = NAMED_DAYS[day]
    payload.update(
        {
            "correlation": constant.jdn_at_creation,
            "jdn": corr.jdn,
            "julian": str(corr.julian),
            "gregorian": str(corr.gregorian),
        }
    )
    return payload


def _match_summary(day: int, constant: CorrelationConstant) -> dict:
    cd = cycle_date(day)
    corr = describe(day, constant)
    return {
        "day": day,
        "long_count": str(cd.long_count),
        "calendar_round": cd.calendar_round,
        "kawil": cd.kawil,
        "direction_color_name": cd.direction_color_name,
        "jdn": corr.jdn,
        "gregorian": str(corr.gregorian),
    }


def _parse_window(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.lstrip("-").isdigit() or not hi.lstrip("-").isdigit():
        raise UsageError(f"window must be LO..HI, got {text!r}")
    window = (int(lo), int(hi))
    if not 0 <= window[0] <= window[1]:
        raise UsageError(f"window must satisfy 0 <= lo <= hi, got {text!r}")
    return window


def cmd_convert(args, constant: CorrelationConstant) -> OutputEnvelope:
    if (args.date is None) == (args.day is None):
        raise UsageError("give exactly one of a date string or --day")
    if args.day is not None:
        if args.day < 0:
            raise UsageError(f"day must be non-negative, got {args.day}")
        return OutputEnvelope.result("convert", _describe_day(args.day, constant))

    expr = parse(args.date)
    if expr.long_count is not None:
        day = expr.long_count.days
        found = resolution(expr, (day, day))
        if found.inconsistent:
            actual = cycle_date(day)
            return OutputEnvelope.error(
                "convert",
                f"inconsistent date: {expr.long_count} is {actual.calendar_round}",
                input=args.date,
                day=day,
            )
        payload = {"input": args.date, **_describe_day(day, constant)}
        return OutputEnvelope.result("convert", payload)

    if args.window is None:
        raise UsageError("calendar-round dates recur every 18980 days; give --window LO..HI")
    window = _parse_window(args.window)
    found = resolution(expr, window)
    payload = {
        "input": args.date,
        "window": f"{window[0]}..{window[1]}",
        "count": len(found.days),
        "matches": [_match_summary(d, constant) for d in found.days],
    }
    return OutputEnvelope.result("convert", payload)


def _verify_suites(scope: str):
    constants = derive_constants()
    n = constants.n
    suites = {
        "eq1": lambda: [verify_supernumber(constants), verify_xultun(constants)],
        "eq2": lambda: [verify_grand_cycle_division(constants)],
        "eq3": lambda: [verify_aeon_division(constants)],
        "eq4": lambda: [verify_aeon_identity(constants)],
        "residues": lambda: [creation_residues(constants).report],
        "dates": lambda: [verify_cultural_dates(constants)],
        "lunar": lambda: [verify_ratio_table(n), verify_palenque(n), verify_search(n)],
        "eclipse": lambda: [eclipse_commensuration()],
    }
    if scope == "all":
        reports = []
        for name in ("eq1", "eq2", "eq3", "eq4", "residues", "dates", "lunar", "eclipse"):
            reports += suites[name]()
        return reports
    return suites[scope]()


def cmd_verify(args, constant: CorrelationConstant) -> OutputEnvelope:
    reports = _verify_suites(args.scope)
    checks = [c for report in reports for c in report.checks]
    failed = sum(1 for c in checks if not c.passed)
    payload = {
        "scope": args.scope,
        "suites": [r.title for r in reports],
        "checks_total": len(checks),
        "checks_failed": failed,
    }
    return OutputEnvelope.result("verify", payload, checks)


def _candidate_row(c: LunarCandidate) -> dict:
    return {
        "days": c.days,
        "lunations": c.lunations,
        "ratio": c.ratio_str,
        "ratio_decimal": decimal_str(c.ratio, 6),
        "error": str(c.error),
        "error_decimal": decimal_str(c.error, 6),
        "lcm_260": c.lcm260 if c.lcm260 else None,
    }


def cmd_lunar(args, constant: CorrelationConstant) -> OutputEnvelope:
    n = derive_constants().n
    if args.subcommand == "table":
        rows = ratio_table(n)
        payload_rows = []
        for row in rows[:-1]:
            entry = _candidate_row(row)
            entry["error_rounded"] = round_nearest(row.error)
            entry["source"] = TABLE_SOURCES[row.days]
            payload_rows.append(entry)
        modern = rows[-1]
        payload = {
            "supernumber": n,
            "rows": payload_rows,
            "modern": {
                "ratio_decimal": decimal_str(modern.ratio, 6),
                "error": str(modern.error),
                "error_rounded": round_nearest(modern.error),
            },
        }
        return OutputEnvelope.result("lunar table", payload, verify_ratio_table(n).checks)

    if args.subcommand == "search":
        if args.max < 1:
            raise UsageError(f"--max must be >= 1, got {args.max}")
        result = search(n, max_lunations=args.max)
        payload = {
            "supernumber": n,
            "max_lunations": args.max,
            "target": decimal_str(MODERN_SYNODIC_MONTH, 6),
            "scanned": len(result.candidates),
            "within_calendar_round": len(result.filtered),
            "zero_error": [_candidate_row(c) for c in result.zero_error],
            "minimal_nonzero": [_candidate_row(c) for c in result.minimal_nonzero],
            "best": _candidate_row(result.best) if result.best else None,
            "pareto": [_candidate_row(c) for c in result.pareto],
        }
        # The published-outcome checks only apply to the full 643-lunation scan.
        checks = verify_search(n).checks if args.max == 643 else []
        return OutputEnvelope.result("lunar search", payload, checks)

    # age
    lc = _parse_day_arg(args.lc, "--lc")
    lc0 = _parse_day_arg(args.lc0, "--lc0")
    ratio = _parse_ratio(args.ratio)
    if lc < lc0:
        raise UsageError(f"--lc day {lc} precedes --lc0 day {lc0}")
    age = moon_age(lc, lc0, ratio)
    payload = {
        "lc": lc,
        "lc0": lc0,
        "ratio": f"{ratio.numerator}/{ratio.denominator}",
        "age": str(age),
        "age_decimal": decimal_str(age, 6),
    }
    return OutputEnvelope.result("lunar age", payload)


def _parse_day_arg(text: str, flag: str) -> int:
    """A day number given as an integer or a Long Count string."""
    if text.lstrip("-").isdigit():
        day = int(text)
        if day < 0:
            raise UsageError(f"{flag} must be non-negative, got {day}")
        return day
    expr = parse(text)
    if expr.long_count is None:
        raise UsageError(f"{flag} needs a day number or a Long Count date, got {text!r}")
    day = expr.long_count.days
    if not expr.matches(cycle_date(day)):
        raise UsageError(f"{flag}: {text!r} is not self-consistent")
    return day


def _parse_ratio(text: str) -> Fraction:
    num, sep, den = text.partition("/")
    if not sep or not num.isdigit() or not den.isdigit() or int(den) == 0 or int(num) == 0:
        raise UsageError(f"ratio must be DAYS/LUNATIONS with positive integers, got {text!r}")
    return Fraction(int(num), int(den))


def cmd_factor(args, constant: CorrelationConstant) -> OutputEnvelope:
    if args.n < 1 or args.n > INT63_MAX:
        raise UsageError(f"n must be in 1..{INT63_MAX}, got {args.n}")
    factors = factorize(args.n)
    payload = {
        "n": args.n,
        "factorization": str(factors),
        "factors": {str(p): m for p, m in factors.factors},
    }
    return OutputEnvelope.result("factor", payload)


def cmd_table(args, constant: CorrelationConstant) -> OutputEnvelope:
    constants = derive_constants()
    rows = []
    for row in cultural_dates(constants):
        corr = describe(row.day, constant)
        rows.append(
            {
                "label": row.label,
                "meaning": row.meaning,
                "day": row.day,
                "long_count": row.lcc_display,
                "calendar_round": row.cycle.calendar_round,
                "kawil": row.cycle.kawil,
                "direction_color_name": row.cycle.direction_color_name,
                "position": list(row.position),
                "gregorian": str(corr.gregorian),
            }
        )
    payload = {"table": "cultural-dates", "rows": rows}
    return OutputEnvelope.result("table", payload, verify_cultural_dates(constants).checks)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mayacal",
        description="Exact arithmetic for the Maya calendar: cycle conversions, "
        "super-number identities, lunar ratios, and civil-date correlation.",
    )
    _output_flags(parser, top=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert a date string or day number to every cycle")
    p.add_argument("date", nargs="?", help="Long Count (9.9.16.0.0), Calendar Round "
                   "(4 Ahau 8 Cumku), or combined date string")
    p.add_argument("--day", type=int, help="day number since creation")
    p.add_argument("--window", help="inclusive day range LO..HI for recurring dates")
    _output_flags(p)

    p = sub.add_parser("verify", help="run the identity suites")
    p.add_argument("scope", nargs="?", default="all", choices=VERIFY_SCOPES)
    _output_flags(p)

    p = sub.add_parser("lunar", help="lunar ratio table, lunation search, Moon age")
    lunar_sub = p.add_subparsers(dest="subcommand", required=True)
    t = lunar_sub.add_parser("table", help="attested lunar equations and their errors")
    _output_flags(t)
    s = lunar_sub.add_parser("search", help="scan lunar equations against the super-number")
    s.add_argument("--max", type=int, default=643, help="largest lunation count to scan")
    _output_flags(s)
    a = lunar_sub.add_parser("age", help="days into the lunation at a date")
    a.add_argument("--lc", required=True, help="date (day number or Long Count)")
    a.add_argument("--lc0", required=True, help="new-Moon anchor (day number or Long Count)")
    a.add_argument("--ratio", default="2392/81", help="Moon ratio DAYS/LUNATIONS")
    _output_flags(a)

    p = sub.add_parser("factor", help="prime factorization of a positive integer")
    p.add_argument("n", type=int)
    _output_flags(p)

    p = sub.add_parser("table", help="emit a named table")
    p.add_argument("name", choices=("cultural-dates",))
    _output_flags(p)
    return parser


def _output_flags(parser: argparse.ArgumentParser, top: bool = False) -> None:
    # Subparser copies use SUPPRESS so a flag before the subcommand survives.
    default = None if top else argparse.SUPPRESS
    parser.add_argument(
        "--format",
        choices=("text", "json"),
        default=default,
        help=f"output rendering (default text; ${FORMAT_ENV_VAR} overrides)",
    )
    parser.add_argument(
        "--correlation",
        type=int,
        default=default,
        metavar="JDN",
        help=f"JDN of day 0 (default {GMT_CORRELATION}, the GMT correlation)",
    )


HANDLERS = {
    "convert": cmd_convert,
    "verify": cmd_verify,
    "lunar": cmd_lunar,
    "factor": cmd_factor,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    fmt = args.format
    if fmt is None:
        env = os.environ.get(FORMAT_ENV_VAR, "")
        fmt = env if env in ("text", "json") else "text"
    correlation = args.correlation if args.correlation is not None else GMT_CORRELATION
    if correlation <= 0:
        print(f"mayacal: error: correlation constant must be positive, got {correlation}", file=sys.stderr)
        return 2
    label = "GMT" if correlation == GMT_CORRELATION else "custom"
    constant = CorrelationConstant(jdn_at_creation=correlation, label=label)

    try:
        envelope = HANDLERS[args.command](args, constant)
    except DateParseError as exc:
        envelope = OutputEnvelope.error(args.command, str(exc), position=exc.position)
    except (UsageError, ValueError, OverflowError) as exc:
        envelope = OutputEnvelope.error(args.command, str(exc))

    print(envelope.to_json() if fmt == "json" else envelope.to_text())
    return envelope.exit_code


if __name__ == "__main__":
    sys.exit(main())

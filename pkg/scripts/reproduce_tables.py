#!/usr/bin/env python3
"""Reproduce every table and identity of the model on stdout.

Runs the full verification pipeline and prints the input periods, the
Xultun numbers, the super-number identities, the cultural dates, and the
lunar ratio table in one pass.  Exits nonzero if any identity fails.
"""

import sys

from mayacal.arith import decimal_str, factorize, round_nearest
from mayacal.correlation import describe
from mayacal.lunar import TABLE_SOURCES, eclipse_commensuration, ratio_table, verify_palenque, verify_ratio_table, verify_search
from mayacal.supernumber import (
    CANONICAL_PERIODS,
    XULTUN,
    creation_residues,
    cultural_dates,
    derive_constants,
    verify_aeon_identity,
    verify_cultural_dates,
    verify_euclid_identities,
    verify_supernumber,
    verify_xultun,
)

PERIOD_NAMES = (
    "Mercury", "Venus", "Earth (Haab')", "Mars", "Jupiter", "Saturn",
    "lunar semester", "lunar semester", "pentalunex",
)


def show(report):
    mark = "ok " if report.ok else "FAIL"
    print(f"[{mark}] {report.title}: {len(report.checks)} checks")
    for check in report.failures:
        print(f"    FAIL {check.name}: expected {check.expected}, got {check.computed}")
    return report.ok


def main():
    print("input periods")
    for name, period in zip(PERIOD_NAMES, CANONICAL_PERIODS.as_tuple()):
        print(f"  {name:<16} {period:>4}  = {factorize(period)}")

    constants = derive_constants()
    print(f"\nsuper-number N = {constants.n} = {constants.n_factors}")
    print(f"Xultun numbers: {XULTUN} (unit 56940, ratios {[x // 56940 for x in XULTUN]})")

    print("\nidentity suites")
    ok = True
    for report in (
        verify_supernumber(constants),
        verify_xultun(constants),
        verify_euclid_identities(constants),
        verify_aeon_identity(constants),
        creation_residues(constants).report,
        verify_cultural_dates(constants),
        verify_ratio_table(constants.n),
        verify_palenque(constants.n),
        verify_search(constants.n),
        eclipse_commensuration(),
    ):
        ok = show(report) and ok

    print("\ncultural dates")
    for row in cultural_dates(constants):
        t, h, k, n = row.position
        gregorian = describe(row.day).gregorian
        print(
            f"  {row.label:<4} day {row.day:>9}  {row.lcc_display:<18} "
            f"{row.cycle.calendar_round:<16} {{{t};{h};{k};{n}}}  {gregorian}"
        )

    print("\nlunar ratio table")
    rows = ratio_table(constants.n)
    for row in rows[:-1]:
        print(
            f"  T={row.days:>5}  L={row.lunations:>3}  S={decimal_str(row.ratio, 6)}"
            f"  eps={decimal_str(row.error, 2):>5} (~{round_nearest(row.error)})"
            f"  {TABLE_SOURCES[row.days]}"
        )
    modern = rows[-1]
    print(f"  modern          S={decimal_str(modern.ratio, 6)}  eps={decimal_str(modern.error, 2)} (~{round_nearest(modern.error)})")

    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

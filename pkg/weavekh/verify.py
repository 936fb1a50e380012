"""Oracle suites cross-checking the recursion, the Jones and Khovanov pipelines and the signatures."""

import logging
import math
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Dict, List

import pandas as pd

from weavekh.diagram import signature_closed_form, signature_alternating, weaving_braid
from weavekh.exceptions import DegenerateFitError, WeaveKhError
from weavekh.gaussfit import fit_quadratic, integral, normalize
from weavekh.hecke import HeckeCoeffs, degree_bounds, iter_coeffs, observed_degrees, verify_row
from weavekh.jones import jones_from_coeffs, kauffman_oracle, trace_numerator
from weavekh.khovanov import (
    euler_characteristic_holds,
    khovanov_table,
    knight_move_divisible,
    support_offsets,
)
from weavekh.laurent import shift

logger = logging.getLogger(__name__)

ORACLE_MAX_N = 30
KAUFFMAN_MAX_N = 8
NORMALIZED_SUM_TOLERANCE = 1e-12
INTEGRAL_TOLERANCE = 1e-9


@dataclass
class CheckResult:
    """Outcome of one suite: how many cases ran and which ones failed."""

    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, label: str, ok: bool):
        self.cases += 1
        if not ok:
            self.failures.append(label)
            logger.warning("Check %s failed for %s", self.name, label)


@dataclass
class VerificationReport:
    checks: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "check": [c.name for c in self.checks],
                "cases": [c.cases for c in self.checks],
                "failures": [len(c.failures) for c in self.checks],
                "status": ["pass" if c.passed else "FAIL" for c in self.checks],
            },
            columns=["check", "cases", "failures", "status"],
        )

    def to_json(self) -> Dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "cases": c.cases, "failures": c.failures, "passed": c.passed}
                for c in self.checks
            ],
        }

    def render(self) -> str:
        lines = [
            f"{c.name}: {'pass' if c.passed else 'FAIL'} ({c.cases - len(c.failures)}/{c.cases})"
            for c in self.checks
        ]
        lines.append("all checks passed" if self.passed else "verification FAILED")
        return "\n".join(lines)


def check_recursion_facts(rows: List[HeckeCoeffs]) -> List[CheckResult]:
    """Vanishing of C121, degree bounds, low coefficients of C0 and C1, top-term cancellation."""
    c121 = CheckResult("hecke_c121_zero")
    degrees = CheckResult("hecke_degree_bounds")
    low_terms = CheckResult("hecke_low_coefficients")
    top_terms = CheckResult("hecke_top_term_cancellation")
    for row in rows:
        n = row.n
        c121.record(f"n={n}", not row.c121)
        observed = observed_degrees(row)
        degrees.record(
            f"n={n}",
            all(
                observed[name] is None or observed[name] <= bound
                for name, bound in degree_bounds(n).items()
            ),
        )
        ok = row.c0.coefficient(0) == 0 and row.c1.coefficient(0) == (-1) ** (n - 1)
        if n >= 2:
            ok = ok and row.c0.coefficient(1) == (-1) ** (n - 2)
        low_terms.record(f"n={n}", ok)
        top_terms.record(
            f"n={n}",
            row.c1.coefficient(2 * n - 1) + row.c12.coefficient(2 * n - 2) == 0,
        )
    return [c121, degrees, low_terms, top_terms]


def check_hecke_oracle(rows: List[HeckeCoeffs]) -> CheckResult:
    """Recursion rows against direct multiplication in H_3."""
    result = CheckResult("hecke_oracle")
    for row in rows[:ORACLE_MAX_N]:
        result.record(f"n={row.n}", verify_row(row.n, row))
    return result


def check_jones(rows: List[HeckeCoeffs]) -> List[CheckResult]:
    """Closed form against the trace, the state sum, the span and the value at t=1."""
    trace = CheckResult("jones_trace_numerator")
    oracle = CheckResult("jones_kauffman_oracle")
    degrees = CheckResult("jones_span_and_lowest_term")
    unit = CheckResult("jones_value_at_one")
    for row in rows:
        n = row.n
        jones = jones_from_coeffs(row)
        trace.record(f"n={n}", trace_numerator(row) == shift(jones.v, n + 1))
        if gcd(3, n) != 1:
            continue
        if n <= KAUFFMAN_MAX_N:
            oracle.record(f"n={n}", kauffman_oracle(weaving_braid(3, n)) == jones.v)
        if n >= 2:
            degrees.record(
                f"n={n}",
                jones.min_deg == -n
                and jones.span == 2 * n
                and jones.v.coefficient(-n) == (-1) ** (n - 2),
            )
        unit.record(f"n={n}", sum(jones.v.terms.values()) == 1)
    return [trace, oracle, degrees, unit]


def check_khovanov(rows: List[HeckeCoeffs]) -> List[CheckResult]:
    """Euler characteristic, support lines and knight-move divisibility."""
    euler = CheckResult("khovanov_euler_characteristic")
    support = CheckResult("khovanov_support_lines")
    knight = CheckResult("khovanov_knight_move")
    for row in rows:
        n = row.n
        if gcd(3, n) != 1:
            continue
        try:
            table = khovanov_table(n, jones=jones_from_coeffs(row))
        except WeaveKhError as error:
            for check in (euler, support, knight):
                check.record(f"n={n} ({error.code})", False)
            continue
        euler.record(f"n={n}", euler_characteristic_holds(table))
        support.record(f"n={n}", set(support_offsets(table)) <= {-1, 1})
        knight.record(f"n={n}", knight_move_divisible(table))
    return [euler, support, knight]


def check_gaussfit_normalization(rows: List[HeckeCoeffs]) -> CheckResult:
    """Normalized Betti numbers sum to 1 and the fitted density integrates to 1.

    Lines with fewer than three points, or flat ones, admit no fit and are
    skipped.
    """
    result = CheckResult("gaussfit_normalization")
    for row in rows:
        n = row.n
        if gcd(3, n) != 1:
            continue
        try:
            table = khovanov_table(n, jones=jones_from_coeffs(row), flag_convention=False)
            nb = normalize(table.betti_line, n)
        except WeaveKhError as error:
            result.record(f"n={n} ({error.code})", False)
            continue
        if len(nb.points) < 3:
            continue
        try:
            fit = fit_quadratic(nb)
        except DegenerateFitError:
            logger.debug("W(3,%d): flat Betti line, no fit to normalize", n)
            continue
        total = math.fsum(value for _, value in nb.points)
        result.record(
            f"n={n}",
            abs(total - 1) <= NORMALIZED_SUM_TOLERANCE
            and abs(integral(fit) - 1) <= INTEGRAL_TOLERANCE,
        )
    return result


def check_signatures(max_strands: int = 8, max_periods: int = 20) -> CheckResult:
    """Diagram signature against the closed form for 3 <= p <= max_strands."""
    result = CheckResult("signature_closed_form")
    for p in range(3, max_strands + 1):
        for q in range(1, max_periods + 1):
            result.record(
                f"p={p},q={q}",
                signature_alternating(weaving_braid(p, q)) == signature_closed_form(p, q),
            )
    return result


def run_checks(n_max: int, inject_fault: bool = False) -> VerificationReport:
    """Run every suite for n = 1, ..., n_max.

    Parameters
    ----------
    n_max: int
        Largest braid power to check; the H_3 oracle stops at 30 and the
        state-sum oracle at 8.
    inject_fault: bool = False
        Corrupt the last coefficient row before checking, so that the
        failure path can be exercised.
    """
    rows = list(iter_coeffs(max(n_max, 0)))
    if inject_fault and rows:
        rows[-1] = replace(rows[-1], c0=rows[-1].c0 + 1)
        logger.info("Injected a fault into coefficient row %d", rows[-1].n)
    checks = [
        *check_recursion_facts(rows),
        check_hecke_oracle(rows),
        *check_jones(rows),
        *check_khovanov(rows),
        check_gaussfit_normalization(rows),
        check_signatures(),
    ]
    return VerificationReport(checks)

"""Verification reports.

A report is exact pass/fail. Failures carry the address of the first
mismatching coefficient so a broken identity can be located quickly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from hodgeint.algebra.series import LambdaSeries


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **info) -> None:
        self.failures.append(info)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def merge(self, other: Report) -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)
        self.notes.extend(other.notes)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.checked} checks"
        if self.failures:
            line += f", {len(self.failures)} failures; first: {self.failures[0]}"
        return line


def series_mismatch(expected: LambdaSeries, actual: LambdaSeries, order: int):
    """Locate the first differing coefficient up to ``order``.

    Returns ``None`` on agreement, else ``(lambda_exp, tau_exp, expected, actual)``
    with the coefficients rendered as strings.
    """
    top = min(order, expected.order, actual.order)
    for k in range(min(expected.effective_valuation, actual.effective_valuation), top + 1):
        e, a = expected.coeff(k), actual.coeff(k)
        if e != a:
            exps = sorted(set(e.terms) | set(a.terms))
            for t in exps:
                if e.coeff(t) != a.coeff(t):
                    return k, t, str(e.coeff(t)), str(a.coeff(t))
    return None


def check_series(report: Report, key, expected: LambdaSeries, actual: LambdaSeries, order: int) -> bool:
    """Compare two series through ``order`` and record the outcome in ``report``."""
    report.checked += 1
    if expected.order < order or actual.order < order:
        report.fail(key=key, reason="insufficient order",
                    available=min(expected.order, actual.order), requested=order)
        return False
    bad = series_mismatch(expected, actual, order)
    if bad is None:
        return True
    lam, tau, e, a = bad
    report.fail(key=key, lambda_exp=lam, tau_exp=tau, expected=e, actual=a)
    return False

"""Support length: extent of the contiguous admissible CoP interval of a sweep."""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from softfoot.harness.errors import HarnessError
from softfoot.harness.sweep import SweepEvaluator, SweepRow, SweepTable

__all__ = [
    "SupportInterval",
    "SupportSummary",
    "support_length",
    "max_compensation",
]

_XTOL = 1e-9


@dataclass(frozen=True, slots=True)
class SupportInterval:
    """Admissible CoP interval of one branch [m] and its compensation range [rad]."""

    branch: str
    start: float
    stop: float
    compensation_min: float
    compensation_max: float
    refined: bool = False

    @property
    def length(self) -> float:
        return abs(self.stop - self.start)

    def contains(self, x: float) -> bool:
        return min(self.start, self.stop) <= x <= max(self.start, self.stop)


@dataclass(frozen=True, slots=True)
class SupportSummary:
    """All admissible intervals and the primary one.

    The primary interval contains the middle of the CoP range the sweep
    reached, else it is the longest.
    """

    intervals: tuple[SupportInterval, ...]
    primary: SupportInterval | None
    diagnostic: HarnessError | None = None

    @property
    def length(self) -> float:
        return 0.0 if self.primary is None else self.primary.length

    @property
    def compensation_range(self) -> tuple[float, float] | None:
        if self.primary is None:
            return None
        return (self.primary.compensation_min, self.primary.compensation_max)


def _runs(rows: tuple[SweepRow, ...]) -> list[tuple[int, int]]:
    """Index ranges [i, j] of consecutive admissible rows sharing a branch."""
    runs: list[tuple[int, int]] = []
    start: int | None = None
    for k, row in enumerate(rows):
        continues = start is not None and row.admissible and rows[k - 1].branch == row.branch
        if continues:
            continue
        if start is not None:
            runs.append((start, k - 1))
        start = k if row.admissible else None
    if start is not None:
        runs.append((start, len(rows) - 1))
    return runs


def _cop_center(rows: tuple[SweepRow, ...]) -> float:
    """Middle of the finite CoP values of a sweep [m]."""
    cops = [row.cop for row in rows if math.isfinite(row.cop)]
    return 0.5 * (min(cops) + max(cops))


def _refine(evaluate: SweepEvaluator, outside: SweepRow, inside: SweepRow) -> float | None:
    """CoP at the margin root between an inadmissible and an admissible row of one branch."""
    if outside.branch != inside.branch:
        return None
    if not (math.isfinite(outside.margin) and outside.margin < 0.0 < inside.margin):
        return None

    def value(x: float) -> float:
        return evaluate(x).margin

    lo, hi = sorted((outside.swept_value, inside.swept_value))
    try:
        root = float(brentq(value, lo, hi, xtol=_XTOL))
    except ValueError:
        return None
    cop = evaluate(root).cop
    return cop if math.isfinite(cop) else None


def support_length(table: SweepTable, evaluate: SweepEvaluator | None = None) -> SupportSummary:
    """Admissible CoP intervals of a sweep, endpoints refined on the margin when possible.

    With `evaluate`, an endpoint next to an inadmissible row of the same branch
    moves to the CoP where the margin between the two rows crosses zero.
    """
    rows = table.rows
    intervals: list[SupportInterval] = []
    for i, j in _runs(rows):
        start, stop = rows[i].cop, rows[j].cop
        refined = False
        if evaluate is not None:
            if i > 0 and (root := _refine(evaluate, rows[i - 1], rows[i])) is not None:
                start, refined = root, True
            if j + 1 < len(rows) and (root := _refine(evaluate, rows[j + 1], rows[j])) is not None:
                stop, refined = root, True
        compensations = [row.ankle_compensation for row in rows[i : j + 1]]
        intervals.append(
            SupportInterval(
                branch=rows[i].branch,
                start=start,
                stop=stop,
                compensation_min=min(compensations),
                compensation_max=max(compensations),
                refined=refined,
            )
        )

    if not intervals:
        diagnostic = HarnessError(
            kind="no_admissible_rows",
            message="no admissible rows",
            hint="widen the sweep range or relax the ankle limit",
        )
        return SupportSummary(intervals=(), primary=None, diagnostic=diagnostic)
    center = _cop_center(rows)
    containing = [interval for interval in intervals if interval.contains(center)]
    primary = containing[0] if containing else max(intervals, key=lambda s: s.length)
    return SupportSummary(intervals=tuple(intervals), primary=primary)


def max_compensation(table: SweepTable) -> float:
    """Largest |ankle compensation| over the rows of a sweep [rad]."""
    values = [abs(row.ankle_compensation) for row in table.rows]
    finite = [v for v in values if math.isfinite(v)]
    return max(finite, default=0.0)

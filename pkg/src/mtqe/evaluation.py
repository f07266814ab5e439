"""Comparison of human and classifier grades.

Counts per-grade histograms, positional same-grade agreement, and the full
4x4 confusion matrix.  Percentages are kept at full precision internally
and rendered to two decimals with round-half-even.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LengthMismatch
from .grading import Grade


@dataclass(frozen=True)
class GradeHistogram:
    """Per-grade counts; every grade has a key, zero when absent."""

    counts: dict[Grade, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class AgreementReport:
    """Positional same-grade count out of a total."""

    same: int
    total: int

    @property
    def percentage(self) -> float:
        return 100.0 * self.same / self.total


@dataclass(frozen=True)
class ConfusionMatrix:
    """(human grade, predicted grade) -> count, all 16 cells present."""

    cells: dict[tuple[Grade, Grade], int]

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    def trace(self) -> int:
        return sum(self.cells[(g, g)] for g in Grade)

    def human_histogram(self) -> GradeHistogram:
        return GradeHistogram(
            {g: sum(self.cells[(g, p)] for p in Grade) for g in Grade}
        )

    def predicted_histogram(self) -> GradeHistogram:
        return GradeHistogram(
            {p: sum(self.cells[(g, p)] for g in Grade) for p in Grade}
        )


def histogram(grades) -> GradeHistogram:
    counts = {g: 0 for g in Grade}
    for grade in grades:
        counts[grade] += 1
    return GradeHistogram(counts)


def agreement(human, predicted) -> AgreementReport:
    """Count positions where both sequences carry the identical grade."""
    human = list(human)
    predicted = list(predicted)
    if len(human) != len(predicted):
        raise LengthMismatch(len(human), len(predicted))
    if not human:
        raise ValueError("agreement needs at least one graded position")
    same = sum(1 for h, p in zip(human, predicted) if h == p)
    return AgreementReport(same, len(human))


def confusion(human, predicted) -> ConfusionMatrix:
    """Cross-tabulate human (rows) against predicted (columns) grades."""
    human = list(human)
    predicted = list(predicted)
    if len(human) != len(predicted):
        raise LengthMismatch(len(human), len(predicted))
    cells = {(h, p): 0 for h in Grade for p in Grade}
    for h, p in zip(human, predicted):
        cells[(h, p)] += 1
    return ConfusionMatrix(cells)


def format_percentage(value: float) -> str:
    """Two decimal places, ties rounded half-even."""
    return f"{value:.2f}"


def render_report_csv(
    human_hist: GradeHistogram,
    predicted_hist: GradeHistogram,
    report: AgreementReport,
) -> str:
    lines = ["grade,human_count,predicted_count"]
    for grade in Grade:
        lines.append(
            f"{grade.label},{human_hist.counts[grade]},{predicted_hist.counts[grade]}"
        )
    lines.append("same,total,percentage")
    lines.append(f"{report.same},{report.total},{format_percentage(report.percentage)}")
    return "\n".join(lines) + "\n"


def render_report_text(matrix: ConfusionMatrix, report: AgreementReport) -> str:
    human_hist = matrix.human_histogram()
    predicted_hist = matrix.predicted_histogram()
    width = max(len(g.label) for g in Grade)
    lines = ["grade counts (human vs predicted)"]
    for grade in Grade:
        lines.append(
            f"  {grade.label:<{width}}  human={human_hist.counts[grade]:<6d}"
            f" predicted={predicted_hist.counts[grade]}"
        )
    lines.append("")
    lines.append("confusion matrix (rows human, columns predicted)")
    header = "  " + " " * width + "  " + "  ".join(f"{g.label:>9}" for g in Grade)
    lines.append(header)
    for h in Grade:
        row = "  ".join(f"{matrix.cells[(h, p)]:>9d}" for p in Grade)
        lines.append(f"  {h.label:<{width}}  {row}")
    lines.append("")
    lines.append(
        f"agreement: {report.same} of {report.total}"
        f" ({format_percentage(report.percentage)}%)"
    )
    return "\n".join(lines) + "\n"

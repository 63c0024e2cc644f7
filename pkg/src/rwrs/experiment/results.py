"""Result rows, verdicts and their CSV files."""
import csv
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from ..constants import CSV_DIGITS, CSV_HEADER, EXIT_FAIL, EXIT_PASS
from ..errors import DomainError, OutputError
from ..kernels.fit import FitReport


def format_number(value: float) -> str:
    """17 significant digits; `-0.0` prints as `0`."""
    return f"{float(value) + 0.0:.{CSV_DIGITS}g}"


@dataclass(frozen=True)
class ResultRow:
    regime: str
    a: float
    estimate: complex
    stat_err: float
    trunc_err: float
    predicted: float
    ratio: float

    @staticmethod
    def of(
        regime: str,
        a: float,
        estimate: complex,
        stat_err: float,
        trunc_err: float,
        predicted: float,
        with_ratio: bool = True,
    ) -> "ResultRow":
        """
        A row whose ratio is `Re(estimate) / predicted`; `nan` when nothing is predicted
        or `with_ratio` is off.
        """
        estimate = complex(estimate)
        usable = with_ratio and predicted != 0 and math.isfinite(predicted)
        ratio = estimate.real / predicted if usable else math.nan
        return ResultRow(
            regime=regime,
            a=float(a),
            estimate=estimate,
            stat_err=float(stat_err),
            trunc_err=float(trunc_err),
            predicted=float(predicted),
            ratio=float(ratio),
        )

    def to_record(self) -> list[str]:
        numbers = (
            self.a,
            self.estimate.real,
            self.estimate.imag,
            self.stat_err,
            self.trunc_err,
            self.predicted,
            self.ratio,
        )
        return [self.regime, *map(format_number, numbers)]

    @staticmethod
    def from_record(record: Sequence[str]) -> "ResultRow":
        regime, a, real, imag, stat_err, trunc_err, predicted, ratio = record
        return ResultRow(
            regime=regime,
            a=float(a),
            estimate=complex(float(real), float(imag)),
            stat_err=float(stat_err),
            trunc_err=float(trunc_err),
            predicted=float(predicted),
            ratio=float(ratio),
        )


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str
    hard: bool = True


@dataclass(frozen=True)
class Verdict:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if check.hard)

    @property
    def label(self) -> str:
        return "PASS" if self.passed else "FAIL"

    @property
    def exit_code(self) -> int:
        return EXIT_PASS if self.passed else EXIT_FAIL


@dataclass(frozen=True)
class ExperimentResult:
    kind: str
    regime: str
    rows: list[ResultRow]
    verdict: Verdict
    fit: Optional[FitReport] = None
    notes: list[str] = field(default_factory=list)


def emit_csv(rows: Sequence[ResultRow], path: Path) -> Path:
    if not rows:
        raise DomainError("emit_csv", "there are no rows to write")
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", newline="", encoding="utf-8") as file:
            writer = csv.writer(file, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            writer.writerows(row.to_record() for row in rows)
    except OSError as exc:
        raise OutputError(str(target), exc.strerror or str(exc)) from exc
    return target


def read_csv(path: Path) -> list[ResultRow]:
    source = Path(path)
    try:
        with open(source, newline="", encoding="utf-8") as file:
            records = list(csv.reader(file))
    except OSError as exc:
        raise OutputError(str(source), exc.strerror or str(exc)) from exc
    if not records or tuple(records[0]) != CSV_HEADER:
        raise OutputError(str(source), f"expected the header {','.join(CSV_HEADER)}")
    try:
        return [ResultRow.from_record(record) for record in records[1:]]
    except ValueError as exc:
        raise OutputError(str(source), f"malformed row: {exc}") from exc

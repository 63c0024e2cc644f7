"""Console rendering of experiment results"""

from rich.console import Console
from rich.markdown import Markdown
from rich.table import Table

from .markdown import verdict_to_markdown
from ...experiment.results import ExperimentResult


def result_table(result: ExperimentResult) -> Table:
    table = Table(title=f"{result.kind} ({result.regime})")
    for column in ("Label", "a", "Estimate", "Stat err", "Trunc err", "Predicted"):
        table.add_column(column, justify="left" if column == "Label" else "right")
    table.add_column("Ratio", justify="right")
    for row in result.rows:
        table.add_row(
            row.regime,
            f"{row.a:g}",
            f"{row.estimate.real:.6g}{row.estimate.imag:+.2g}i",
            f"{row.stat_err:.2g}",
            f"{row.trunc_err:.2g}",
            f"{row.predicted:.6g}",
            f"{row.ratio:.4f}",
        )
    return table


def print_result(console: Console, result: ExperimentResult):
    console.print(result_table(result), Markdown(verdict_to_markdown(result)))

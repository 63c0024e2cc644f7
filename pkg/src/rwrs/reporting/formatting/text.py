"""
Simple experiment result formatters
"""
from ...experiment.results import Check, ExperimentResult, ResultRow


def check_label(check: Check) -> str:
    if check.passed:
        return "PASS"
    return "FAIL" if check.hard else "soft FAIL"


def row_to_string(row: ResultRow) -> str:
    estimate = f"{row.estimate.real:.6g}{row.estimate.imag:+.6g}i"
    return (
        f"{row.regime} a={row.a:g} estimate={estimate} stat={row.stat_err:.2g} "
        f"trunc={row.trunc_err:.2g} predicted={row.predicted:.6g} "
        f"ratio={row.ratio:.4f}\n"
    )


def to_string(result: ExperimentResult) -> str:
    lines = [f"Experiment {result.kind} ({result.regime})\n"]
    lines.extend(row_to_string(row) for row in result.rows)
    lines.extend(
        f"[{check_label(check)}] {check.name}: {check.detail}\n"
        for check in result.verdict.checks
    )
    lines.extend(f"Note: {note}\n" for note in result.notes)
    lines.append(f"Verdict: {result.verdict.label}\n")
    return "".join(lines)

"""
Markdown experiment result formatters
"""
from ...experiment.results import Check, ExperimentResult


def check_icon(check: Check) -> str:
    if check.passed:
        return "✅"
    return "❌" if check.hard else "⚠️"


def verdict_to_markdown(result: ExperimentResult) -> str:
    heading = (
        f"**{result.verdict.label}** `{result.kind}` in regime {result.regime}  \n"
    )
    checks = "".join(
        f"- {check_icon(check)} {check.name}: {check.detail}"
        f"{'' if check.hard else ' _(soft)_'}\n"
        for check in result.verdict.checks
    )
    notes = "".join(f"- _{note}_\n" for note in result.notes)
    return heading + checks + notes

from src.rwrs.experiment.results import Check, ExperimentResult, ResultRow, Verdict
from tests import root_test_path

test_resource_path = root_test_path / "reporting" / "formatting" / "test_resources"


def create_test_result() -> ExperimentResult:
    return ExperimentResult(
        kind="kernel-recurrent",
        regime="C1",
        rows=[
            ResultRow.of("C1", 10.0, complex(2.5, -0.001), 0.01, 0.002, 2.4),
            ResultRow.of("C1", 20.0, 3.1, 0.012, 0.0, 3.0),
        ],
        verdict=Verdict(
            checks=(
                Check("slope", True, "slope 0.3 +- 0.01, expected 0.3333"),
                Check(
                    "level",
                    False,
                    "level 2.5 +- 0.1, predicted 2.4 (ratio 1.042)",
                    hard=False,
                ),
            )
        ),
        notes=["refitted from saved rows"],
    )


def create_failed_result() -> ExperimentResult:
    passing = create_test_result()
    return ExperimentResult(
        kind=passing.kind,
        regime=passing.regime,
        rows=passing.rows,
        verdict=Verdict(checks=(Check("slope", False, "slope 0.9 +- 0.01"),)),
    )

import concurrent.futures
import subprocess
import sys
import time
from concurrent.futures import Future
from dataclasses import dataclass
from pathlib import Path

from rich.console import Console, RenderableType
from rich.live import Live
from rich.spinner import Spinner
from rich.table import Table
from rich.text import Text

from src.rwrs.errors import RwrsError
from src.rwrs.experiment import load_experiment

COMMANDS = [
    "pipenv run format",
    "pipenv run lint",
    "pipenv run lint-test",
    "pipenv run check-types",
    "pipenv run test",
]
EXPERIMENTS = Path("experiments")


@dataclass
class JobResult:
    command: str
    output: str
    exit_code: int


@dataclass
class Job:
    command: str
    future: Future


def run_command(command: str) -> JobResult:
    result = subprocess.run(
        f"PIPENV_QUIET=1 {command}",
        shell=True,
        stdout=subprocess.PIPE,
        stderr=subprocess.STDOUT,
        text=True,
        check=False,
    )
    return JobResult(command, result.stdout, result.returncode)


def check_experiments() -> JobResult:
    problems = []
    for path in sorted(EXPERIMENTS.glob("*.yml")):
        try:
            load_experiment(path)
        except RwrsError as exc:
            problems.append(f"{path.name}: {exc.message}")
    checked = len(list(EXPERIMENTS.glob("*.yml")))
    output = "\n".join(problems) or f"{checked} experiment file(s) are valid"
    return JobResult("experiments", output, 1 if problems else 0)


def last_lines(output: str, count: int = 10) -> str:
    return "\n".join(output.strip().splitlines()[-count:])


def to_row(job: Job) -> list[RenderableType]:
    if not job.future.done():
        return [Spinner("clock"), f"[italic]{job.command}", ""]
    result: JobResult = job.future.result()
    status = ":green_heart:" if result.exit_code == 0 else ":broken_heart:"
    return [
        status,
        f"[italic]{job.command.replace('pipenv run ', '')}",
        Text.from_ansi(last_lines(result.output)),
    ]


def create_progress_table(jobs: list[Job]) -> Table:
    table = Table("Status", "Command", "Message", title="Validate sourcecode")
    for job in jobs:
        table.add_row(*to_row(job))
    return table


def all_done(jobs: list[Job]) -> bool:
    return all(job.future.done() for job in jobs)


with concurrent.futures.ThreadPoolExecutor(max_workers=len(COMMANDS) + 1) as executor:
    jobs = [Job(cmd, executor.submit(run_command, cmd)) for cmd in COMMANDS]
    jobs.append(Job("experiments", executor.submit(check_experiments)))
    with Live(create_progress_table(jobs), refresh_per_second=4) as live:
        while not all_done(jobs):
            time.sleep(0.2)
            live.update(create_progress_table(jobs))
    success = all(job.future.result().exit_code == 0 for job in jobs)
    if not success:
        Console().bell()
    sys.exit(0 if success else 1)

import re

from click.testing import CliRunner

from src.rwrs import add_commands, main_group
from src.rwrs.cli import create_console_logger
from src.rwrs.constants import CSV_HEADER
from src.rwrs.experiment.results import read_csv
from tests.test_resources.test_data import experiments_path


class TestCli:
    runner = CliRunner()
    add_commands()

    def invoke(self, *arguments: str):
        return self.runner.invoke(main_group, list(arguments))

    def test_cli_help_output(self):
        result = self.invoke("--help")
        assert result.exit_code == 0
        for command in ("sample-check", "psi", "constants", "kernel", "fit", "version"):
            assert command in result.output

    def test_constants_should_pass(self):
        config = experiments_path / "constants_logarithmic.yml"
        result = self.invoke("constants", "-c", str(config))
        assert result.exit_code == 0
        assert "PASS" in result.output

    def test_should_write_rows_to_csv(self, tmp_path):
        config = experiments_path / "constants_logarithmic.yml"
        out = tmp_path / "rows" / "constants.csv"
        result = self.invoke("constants", "-c", str(config), "--out", str(out))
        assert result.exit_code == 0
        lines = out.read_text(encoding="utf-8").splitlines()
        assert lines[0] == ",".join(CSV_HEADER)
        assert len(lines) >= 2
        assert all(line.startswith("C2,") for line in lines[1:])

    def test_wrong_kind_is_an_error(self):
        config = experiments_path / "constants_logarithmic.yml"
        result = self.invoke("psi", "-c", str(config))
        assert result.exit_code == 1

    def test_missing_config_is_an_error(self, tmp_path):
        result = self.invoke("constants", "-c", str(tmp_path / "absent.yml"))
        assert result.exit_code == 1

    def test_sample_check_does_not_depend_on_threads(self, tmp_path):
        config = experiments_path / "sampler_check.yml"
        single, double = tmp_path / "single.csv", tmp_path / "double.csv"
        first = self.invoke(
            "sample-check", "-c", str(config), "-t", "1", "-o", str(single)
        )
        second = self.invoke(
            "sample-check", "-c", str(config), "-t", "2", "-o", str(double)
        )
        assert first.exit_code == second.exit_code == 0
        assert single.read_text(encoding="utf-8") == double.read_text(encoding="utf-8")

    def test_kernel_rows_can_be_refitted(self, tmp_path):
        config = experiments_path / "kernel_lattice.yml"
        rows = tmp_path / "kernel.csv"
        result = self.invoke("kernel", "-c", str(config), "-o", str(rows))
        assert result.exit_code in (0, 2)
        assert len(read_csv(rows)) == 5

        refit = self.invoke("fit", "-c", str(config), "--rows", str(rows))
        assert refit.exit_code == result.exit_code

    def test_fit_without_rows_file_is_an_error(self, tmp_path):
        config = experiments_path / "kernel_lattice.yml"
        result = self.invoke("fit", "-c", str(config), "-r", str(tmp_path / "none.csv"))
        assert result.exit_code == 1

    def test_version_print(self):
        result = self.invoke("version")
        assert re.match(r"rwrs \S+", result.output)

    def test_create_console(self):
        console = create_console_logger(show_path=False, verbose=True, max_width=135)
        assert console.width == 135

"""Tests for the perispec command-line application."""

import json
import logging
from collections.abc import Callable, Generator
from pathlib import Path
from typing import Any

import pytest
from typer.testing import CliRunner

from hother.perispec.cli import app
from hother.perispec.cli.config import ExitCode, RunConfig, exit_code_for
from hother.perispec.core.exceptions import (
    BoundaryProximityError,
    IntegralityError,
    InvalidInputError,
    NonCoprimeError,
    SingularPencilError,
)

runner = CliRunner()


@pytest.fixture(autouse=True)
def restore_root_logging() -> Generator[None]:
    """The app callback reconfigures the root logger; undo it after each test."""
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def symbol_file(write_json: Callable[[str, Any], Path], inner_symbol_document: dict[str, Any]) -> Path:
    """z - 0.5 on disk."""
    return write_json("symbol.json", inner_symbol_document)


@pytest.fixture
def path_file(
    write_json: Callable[[str, Any], Path],
    inner_symbol_document: dict[str, Any],
    outer_symbol_document: dict[str, Any],
) -> Path:
    """The outward path z - 0.5 to z - 1.5 on disk."""
    return write_json("path.json", {"grid": [0, 1], "symbols": [inner_symbol_document, outer_symbol_document]})


class TestExitCodes:
    """Tests for the exception to exit-code mapping."""

    @pytest.mark.parametrize(
        ("exc", "code"),
        [
            (NonCoprimeError(first=2, second=4), ExitCode.BAD_INPUT),
            (FileNotFoundError("x"), ExitCode.BAD_INPUT),
            (SingularPencilError(context="test"), ExitCode.SINGULAR_PENCIL),
            (BoundaryProximityError(zero=0.5, radius=0.5), ExitCode.NOT_FREDHOLM),
            (IntegralityError(quantity="casson", value="1/2"), ExitCode.NUMERICAL),
        ],
    )
    def test_mapping(self, exc: BaseException, code: ExitCode) -> None:
        """Each failure class has its own code."""
        assert exit_code_for(exc) == code

    def test_randomized_command_needs_seed(self) -> None:
        """The run configuration refuses a randomized command without a seed."""
        with pytest.raises(ValueError, match="needs --seed"):
            RunConfig(command="ep sweep")

        assert RunConfig(command="ep sweep", seed=0).required_seed == 0

    def test_required_seed_on_deterministic_command(self) -> None:
        """Asking a deterministic command for its seed is an input error."""
        with pytest.raises(InvalidInputError):
            _ = RunConfig(command="ep index").required_seed


class TestGlobalOptions:
    """Tests for the top-level callback."""

    def test_bad_tolerance(self, symbol_file: Path) -> None:
        """An out-of-range tolerance is a usage error."""
        result = runner.invoke(app, ["--rank-threshold", "2", "ep", "index", str(symbol_file)])

        assert result.exit_code == ExitCode.BAD_INPUT
        assert "invalid tolerance" in result.output

    def test_tolerance_override_accepted(self, symbol_file: Path) -> None:
        """Valid overrides reach the command."""
        result = runner.invoke(app, ["--zero-guard", "1e-6", "-v", "ep", "index", str(symbol_file)])

        assert result.exit_code == ExitCode.OK
        assert "-1" in result.stdout.splitlines()


class TestFamilyCommand:
    """Tests for perispec family."""

    def test_json(self, write_json: Callable[[str, Any], Path], diag_family_document: dict[str, Any]) -> None:
        """Two simple spectral points at -1 and 1."""
        path = write_json("family.json", diag_family_document)

        result = runner.invoke(app, ["family", str(path), "--json"])

        assert result.exit_code == ExitCode.OK
        data = json.loads(result.stdout)
        assert data["n"] == 2
        assert sorted(round(point["mu"][0]) for point in data["points"]) == [-1, 1]
        assert all(point["d_value"] == 1 for point in data["points"])

    def test_table(self, write_json: Callable[[str, Any], Path], diag_family_document: dict[str, Any]) -> None:
        """The default output is a table."""
        path = write_json("family.json", diag_family_document)

        result = runner.invoke(app, ["family", str(path)])

        assert result.exit_code == ExitCode.OK
        assert "Spectral set" in result.stdout

    def test_missing_file(self, tmp_path: Path) -> None:
        """A missing document is a usage error."""
        result = runner.invoke(app, ["family", str(tmp_path / "absent.json")])

        assert result.exit_code == ExitCode.BAD_INPUT
        assert "error:" in result.output


class TestEpCommands:
    """Tests for perispec ep."""

    def test_index(self, symbol_file: Path) -> None:
        """z - 0.5 at weight 0 has index -1."""
        result = runner.invoke(app, ["ep", "index", str(symbol_file)])

        assert result.exit_code == ExitCode.OK
        assert result.stdout.strip() == "-1"

    def test_index_truncated(self, symbol_file: Path) -> None:
        """Truncations report kernel and cokernel."""
        result = runner.invoke(app, ["ep", "index", str(symbol_file), "--truncate"])

        assert result.exit_code == ExitCode.OK
        assert "truncation: ker 0, coker 1, N = " in result.stdout

    def test_index_json(self, symbol_file: Path) -> None:
        """JSON output carries the weight and the index."""
        result = runner.invoke(app, ["ep", "index", str(symbol_file), "--delta", "-1", "--json"])

        assert result.exit_code == ExitCode.OK
        assert json.loads(result.stdout) == {"delta": -1.0, "index": 0}

    def test_index_on_boundary(self, symbol_file: Path) -> None:
        """A zero on the weight circle means the operator is not Fredholm."""
        result = runner.invoke(app, ["ep", "index", str(symbol_file), "--delta", "-0.6931471805599453"])

        assert result.exit_code == ExitCode.NOT_FREDHOLM
        assert "error:" in result.output

    def test_index_change(self, symbol_file: Path) -> None:
        """Passing the zero at 0.5 changes the index by 1."""
        args = ["ep", "index-change", str(symbol_file), "--delta", "-1", "--delta2", "0", "--json"]

        result = runner.invoke(app, args)

        assert result.exit_code == ExitCode.OK
        data = json.loads(result.stdout)
        assert data["index_change"] == 1
        assert len(data["zeros"]) == 1
        assert data["zeros"][0]["d"] == 1

    def test_flow(self, path_file: Path) -> None:
        """One outward crossing."""
        result = runner.invoke(app, ["ep", "flow", str(path_file)])

        assert result.exit_code == ExitCode.OK
        assert "SF = +1" in result.stdout
        assert "index(0) = -1, index(1) = 0" in result.stdout

    def test_flow_csv(self, path_file: Path, tmp_path: Path) -> None:
        """Curves and events tables are written next to the prefix."""
        prefix = tmp_path / "flow"

        result = runner.invoke(app, ["ep", "flow", str(path_file), "--csv-out", str(prefix), "--json"])

        assert result.exit_code == ExitCode.OK
        assert json.loads(result.stdout)["sf"] == 1
        assert (tmp_path / "flow.curves.csv").read_text(encoding="utf-8").startswith("# perispec curves v1")
        assert (tmp_path / "flow.events.csv").read_text(encoding="utf-8").startswith("# perispec events v1")

    def test_flow_bad_annulus(self, path_file: Path) -> None:
        """The annulus needs two ordered radii."""
        result = runner.invoke(app, ["ep", "flow", str(path_file), "--annulus", "2,1"])

        assert result.exit_code == ExitCode.BAD_INPUT

    def test_sweep_needs_seed(self) -> None:
        """Randomized sweeps refuse to run unseeded."""
        result = runner.invoke(app, ["ep", "sweep"])

        assert result.exit_code == ExitCode.BAD_INPUT
        assert "needs --seed" in result.output

    def test_sweep(self) -> None:
        """A small seeded sweep passes."""
        result = runner.invoke(app, ["ep", "sweep", "--seed", "1", "--count", "4"])

        assert result.exit_code == ExitCode.OK
        assert "4/4 pass (seed 1)" in result.stdout

    def test_sweep_guard(self) -> None:
        """The sampling guard is an option and is echoed in the JSON result."""
        default = runner.invoke(app, ["ep", "sweep", "--seed", "1", "--count", "2", "--json"])
        wider = runner.invoke(app, ["ep", "sweep", "--seed", "1", "--count", "2", "--guard", "0.3", "--json"])

        assert default.exit_code == wider.exit_code == ExitCode.OK
        assert json.loads(default.stdout)["guard"] == pytest.approx(0.15)
        assert json.loads(wider.stdout)["guard"] == 0.3


class TestSeifertCommands:
    """Tests for perispec seifert."""

    def test_report_json(self) -> None:
        """The JSON report carries exact rationals."""
        result = runner.invoke(app, ["seifert", "report", "2", "3", "5", "--json"])

        assert result.exit_code == ExitCode.OK
        data = json.loads(result.stdout)
        assert data["chi"] == {"num": "1", "den": "30"}
        assert data["casson"] == -1
        assert data["mu_bar"] == -1

    def test_report_table(self) -> None:
        """The default report is a titled table."""
        result = runner.invoke(app, ["seifert", "report", "7", "3", "2"])

        assert result.exit_code == ExitCode.OK
        assert "Sigma(2,3,7)" in result.stdout
        assert "Rohlin parity" in result.stdout

    @pytest.mark.parametrize("multiplicities", [["2", "4", "5"], ["2", "3"], ["0", "3", "5"]])
    def test_report_bad_input(self, multiplicities: list[str]) -> None:
        """Non-coprime, degenerate and non-positive data are usage errors."""
        result = runner.invoke(app, ["seifert", "report", *multiplicities])

        assert result.exit_code == ExitCode.BAD_INPUT
        assert "error:" in result.output

    def test_sweep_to_file(self, tmp_path: Path) -> None:
        """The sweep table goes to the requested file."""
        target = tmp_path / "sweep.csv"

        result = runner.invoke(app, ["seifert", "sweep", "--max-product", "42", "-o", str(target)])

        assert result.exit_code == ExitCode.OK
        lines = target.read_text(encoding="utf-8").splitlines()
        assert lines[0] == "# perispec seifert-sweep v1"
        assert len(lines) == 4

    def test_sweep_to_stdout(self) -> None:
        """Without --output the table goes to stdout."""
        result = runner.invoke(app, ["seifert", "sweep", "--max-product", "30", "--extra", "2,3,5,7"])

        assert result.exit_code == ExitCode.OK
        assert result.stdout.splitlines()[-1].startswith("2 3 5 7,")

    def test_check_barmu(self) -> None:
        """Every sphere up to product 100 passes."""
        result = runner.invoke(app, ["seifert", "check-barmu", "--max-product", "100"])

        assert result.exit_code == ExitCode.OK
        assert "all pass" in result.stdout

    def test_check_barmu_json(self) -> None:
        """JSON output carries the counts."""
        result = runner.invoke(app, ["seifert", "check-barmu", "--max-product", "42", "--json"])

        assert result.exit_code == ExitCode.OK
        data = json.loads(result.stdout)
        assert (data["total"], data["passed_count"], data["all_passed"]) == (2, 2, True)

    def test_check_barmu_failure_exits_one(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """A failing identity is reported with exit code 1."""
        monkeypatch.setattr("hother.perispec.seifert.sweep.mu_bar", lambda s: 3)

        result = runner.invoke(app, ["seifert", "check-barmu", "--max-product", "30"])

        assert result.exit_code == ExitCode.CHECK_FAILED
        assert "1 of 1 instances fail" in result.stdout

    @pytest.mark.parametrize("extra", ["2,x,5", "2,3"])
    def test_bad_extra(self, extra: str) -> None:
        """Malformed or degenerate extras are usage errors."""
        result = runner.invoke(app, ["seifert", "check-barmu", "--max-product", "30", "--extra", extra])

        assert result.exit_code == ExitCode.BAD_INPUT

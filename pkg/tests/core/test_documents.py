"""Tests for document loading and CSV tables."""

import io
from pathlib import Path

import pytest

from hother.perispec.core.documents import load_document, require_mapping, write_csv_table
from hother.perispec.core.exceptions import InvalidInputError


class TestLoadDocument:
    """Tests for load_document()."""

    def test_json(self, tmp_path: Path) -> None:
        """JSON is the default format."""
        path = tmp_path / "doc.json"
        path.write_text('{"n": 1}', encoding="utf-8")

        assert load_document(path) == {"n": 1}

    @pytest.mark.parametrize("suffix", [".yaml", ".yml", ".YAML"])
    def test_yaml(self, tmp_path: Path, suffix: str) -> None:
        """YAML is chosen by suffix."""
        path = tmp_path / f"doc{suffix}"
        path.write_text("n: 2\ngrid: [0, 1]\n", encoding="utf-8")

        assert load_document(path) == {"n": 2, "grid": [0, 1]}

    def test_broken_yaml(self, tmp_path: Path) -> None:
        """Undecodable YAML is an input error."""
        path = tmp_path / "doc.yaml"
        path.write_text("n: [1, 2\n", encoding="utf-8")

        with pytest.raises(InvalidInputError, match="could not be decoded"):
            load_document(path)

    def test_missing(self, tmp_path: Path) -> None:
        """A missing file is left to the caller."""
        with pytest.raises(FileNotFoundError):
            load_document(tmp_path / "absent.json")


class TestRequireMapping:
    """Tests for require_mapping()."""

    def test_mapping(self) -> None:
        """Keys come back as strings."""
        assert require_mapping({1: "a"}, what="doc") == {"1": "a"}

    def test_not_mapping(self) -> None:
        """Lists are rejected with the expected name."""
        with pytest.raises(InvalidInputError, match="symbol must be a JSON object, got list"):
            require_mapping([], what="symbol")


class TestWriteCsvTable:
    """Tests for write_csv_table()."""

    def test_layout(self) -> None:
        """Version line, header, rows."""
        handle = io.StringIO()

        write_csv_table(handle, "demo", ("a", "b"), [(1, "x y"), (2, "z")])

        assert handle.getvalue() == "# perispec demo v1\na,b\n1,x y\n2,z\n"

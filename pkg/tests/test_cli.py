"""Command-line tests: table goldens, JSON output and exit codes."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from hyideals.cli import EXIT_INPUT, EXIT_OK, main


def _run(capsys: pytest.CaptureFixture[str], *argv: str) -> tuple[int, list[str], str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.splitlines(), captured.err


def _corpus(tmp_path: Path, data: dict) -> str:
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(data))
    return str(path)


class TestQueries:
    def test_hy_check_golden(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = _run(capsys, "hy", "check", "Z12", "--y", "spec", "--ideal", "6")
        assert code == EXIT_OK
        assert out[0] == "H_Y: true, strong: true, fixed: true"
        assert out[1] == "ideal (6) = {0, 6} over Y=spec"

    def test_hy_check_four(self, capsys: pytest.CaptureFixture[str]) -> None:
        _, out, _ = _run(capsys, "hy", "check", "Z12", "--ideal", "4")
        assert out[0] == "H_Y: false, strong: false, fixed: true"
        assert "  hull_below_element: false" in out

    def test_relative_golden(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = _run(capsys, "relative", "Z12", "--y", "spec", "--ideal", "4")
        assert code == EXIT_OK
        assert out[0] == "relative: false; greatest factor: (4) [trivial]"
        assert out[2] == "factors: -"

    def test_relative_zero(self, capsys: pytest.CaptureFixture[str]) -> None:
        _, out, _ = _run(capsys, "relative", "Z12", "--ideal", "0")
        assert out[0] == "relative: true; greatest factor: (4)"
        assert out[2] == "factors: (4)"

    def test_closure(self, capsys: pytest.CaptureFixture[str]) -> None:
        _, out, _ = _run(capsys, "hy", "closure", "Z12", "--ideal", "4")
        assert out == ["closure: (2)", "strong closure: (2)", "kh_Y: (2)"]

    def test_fixed_with_subset(self, capsys: pytest.CaptureFixture[str]) -> None:
        _, out, _ = _run(capsys, "fixed", "Z12", "--ideal", "4", "--wrt", "indices:[1]")
        assert out[0] == "fixed: true"
        assert out[1] == "filter intersection: (2)"
        assert out[-1] == "fixed w.r.t. (2): true"

    def test_spectrum(self, capsys: pytest.CaptureFixture[str]) -> None:
        _, out, _ = _run(capsys, "spec", "Z12")
        assert out[0] == "spec: (3), (2)"
        assert "jacobson: (6)" in out

    def test_ideals(self, capsys: pytest.CaptureFixture[str]) -> None:
        _, out, _ = _run(capsys, "ideals", "Z4")
        assert out[0] == "Z4: 3 ideals"
        assert out[2] == "  (2)  {0, 2}"

    def test_ring_show_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out, _ = _run(capsys, "ring", "show", "Z4", "--format", "json")
        assert code == EXIT_OK
        data = json.loads("\n".join(out))
        assert data["size"] == 4
        assert data["units"] == ["1", "3"]
        assert data["local"] is True
        assert data["reduced"] is False


class TestVerify:
    def test_empty_corpus(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        code, out, _ = _run(capsys, "verify", "--corpus", _corpus(tmp_path, {"rings": []}))
        assert code == EXIT_OK
        assert out == ["summary: pass=0 fail=0 vacuous=0 degenerate=0 skipped=0"]

    def test_single_check_json(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        corpus = _corpus(tmp_path, {"rings": [{"name": "Z4", "dsl": "Z4"}]})
        code, out, _ = _run(
            capsys, "verify", "--corpus", corpus, "--check", "ring.laws", "--format", "json"
        )
        assert code == EXIT_OK
        data = json.loads("\n".join(out))
        assert [r["id"] for r in data["results"]] == ["ring.laws"]
        assert data["summary"]["pass"] == 1

    def test_check_by_short_label(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        data = {"rings": [{"name": "Z12", "dsl": "Z12"}], "subspaces": ["spec"]}
        corpus = _corpus(tmp_path, data)
        code, out, _ = _run(
            capsys, "verify", "--corpus", corpus, "--check", "T3.9", "--format", "json"
        )
        assert code == EXIT_OK
        data = json.loads("\n".join(out))
        assert [(r["id"], r["verdict"]) for r in data["results"]] == [("fixed.wrt-subset", "pass")]

    def test_separation(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        corpus = _corpus(tmp_path, {"rings": [{"name": "Z12", "dsl": "Z12"}]})
        code, out, _ = _run(capsys, "separation", "--corpus", corpus)
        assert code == EXIT_OK
        assert out[0].startswith("pass")
        assert "separation-search" in out[0]


class TestErrors:
    def test_bad_dsl(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(capsys, "spec", "Q5")
        assert code == EXIT_INPUT
        assert err.startswith("error: Expected 'Z' or 'GF('")

    def test_bad_format(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(capsys, "spec", "Z4", "--format", "yaml")
        assert code == EXIT_INPUT
        assert "Invalid format" in err

    def test_unknown_element(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(capsys, "hy", "check", "Z4", "--ideal", "9")
        assert code == EXIT_INPUT
        assert "Unknown element" in err

    def test_unknown_check(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        corpus = _corpus(tmp_path, {"rings": []})
        code, _, err = _run(capsys, "verify", "--corpus", corpus, "--check", "nope")
        assert code == EXIT_INPUT
        assert "nope" in err

    def test_missing_corpus(self, capsys: pytest.CaptureFixture[str], tmp_path: Path) -> None:
        code, _, err = _run(capsys, "verify", "--corpus", str(tmp_path / "none.json"))
        assert code == EXIT_INPUT
        assert "Cannot read corpus" in err

    def test_bad_environment(
        self, capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
    ) -> None:
        monkeypatch.setenv("HYIDEALS_SEED", "x")
        code, _, err = _run(capsys, "spec", "Z4")
        assert code == EXIT_INPUT
        assert "HYIDEALS_SEED" in err

    def test_wrt_out_of_range(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, _, err = _run(capsys, "fixed", "Z12", "--ideal", "4", "--wrt", "indices:[2]")
        assert code == EXIT_INPUT
        assert "--wrt" in err

"""Command-line behavior: output shapes, golden rows, exit codes."""

import json
import subprocess
import sys

import pytest

from eulerward.cli import main
from eulerward.numerics import assoc_stirling_subset


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_csv_golden_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "eulerian", "--nu", "2", "--s", "1", "--t", "0",
            "--nmax", "3", "--format", "csv",
        )
        assert code == 0
        assert out.splitlines() == ["0,1", "1,1", "2,1,2", "3,1,8,6"]

    def test_smallest_table(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "eulerian", "--nu", "1", "--nmax", "0", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == ["0,1"]

    def test_ward_csv_matches_associated_stirling(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "ward", "--nu", "1", "--s", "0", "--t", "1",
            "--nmax", "4", "--format", "csv",
        )
        assert code == 0
        for line in out.splitlines():
            parts = [int(x) for x in line.split(",")]
            n, values = parts[0], parts[1:]
            assert values == [assoc_stirling_subset(n + k, k) for k in range(len(values))]

    def test_json_values_are_strings(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "eulerian", "--nu", "2", "--nmax", "3"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["rows"][3] == ["1", "8", "6"]
        assert payload["nu"] == "2"
        assert all(isinstance(v, str) for row in payload["rows"] for v in row)

    def test_csv_and_json_carry_identical_values(self, capsys):
        args = ["table", "ward", "--nu", "2", "--s", "2", "--t", "1", "--nmax", "5"]
        code, out_json, _ = run_cli(capsys, *args)
        assert code == 0
        code, out_csv, _ = run_cli(capsys, *args, "--format", "csv")
        assert code == 0
        rows = json.loads(out_json)["rows"]
        csv_rows = [line.split(",")[1:] for line in out_csv.splitlines()]
        assert rows == csv_rows

    def test_polynomial_mode(self, capsys):
        code, out, _ = run_cli(
            capsys, "table", "eulerian", "--nu", "2", "--nmax", "1",
            "--mode", "poly", "--format", "csv",
        )
        assert code == 0
        assert out.splitlines() == ["0,1*s^0*t^0", "1,1*s^1*t^0,1*s^0*t^1"]

    def test_rejects_bad_order(self, capsys):
        code, _, err = run_cli(capsys, "table", "eulerian", "--nu", "0", "--nmax", "2")
        assert code == 2
        assert "error" in err

    def test_rejects_unknown_kind(self):
        with pytest.raises(SystemExit) as exc:
            main(["table", "pascal", "--nu", "1", "--nmax", "2"])
        assert exc.value.code == 2


class TestEnumerate:
    def test_three_objects(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--nu", "2", "--tvec", "0", "--n", "2"
        )
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        assert len(lines) == 3
        assert {line["entries"][0] for line in lines} == {"2 2 1 1", "1 2 2 1", "1 1 2 2"}

    def test_size_zero_emits_the_scaffold(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--nu", "1", "--n", "0")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 1
        assert json.loads(lines[0])["entries"] == [""]

    def test_known_word_appears_with_its_ascents(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--nu", "3", "--t", "2", "--n", "2"
        )
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        match = [r for r in records if r["entries"] == ["0 0 1 1 2 2 2 1"]]
        assert len(match) == 1
        assert match[0]["ascent_count"] == "2"
        assert match[0]["ascent_positions"] == [["2", "4"]]

    def test_json_format_collects_an_array(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--nu", "2", "--tvec", "0", "--n", "2",
            "--format", "json",
        )
        assert code == 0
        assert len(json.loads(out)) == 3

    def test_line_count_matches_the_product_formula(self, capsys):
        # s=2, t=1: product of (2k + 3) over k < n
        code, out, _ = run_cli(
            capsys, "enumerate", "--nu", "2", "--s", "2", "--t", "1", "--n", "3"
        )
        assert code == 0
        assert len(out.splitlines()) == 3 * 5 * 7

    def test_cap_exceeded(self, capsys):
        code, out, err = run_cli(
            capsys, "enumerate", "--nu", "2", "--n", "9", "--max-count", "100"
        )
        assert code == 2
        assert out == ""
        assert "exceed" in err

    def test_rejects_malformed_tvec(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--nu", "2", "--n", "1", "--tvec", "1,x")
        assert code == 2
        assert "tvec" in err

    def test_rejects_contradictory_flags(self, capsys):
        code, _, err = run_cli(
            capsys, "enumerate", "--nu", "2", "--n", "1", "--tvec", "1,0", "--t", "2"
        )
        assert code == 2
        assert "disagrees" in err


class TestBijection:
    def test_chain_word(self, capsys):
        code, out, _ = run_cli(capsys, "bijection", "333222111", "--nu", "3")
        assert code == 0
        payload = json.loads(out)
        assert payload["distinguished_union"] == ["1", "2", "3"]
        assert payload["statistic"] == {
            "agree": True,
            "distinguished_size": "3",
            "n_minus_ascents": "3",
        }
        assert payload["forest"][0]["root"]["label"] == 1
        assert payload["dot"].startswith("digraph forest {")

    def test_four_entry_forest(self, capsys):
        code, out, _ = run_cli(
            capsys, "bijection", "2 3 3 3 2 2 0 0", "555111", "0444", "", "--nu", "3"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["tvec"] == ["2", "0", "1", "0"]
        assert payload["n"] == "5"
        assert payload["ascent_count"] == "2"
        assert payload["distinguished_sets"] == [["2"], ["1", "5"], [], []]
        assert payload["distinguished_union"] == ["1", "2", "5"]
        assert payload["statistic"]["agree"] is True

    def test_invalid_word(self, capsys):
        code, _, err = run_cli(capsys, "bijection", "1221", "1", "--nu", "2")
        assert code == 2
        assert "not a valid" in err

    def test_tvec_contradicting_the_word(self, capsys):
        code, _, err = run_cli(capsys, "bijection", "1221", "--nu", "2", "--tvec", "1")
        assert code == 2
        assert "not a valid" in err

    def test_labels_must_partition_the_range(self, capsys):
        code, _, err = run_cli(capsys, "bijection", "11", "33", "--nu", "2")
        assert code == 2


class TestVerify:
    def test_small_all_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--size-level", "small")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert len(payload["suites"]) == 6
        for suite in payload["suites"]:
            assert suite["passed"] is True
            for check in suite["checks"]:
                assert check["witness"] is None

    def test_single_suite_report(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "closed-forms", "--size-level", "small"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["suite"] == "closed-forms"
        assert {c["id"] for c in payload["checks"]} == {"closed-forms", "special-cases"}

    def test_output_is_deterministic(self, capsys):
        args = ("verify", "--suite", "recurrence-vs-enumeration", "--size-level", "small")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_rejects_unknown_suite(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "everything"])
        assert exc.value.code == 2


class TestProcessLevel:
    def test_module_entrypoint_roundtrip(self):
        proc = subprocess.run(
            [sys.executable, "-m", "eulerward.cli", "table", "eulerian",
             "--nu", "2", "--nmax", "3", "--format", "csv"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout.splitlines()[-1] == "3,1,8,6"

    def test_usage_error_exit_code(self):
        proc = subprocess.run(
            [sys.executable, "-m", "eulerward.cli", "table"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2

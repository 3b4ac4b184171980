import json

import pytest

from adjstats.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestDist:
    def test_avoidance_series(self, capsys):
        code, out = run(
            capsys, "dist", "--stat", "mu", "--k", "3", "--s", "2", "--n", "0..4", "--q", "0"
        )
        assert code == 0
        payload = json.loads(out)
        assert [row["value"] for row in payload["rows"]] == ["1", "3", "8", "21", "55"]

    def test_coefficients(self, capsys):
        code, out = run(capsys, "dist", "--stat", "nu", "--k", "3", "--s", "2", "--n", "2")
        payload = json.loads(out)
        assert payload["rows"][0]["dist"] == {"var": "q", "coeffs": ["7", "2"]}

    def test_impossible_difference(self, capsys):
        code, out = run(capsys, "dist", "--stat", "mu", "--k", "2", "--s", "5", "--n", "3")
        payload = json.loads(out)
        assert payload["rows"][0]["dist"]["coeffs"] == ["8"]

    def test_verify_flag(self, capsys):
        code, out = run(
            capsys, "dist", "--stat", "mu", "--k", "3", "--s", "1", "--n", "0..5", "--verify"
        )
        assert code == 0
        payload = json.loads(out)
        assert all(row["oracle_agrees"] for row in payload["rows"])

    def test_cap_exceeded_gives_partial_table_with_warnings(self, capsys):
        code, out = run(
            capsys, "dist", "--stat", "mu", "--k", "3", "--s", "1", "--n", "0..8",
            "--verify", "--cap", "100",
        )
        assert code == 0
        rows = json.loads(out)["rows"]
        assert all("dist" in row for row in rows)  # DP values always present
        assert any("warning" in row for row in rows)
        assert any(row.get("oracle_agrees") for row in rows)


class TestFormats:
    def test_deterministic_output(self, capsys):
        _, first = run(capsys, "dist", "--stat", "mu", "--k", "4", "--s", "2", "--n", "0..6")
        _, second = run(capsys, "dist", "--stat", "mu", "--k", "4", "--s", "2", "--n", "0..6")
        assert first == second

    def test_json_and_csv_same_numbers(self, capsys):
        _, as_json = run(capsys, "avoid", "--k", "4", "--s", "2", "--n", "0..5")
        _, as_csv = run(
            capsys, "avoid", "--k", "4", "--s", "2", "--n", "0..5", "--format", "csv"
        )
        json_counts = [row["count"] for row in json.loads(as_json)["rows"]]
        csv_lines = as_csv.strip().splitlines()
        assert csv_lines[0] == "n,count"
        csv_counts = [line.split(",")[1] for line in csv_lines[1:]]
        assert json_counts == csv_counts == ["1", "4", "14", "48", "164", "560"]

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "rows.json"
        code, out = run(
            capsys, "avoid", "--k", "3", "--s", "2", "--n", "0..3", "--out", str(target)
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["rows"][-1]["count"] == "21"


class TestTotals:
    def test_words(self, capsys):
        code, out = run(capsys, "totals", "--words", "--k", "3", "--s", "1", "--n", "2")
        assert json.loads(out)["rows"] == [{"n": 2, "total": "2"}]

    def test_partitions(self, capsys):
        code, out = run(capsys, "totals", "--partitions", "--s", "2", "--n", "4")
        assert json.loads(out)["rows"] == [{"n": 4, "total": "1"}]

    def test_partitions_fixed_blocks(self, capsys):
        code, out = run(
            capsys, "totals", "--partitions", "--k", "3", "--s", "2", "--n", "5"
        )
        assert json.loads(out)["rows"] == [{"n": 5, "total": "7"}]


class TestGapAndPartitionDist:
    def test_gap(self, capsys):
        code, out = run(capsys, "gap", "--k", "2", "--s", "1", "--r", "2", "--n", "3")
        assert json.loads(out)["rows"][0]["dist"]["coeffs"] == ["6", "2"]

    def test_partition_dist(self, capsys):
        code, out = run(capsys, "partition-dist", "--n", "4", "--k", "3", "--s", "2")
        assert json.loads(out)["rows"][0]["dist"]["coeffs"] == ["5", "1"]


class TestBijection:
    def test_v_to_w(self, capsys):
        code, out = run(capsys, "bijection", "--v-to-w", "113")
        assert json.loads(out)["output"] == "344"

    def test_chain(self, capsys):
        code, out = run(capsys, "bijection", "--composition", "2:2+1:1")
        payload = json.loads(out)
        assert payload["maneuvers"] == [4, 1]
        assert payload["v_word"] == "41"

    def test_tiling(self, capsys):
        code, out = run(capsys, "bijection", "--word-to-tiling", "21")
        assert json.loads(out)["output"] == ["domino"]

    def test_invalid_word_is_usage_error(self, capsys):
        code = main(["bijection", "--v-to-w", "24"])
        assert code == 2


class TestVerifyCommand:
    def test_passing_suite(self, capsys):
        code, out = run(capsys, "verify", "--suite", "algebra")
        assert code == 0
        payload = json.loads(out)
        assert payload["failed"] == 0

    def test_bounded_suite(self, capsys):
        code, out = run(
            capsys, "verify", "--suite", "gap", "--kmax", "3", "--nmax", "5"
        )
        assert code == 0


class TestOeisCheck:
    def test_pass_and_fail(self, capsys, tmp_path):
        bfile = tmp_path / "b007070.txt"
        bfile.write_text("# data\n0 1\n1 4\n2 14\n3 48\n")
        code, out = run(
            capsys, "oeis-check", "--id", "A007070", "--bfile", str(bfile), "--length", "4"
        )
        assert code == 0
        assert json.loads(out)["passed"] is True

        bad = tmp_path / "bad.txt"
        bad.write_text("0 1\n1 999\n")
        code = main(
            ["oeis-check", "--id", "A007070", "--bfile", str(bad), "--length", "2"]
        )
        capsys.readouterr()
        assert code == 1

    def test_missing_file_is_usage_error(self, capsys):
        code = main(["oeis-check", "--id", "A007070", "--bfile", "/nonexistent"])
        assert code == 2

    def test_unknown_sequence_needs_generator(self, capsys, tmp_path):
        bfile = tmp_path / "b.txt"
        bfile.write_text("0 1\n")
        code = main(["oeis-check", "--id", "A000001", "--bfile", str(bfile)])
        assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["dist", "--stat", "mu"])  # missing required arguments
    assert err.value.code == 2

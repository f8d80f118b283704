import json

import pytest

from motifpeel.cli import main


def run(argv):
    return main(argv)


@pytest.fixture
def bridged_file(tmp_path):
    path = tmp_path / "bridged.txt"
    path.write_text("0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n2 3\n")
    return str(path)


class TestCluster:
    def test_psmc_json_report(self, bridged_file, tmp_path, capsys):
        out = tmp_path / "r.json"
        code = run(
            ["cluster", "--graph", bridged_file, "--k", "3",
             "--method", "psmc", "--out", str(out)]
        )
        assert code == 0
        rep = json.loads(out.read_text())
        assert rep["mc_num"] == 0 and rep["size"] == 3
        assert rep["wall_ms"] is None
        printed = capsys.readouterr().out
        assert "mc = 0/1" in printed

    def test_psmc_plus_reports_both_values(self, bridged_file, tmp_path):
        out = tmp_path / "r.json"
        assert run(
            ["cluster", "--graph", bridged_file, "--k", "3",
             "--method", "psmc-plus", "--out", str(out)]
        ) == 0
        rep = json.loads(out.read_text())
        assert "mc" in rep and "mc_estimate" in rep

    def test_k2_classic_conductance(self, bridged_file, tmp_path):
        out = tmp_path / "r.json"
        assert run(
            ["cluster", "--graph", bridged_file, "--k", "2",
             "--method", "psmc", "--out", str(out)]
        ) == 0
        rep = json.loads(out.read_text())
        assert rep["k"] == 2

    def test_no_motif_exit_2(self, tmp_path):
        p = tmp_path / "path.txt"
        p.write_text("0 1\n1 2\n")
        assert run(
            ["cluster", "--graph", str(p), "--k", "3", "--method", "psmc"]
        ) == 2

    def test_parse_error_exit_1(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("a b\n")
        assert run(
            ["cluster", "--graph", str(p), "--k", "3", "--method", "psmc"]
        ) == 1

    def test_trace_csv_written(self, bridged_file, tmp_path):
        trace = tmp_path / "t.csv"
        assert run(
            ["cluster", "--graph", bridged_file, "--k", "3",
             "--method", "psmc", "--trace", str(trace)]
        ) == 0
        lines = trace.read_text().strip().split("\n")
        assert lines[0].startswith("step,deleted_vertex,mr_num")
        assert len(lines) == 7


class TestGenerate:
    def test_planted_writes_graph_and_truth(self, tmp_path):
        g = tmp_path / "g.txt"
        t = tmp_path / "t.txt"
        assert run(
            ["generate", "--model", "planted", "--n", "30", "--communities", "3",
             "--p-in", "0.9", "--p-out", "0.05", "--seed", "7",
             "--out", str(g), "--truth-out", str(t)]
        ) == 0
        assert len(t.read_text().strip().split("\n")) == 3
        assert g.read_text()

    def test_config_error_exit_1(self, tmp_path):
        assert run(
            ["generate", "--model", "ba", "--n", "4", "--attachments", "9",
             "--seed", "1", "--out", str(tmp_path / "g.txt")]
        ) == 1


class TestOracle:
    def test_single_instance_holds(self, bridged_file):
        assert run(["oracle", "--graph", bridged_file, "--k", "3"]) == 0

    def test_too_large_exit_1(self, tmp_path):
        p = tmp_path / "big.txt"
        p.write_text("".join(f"{i} {i + 1}\n" for i in range(24)) + "0 2\n")
        assert run(["oracle", "--graph", str(p), "--k", "3"]) == 1

    def test_batch(self, capsys):
        assert run(["oracle", "--batch", "12", "--seed", "42", "--k", "3"]) == 0
        assert "holds 12/12" in capsys.readouterr().out


class TestEvaluate:
    def test_cluster_scoring(self, bridged_file, tmp_path):
        c = tmp_path / "c.txt"
        c.write_text("0 1 2\n")
        t = tmp_path / "t.txt"
        t.write_text("0 1 2\n3 4 5\n")
        out = tmp_path / "r.json"
        assert run(
            ["evaluate", "--graph", bridged_file, "--k", "3",
             "--cluster", str(c), "--truth", str(t), "--out", str(out)]
        ) == 0
        rep = json.loads(out.read_text())
        assert rep["mc"] == 0.0 and rep["f1"] == 1.0 and rep["size"] == 3


class TestBounds:
    def test_csv_rows(self, bridged_file, tmp_path):
        out = tmp_path / "b.csv"
        assert run(["bounds", "--graph", bridged_file, "--k", "4",
                    "--out", str(out)]) == 0
        lines = out.read_text().strip().split("\n")
        assert lines[0] == "vertex,exact,lower,upper,estimate"
        assert len(lines) == 7


class TestDeterminism:
    def test_byte_identical_across_runs_and_threads(self, tmp_path):
        g = tmp_path / "g.txt"
        t = tmp_path / "t.txt"
        run(
            ["generate", "--model", "planted", "--n", "60", "--communities", "3",
             "--p-in", "0.5", "--p-out", "0.05", "--seed", "11",
             "--out", str(g), "--truth-out", str(t)]
        )
        blobs = []
        for rep in range(2):
            for threads in ("1", "4"):
                out = tmp_path / f"r{rep}_{threads}.json"
                trace = tmp_path / f"t{rep}_{threads}.csv"
                assert run(
                    ["cluster", "--graph", str(g), "--k", "3", "--method", "psmc",
                     "--threads", threads, "--truth", str(t),
                     "--out", str(out), "--trace", str(trace)]
                ) == 0
                blobs.append(out.read_bytes() + trace.read_bytes())
        assert len(set(blobs)) == 1

    def test_generate_byte_identical(self, tmp_path):
        files = []
        for i in range(2):
            out = tmp_path / f"g{i}.txt"
            run(["generate", "--model", "er", "--n", "100", "--p", "0.1",
                 "--seed", "5", "--out", str(out)])
            files.append(out.read_bytes())
        assert files[0] == files[1]

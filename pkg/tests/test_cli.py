import json

import pytest

from privcc.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def graph_file(tmp_path):
    path = tmp_path / "g.el"
    path.write_text("# n=12\n" + "\n".join(
        f"{u} {v}" for u in range(6) for v in range(u + 1, 6)) + "\n" +
        "\n".join(f"{u + 6} {v + 6}" for u in range(6)
                  for v in range(u + 1, 6)) + "\n")
    return path


class TestParams:
    def test_json_table(self, capsys):
        code, out, _ = run_cli(capsys, "params", "--epsilon", "1",
                               "--delta", "0.1")
        assert code == 0
        payload = json.loads(out)
        assert payload["epsilon_agr"] == pytest.approx(1 / 5.8)
        assert "1-common-neighbors" in payload["t1_bounds"]
        assert payload["non_private"] is False

    def test_invalid_delta_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "params", "--epsilon", "1",
                               "--delta", "0.9")
        assert code == 1 and "delta" in err


class TestUsageErrors:
    def test_missing_seed_is_usage_error(self, capsys, graph_file, tmp_path):
        code, _, err = run_cli(capsys, "cluster", "--input", str(graph_file),
                               "--output", str(tmp_path / "c.txt"),
                               "--epsilon", "1", "--delta", "0.1")
        assert code == 1 and "--seed" in err

    def test_unknown_flag(self, capsys):
        code, _, _ = run_cli(capsys, "params", "--epsilon", "1",
                             "--delta", "0.1", "--bogus", "3")
        assert code == 1

    def test_missing_input_file_is_io_error(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "cluster", "--input",
                               str(tmp_path / "nope.el"), "--output",
                               str(tmp_path / "c.txt"), "--epsilon", "1",
                               "--delta", "0.1", "--seed", "3")
        assert code == 2 and "i/o" in err


class TestClusterFlow:
    def test_cluster_writes_output_and_trace(self, capsys, graph_file,
                                             tmp_path):
        out_path = tmp_path / "c.txt"
        code, _, _ = run_cli(capsys, "cluster", "--input", str(graph_file),
                             "--output", str(out_path), "--epsilon", "1",
                             "--delta", "0.1", "--seed", "7",
                             "--dump-ledger", str(tmp_path / "led.csv"))
        assert code == 0
        text = out_path.read_text()
        assert "# epsilon=1.0" in text and "NON-PRIVATE" not in text
        trace = json.loads((tmp_path / "c.txt.trace.json").read_text())
        assert trace["summary"]["n"] == 12
        ledger_lines = (tmp_path / "led.csv").read_text().splitlines()
        assert ledger_lines[0] == "tag,index,scale,draw"
        assert len(ledger_lines) >= 1 + 2 * 12  # degree and light draws

    def test_noise_scale_zero_carries_banner(self, capsys, graph_file,
                                             tmp_path):
        out_path = tmp_path / "c.txt"
        code, _, _ = run_cli(capsys, "cluster", "--input", str(graph_file),
                             "--output", str(out_path), "--epsilon", "1",
                             "--delta", "0.1", "--seed", "7",
                             "--noise-scale", "0", "--t0-override", "0")
        assert code == 0
        assert "NON-PRIVATE" in out_path.read_text()

    def test_golden_byte_identical(self, capsys, graph_file, tmp_path):
        args = ("--input", str(graph_file), "--epsilon", "1",
                "--delta", "0.1", "--seed", "11")
        out1, out2 = tmp_path / "a.txt", tmp_path / "b.txt"
        assert run_cli(capsys, "cluster", *args, "--output", str(out1))[0] == 0
        assert run_cli(capsys, "cluster", *args, "--output", str(out2))[0] == 0
        assert out1.read_bytes() == out2.read_bytes()
        assert (tmp_path / "a.txt.trace.json").read_bytes() == \
            (tmp_path / "b.txt.trace.json").read_bytes()


class TestCostAndOpt:
    def test_gen_cluster_cost_pipeline(self, capsys, tmp_path):
        g_path = tmp_path / "p.el"
        code, _, _ = run_cli(capsys, "gen", "--kind", "planted",
                             "--clusters", "3", "--cluster-size", "4",
                             "--flip-p", "0.0", "--seed", "5",
                             "--output", str(g_path))
        assert code == 0 and (tmp_path / "p.el.truth").exists()
        code, out, _ = run_cli(capsys, "cost", "--graph", str(g_path),
                               "--clustering", str(tmp_path / "p.el.truth"))
        assert code == 0
        assert json.loads(out)["total"] == 0

    def test_opt_small_graph(self, capsys, tmp_path):
        g_path = tmp_path / "t.el"
        g_path.write_text("0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n")
        code, out, _ = run_cli(capsys, "opt", "--graph", str(g_path))
        assert code == 0
        payload = json.loads(out)
        assert payload["total"] == 0
        assert payload["assignment"] == [0, 0, 0, 1, 1, 1]

    def test_opt_too_large_exits_1(self, capsys, tmp_path):
        g_path = tmp_path / "big.el"
        g_path.write_text("# n=20\n0 1\n")
        code, _, err = run_cli(capsys, "opt", "--graph", str(g_path))
        assert code == 1 and "capped" in err


class TestRefccAndMpc:
    def test_refcc_banner(self, capsys, graph_file, tmp_path):
        out_path = tmp_path / "r.txt"
        code, _, _ = run_cli(capsys, "refcc", "--input", str(graph_file),
                             "--output", str(out_path), "--beta", "2.0",
                             "--lambda", "1.0")
        assert code == 0
        assert "REFERENCE (NON-PRIVATE)" in out_path.read_text()

    def test_mpc_stats_json(self, capsys, graph_file, tmp_path):
        out_path = tmp_path / "m.txt"
        code, _, _ = run_cli(capsys, "mpc", "--input", str(graph_file),
                             "--output", str(out_path), "--epsilon", "1",
                             "--delta", "0.1", "--seed", "3", "--mu", "0.5",
                             "--noise-scale", "0", "--t0-override", "0")
        assert code == 0
        stats = json.loads((tmp_path / "m.txt.stats.json").read_text())
        for key in ("rounds", "machines", "peak_machine_words",
                    "total_words", "mu", "diameter_flag"):
            assert key in stats["stats"]
        assert stats["banner"].startswith("NON-PRIVATE")

    def test_mpc_calibrate(self, capsys, graph_file, tmp_path):
        code, out, _ = run_cli(capsys, "mpc", "--input", str(graph_file),
                               "--output", str(tmp_path / "x.txt"),
                               "--epsilon", "1", "--delta", "0.1",
                               "--seed", "3", "--mu", "0.5",
                               "--noise-scale", "0", "--t0-override", "0",
                               "--calibrate", "2", "--a-grid", "10,30")
        assert code == 0
        payload = json.loads(out)
        assert [b["a"] for b in payload["sweep"]] == [10.0, 30.0]


class TestAudit:
    def test_audit_json_report(self, capsys, tmp_path):
        g1 = tmp_path / "g1.el"
        g2 = tmp_path / "g2.el"
        g1.write_text("# n=8\n0 1\n2 3\n4 5\n6 7\n")
        g2.write_text("# n=8\n2 3\n4 5\n6 7\n")
        code, out, _ = run_cli(capsys, "audit", "--step", "noised-degree",
                               "--graph", str(g1), "--graph-prime", str(g2),
                               "--target", "0,1", "--trials", "20000",
                               "--seed", "9", "--epsilon", "1",
                               "--delta", "0.1", "--t0-override", "2")
        assert code == 0
        payload = json.loads(out)
        assert payload["step"] == "noised-degree"
        assert payload["eps_theory"] == pytest.approx(0.25)
        assert payload["flagged"] is False


class TestBench:
    def test_bench_subset_writes_csv(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "bench", "--out-dir", str(tmp_path),
                               "--criteria", "6")
        assert code == 0
        assert "criterion  6" in out and "PASS" in out
        csv_files = list(tmp_path.glob("criterion_06_*.csv"))
        assert len(csv_files) == 1

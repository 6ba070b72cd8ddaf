import json

import numpy as np
import pytest

from gmqd.cli import main
from gmqd.output import CSV_HEADER


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCompute:
    def test_multilocal_dephasing_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--b", "0.2", "--c", "0.1",
            "--channel", "dephasing", "--locality", "multi-local",
            "--gamma-a", "0.5", "--gamma-b", "0.5",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["d_closed"] == pytest.approx(0.00125, abs=1e-15)
        assert doc["d_numeric"] == pytest.approx(0.00125, abs=1e-8)
        assert doc["abs_err"] <= 1e-8
        assert doc["a"] == pytest.approx(0.15, abs=1e-15)
        assert doc["scenario"] == {"channel": "dephasing", "locality": "multi-local"}
        assert doc["seed"] == 0

    def test_degenerate_parameters_give_zero(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--b", "0.25", "--c", "0.25",
            "--channel", "depolarizing", "--gamma-a", "0.3", "--gamma-b", "0.3",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["d_closed"] == 0.0
        assert doc["d_numeric"] == pytest.approx(0.0, abs=1e-12)

    def test_unphysical_parameters_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "compute", "--b", "0.5", "--c", "0.9")
        assert code == 2
        assert "gives a=" in err

    def test_time_flag_derives_strengths(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--b", "0.2", "--c", "0.1",
            "--time", "0.5", "--rate-a", "1.0", "--rate-b", "2.0",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["gamma_a"] == pytest.approx(1 - np.exp(-0.5), abs=1e-15)
        assert doc["gamma_b"] == pytest.approx(1 - np.exp(-1.0), abs=1e-15)

    def test_time_conflicts_with_gammas(self, capsys):
        code, _, err = run_cli(
            capsys, "compute", "--b", "0.2", "--c", "0.1",
            "--time", "0.5", "--gamma-a", "0.2",
        )
        assert code == 2
        assert "either" in err

    def test_oracle_field_optional(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "--b", "0.2", "--c", "0.1",
            "--gamma-a", "0.2", "--gamma-b", "0.2",
            "--with-oracle", "--oracle-restarts", "4", "--seed", "3",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["d_oracle"] == pytest.approx(doc["d_numeric"], abs=1e-4)

    def test_explicit_abc_consistency_check(self, capsys):
        code, _, err = run_cli(
            capsys, "compute", "--a", "0.3", "--b", "0.2", "--c", "0.1",
        )
        assert code == 2
        assert "2a+3b+c" in err


class TestSweep:
    def test_default_grid_row_count(self, capsys, tmp_path):
        out_file = tmp_path / "sweep.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--b", "0.2", "--c", "0.1",
            "--channel", "depolarizing", "--locality", "multi-local",
            "--output", str(out_file),
        )
        assert code == 0
        lines = out_file.read_text().splitlines()
        meta = [line for line in lines if line.startswith("#")]
        data = [line for line in lines if line and not line.startswith("#")]
        assert len(meta) == 2
        assert data[0] == CSV_HEADER
        assert len(data) == 1 + 101
        assert "seed=0" in meta[0]

    def test_phase_flip_endpoint_vanishes(self, capsys, tmp_path):
        out_file = tmp_path / "pf.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--b", "0.2", "--c", "0.1",
            "--channel", "phase-flip", "--locality", "multi-local",
            "--points", "11", "--output", str(out_file),
        )
        assert code == 0
        last = out_file.read_text().splitlines()[-1].split(",")
        assert abs(float(last[8])) <= 1e-12  # d_closed column

    def test_qutrit_trit_flip_endpoint_value(self, capsys, tmp_path):
        out_file = tmp_path / "tf.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--b", "0.2", "--c", "0.1",
            "--channel", "bit-flip", "--locality", "qutrit-only",
            "--points", "11", "--output", str(out_file),
        )
        assert code == 0
        last = out_file.read_text().splitlines()[-1].split(",")
        assert float(last[8]) == pytest.approx((0.1) ** 2 / 12.0, abs=1e-15)

    def test_gamma_axis_has_empty_time_column(self, capsys, tmp_path):
        out_file = tmp_path / "g.csv"
        run_cli(
            capsys, "sweep", "--b", "0.2", "--c", "0.1", "--points", "5",
            "--output", str(out_file),
        )
        for line in out_file.read_text().splitlines():
            if line.startswith("#") or line.startswith("t,"):
                continue
            assert line.startswith(",")

    def test_repeat_runs_byte_identical(self, capsys, tmp_path):
        args = (
            "sweep", "--b", "0.2", "--c", "0.1", "--channel", "bit-phase-flip",
            "--locality", "multi-local", "--points", "7", "--seed", "5",
        )
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        run_cli(capsys, *args, "--output", str(first))
        run_cli(capsys, *args, "--output", str(second))
        assert first.read_bytes() == second.read_bytes()

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "sweep", "--b", "0.2", "--c", "0.1", "--points", "3",
            "--format", "json",
        )
        assert code == 0
        doc = json.loads(out)
        assert len(doc["rows"]) == 3
        assert doc["channel"] == "dephasing"

    def test_independent_surface_rows(self, capsys, tmp_path):
        out_file = tmp_path / "surface.csv"
        code, _, _ = run_cli(
            capsys, "sweep", "--b", "0.2", "--c", "0.1",
            "--coupling", "independent", "--points", "5", "--output", str(out_file),
        )
        assert code == 0
        data = [l for l in out_file.read_text().splitlines() if l and not l.startswith("#")]
        assert len(data) == 1 + 25


class TestConfigFile:
    def test_config_matches_explicit_flags(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("b 0.2\nc = 0.1\nchannel depolarizing\nlocality multi-local\npoints 5\n")
        from_cfg, explicit = tmp_path / "cfg.csv", tmp_path / "flags.csv"
        code, _, _ = run_cli(capsys, "sweep", "--config", str(cfg), "--output", str(from_cfg))
        assert code == 0
        run_cli(
            capsys, "sweep", "--b", "0.2", "--c", "0.1", "--channel", "depolarizing",
            "--locality", "multi-local", "--points", "5", "--output", str(explicit),
        )
        assert from_cfg.read_bytes() == explicit.read_bytes()

    def test_command_line_overrides_config(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("b 0.2\nc 0.1\npoints 3\n")
        code, out, _ = run_cli(
            capsys, "sweep", "--config", str(cfg), "--points", "4", "--format", "json",
        )
        assert code == 0
        assert len(json.loads(out)["rows"]) == 4

    def test_missing_config_exits_3(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "sweep", "--config", str(tmp_path / "nope.cfg"))
        assert code == 3
        assert "config" in err


class TestChannelsCommand:
    def test_text_listing(self, capsys):
        code, out, _ = run_cli(capsys, "channels")
        assert code == 0
        for name in ("dephasing", "phase-flip", "bit-flip", "bit-phase-flip", "depolarizing"):
            assert name in out
        assert "multi-local" in out

    def test_json_listing(self, capsys):
        code, out, _ = run_cli(capsys, "channels", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        counts = {entry["name"]: (entry["qubit_ops"], entry["qutrit_ops"]) for entry in doc["channels"]}
        assert counts["depolarizing"] == (4, 9)
        assert counts["bit-phase-flip"] == (2, 5)


class TestVerifyCommand:
    def test_quick_run_passes(self, capsys, tmp_path):
        report_file = tmp_path / "report.json"
        code, out, _ = run_cli(
            capsys, "verify", "--quick", "--seed", "1", "--output", str(report_file),
        )
        assert code == 0
        assert "verification PASSED" in out
        report = json.loads(report_file.read_text())
        assert report["passed"] is True
        assert report["seed"] == 1

    def test_injected_fault_exits_1_and_names_check(self, capsys):
        code, out, err = run_cli(capsys, "verify", "--quick", "--inject-fault")
        assert code == 1
        assert "coefficient-tables/bit-flip" in out
        assert "coefficient-tables/bit-flip" in err


class TestBadUsage:
    def test_unknown_command_exits_2(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2

    def test_missing_required_flag_exits_2(self, capsys):
        assert run_cli(capsys, "compute", "--b", "0.2")[0] == 2

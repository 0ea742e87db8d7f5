"""CLI contract: flags, exit codes, report determinism and round trips."""
import json
import subprocess
import sys

import pytest

from ncres.cli import main
from ncres.reporting import dumps_canonical


def run_cli(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCompute:
    def test_theorem_addressing(self, capsys):
        code, out, _ = run_cli("compute", "--theorem", "1.1", "--m", "2",
                               "--format", "json", "--no-oracle", capsys=capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["config"] == {"n": 6, "p1": 1, "p2": 3, "m": 2, "theorem": "1.1"}
        assert len(doc["cases"]) == 5
        assert doc["L0"]["q"] == "0"
        assert doc["interior"]["pi_power"] == 3
        assert any(c["eq"] == "(3.13)" and c["status"] == "mismatch"
                   for c in doc["paper_comparisons"])

    def test_triple_addressing_equivalent(self, capsys):
        code1, out1, _ = run_cli("compute", "--theorem", "1.1", "--m", "2",
                                 "--format", "json", "--no-oracle", capsys=capsys)
        code2, out2, _ = run_cli("compute", "--n", "6", "--p1", "1", "--p2", "3",
                                 "--format", "json", "--no-oracle", capsys=capsys)
        assert code1 == code2 == 0
        assert out1 == out2

    def test_unsupported_configuration_exit_2(self, capsys):
        code, _, err = run_cli("compute", "--n", "6", "--p1", "2", "--p2", "2",
                               capsys=capsys)
        assert code == 2
        assert "unsupported configuration" in err

    def test_with_oracle(self, capsys):
        code, out, _ = run_cli("compute", "--theorem", "3.1", "--m", "1",
                               "--format", "json", "--samples", "32", capsys=capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["oracle"]["agreement"] is True


class TestUsageErrors:
    def test_missing_target(self, capsys):
        code, _, err = run_cli("compute", capsys=capsys)
        assert code == 64 and "no target" in err

    def test_conflicting_target(self, capsys):
        code, _, _ = run_cli("compute", "--theorem", "1.1", "--m", "1", "--n", "4",
                             "--p1", "1", "--p2", "1", capsys=capsys)
        assert code == 64

    def test_unknown_flag(self, capsys):
        code, _, _ = run_cli("compute", "--frobnicate", capsys=capsys)
        assert code == 64

    def test_theorem_without_m(self, capsys):
        code, _, err = run_cli("compute", "--theorem", "1.1", capsys=capsys)
        assert code == 64 and "--m" in err


class TestDeterminismAndRoundTrip:
    def test_byte_identical_reports(self, capsys):
        args = ("compute", "--theorem", "1.1", "--m", "1", "--format", "json",
                "--seed", "42", "--samples", "32")
        _, out1, _ = run_cli(*args, capsys=capsys)
        _, out2, _ = run_cli(*args, capsys=capsys)
        assert out1 == out2

    def test_json_roundtrip_byte_identical(self, capsys):
        _, out, _ = run_cli("compute", "--theorem", "3.3", "--m", "1",
                            "--format", "json", "--no-oracle", capsys=capsys)
        assert dumps_canonical(json.loads(out)) == out

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "report.json"
        code, out, _ = run_cli("compute", "--theorem", "3.1", "--m", "1",
                               "--format", "json", "--no-oracle",
                               "--out", str(path), capsys=capsys)
        assert code == 0 and out == ""
        doc = json.loads(path.read_text())
        assert doc["config"]["theorem"] == "3.1"


class TestConfigFile:
    def test_flags_win_over_config(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"theorem": "3.1", "m": 1, "h-value": 0.5,
                                   "format": "json", "no-oracle": True}))
        code, out, _ = run_cli("compute", "--config", str(cfg), capsys=capsys)
        assert code == 0
        assert json.loads(out)["numeric_at"]["h_value"] == 0.5
        code, out, _ = run_cli("compute", "--config", str(cfg),
                               "--h-value", "2.0", capsys=capsys)
        assert json.loads(out)["numeric_at"]["h_value"] == 2.0

    def test_unknown_config_key(self, capsys, tmp_path):
        cfg = tmp_path / "run.json"
        cfg.write_text(json.dumps({"bogus": 1}))
        code, _, err = run_cli("compute", "--config", str(cfg), capsys=capsys)
        assert code == 64 and "unknown config key" in err


class TestVerify:
    def test_only_trace_tables_passes(self, capsys):
        code, out, _ = run_cli("verify", "--only", "trace-tables",
                               "--format", "json", capsys=capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["hard_failures"] == 0
        assert {c["eq"] for c in doc["checks"]} == {"(3.12)", "(3.29)", "(3.51)", "(3.54)"}

    def test_only_vanishing_passes(self, capsys):
        code, out, _ = run_cli("verify", "--only", "vanishing", "--m-max", "2",
                               "--format", "json", capsys=capsys)
        assert code == 0

    def test_integrands_reports_documented_mismatch(self, capsys):
        """The (3.13) print discrepancy is a hard mismatch: exit 1."""
        code, out, _ = run_cli("verify", "--only", "integrands", "--m-max", "1",
                               "--format", "json", capsys=capsys)
        doc = json.loads(out)
        status = {c["eq"]: c["status"] for c in doc["checks"]}
        assert status["(3.13)"] == "mismatch"
        assert status["(3.25)"] == status["(3.30)"] == status["(3.46)"] == "match"
        assert code == 1

    def test_values_soft_only_exit_0_and_strict_exit_1(self, capsys):
        code, out, _ = run_cli("verify", "--only", "values", "--m-max", "1",
                               "--format", "json", capsys=capsys)
        doc = json.loads(out)
        assert doc["hard_failures"] == 0
        assert doc["soft_warnings"] >= 2
        assert code == 0
        code, _, _ = run_cli("verify", "--only", "values", "--m-max", "1",
                             "--strict", "--format", "json", capsys=capsys)
        assert code == 1

    def test_full_verify_m1(self, capsys):
        """Full sweep: every hard check except the documented (3.13) passes."""
        code, out, _ = run_cli("verify", "--m-max", "1", "--format", "json",
                               "--samples", "32", capsys=capsys)
        doc = json.loads(out)
        hard_mismatches = [c["eq"] for c in doc["checks"]
                           if c["status"] == "mismatch" and c["severity"] == "hard"]
        assert hard_mismatches == ["(3.13)"]
        assert code == 1


class TestCatalog:
    def test_entry_lookup(self, capsys):
        code, out, _ = run_cli("catalog", "--m", "2", "--entry", "sigma_-4_D-3",
                               "--format", "json", capsys=capsys)
        assert code == 0
        doc = json.loads(out)
        assert len(doc["entries"]) == 1
        assert doc["entries"][0]["eq"] == "(3.5)/(3.37)"

    def test_m1_includes_leading_entry(self, capsys):
        code, out, _ = run_cli("catalog", "--m", "1", "--format", "json", capsys=capsys)
        doc = json.loads(out)
        labels = {e["label"] for e in doc["entries"]}
        assert "sigma_-1_D-1" in labels and "pi+sigma_-1_D-1" in labels
        assert any(e["eq"].startswith("(3.3)") for e in doc["entries"])

    def test_large_m_warns(self, capsys):
        code, out, _ = run_cli("catalog", "--m", "9", "--format", "json", capsys=capsys)
        assert code == 0
        assert "warning" in json.loads(out)

    def test_missing_entry(self, capsys):
        code, _, err = run_cli("catalog", "--m", "1", "--entry", "nope", capsys=capsys)
        assert code == 2 and "no catalog entry" in err


def test_module_invocation():
    proc = subprocess.run([sys.executable, "-m", "ncres", "compute", "--theorem",
                           "3.3", "--m", "1", "--format", "json", "--no-oracle"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["boundary_vanishes"] is True

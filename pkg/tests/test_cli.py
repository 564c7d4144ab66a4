import json
import math

import pytest

from mathieuseries import cli
from mathieuseries.mathieu import MathieuParams, eval_S


def run(capsys, *args):
    code = cli.main(list(args))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEval:
    def test_classical_point(self, capsys):
        code, out, _ = run(capsys, "eval", "--gamma", "1", "--alpha", "2",
                           "--mu", "1", "--u", "0", "--t", "1")
        assert code == 0
        rec = json.loads(out.strip())
        oracle = eval_S(MathieuParams(1.0, 2.0, 1.0, 0.0), 1.0, 1e-12)
        assert rec["value"] == pytest.approx(oracle.value, abs=1e-9)
        assert rec["method"] == "direct"
        assert set(rec) == {"t", "value", "err_lo", "err_hi", "method", "terms"}

    def test_poisson_point(self, capsys):
        code, out, _ = run(capsys, "eval", "--gamma", "0", "--alpha", "2",
                           "--mu", "0", "--u", "0", "--t", "1")
        assert code == 0
        rec = json.loads(out.strip())
        closed = math.pi - 1.0 + 2.0 * math.pi / math.expm1(2.0 * math.pi)
        assert rec["value"] == pytest.approx(closed, abs=1e-9)

    def test_delta_constraint_exit_2(self, capsys):
        code, _, err = run(capsys, "eval", "--gamma", "1", "--alpha", "2",
                           "--mu", "0", "--u", "0", "--t", "1")
        assert code == 2
        assert "must exceed 1" in err

    def test_alt_identity(self, capsys):
        code, out, _ = run(capsys, "eval-alt", "--gamma", "0", "--alpha", "2",
                           "--mu", "0", "--u", "0", "--t", "1")
        assert code == 0
        rec = json.loads(out.strip())
        closed = 1.0 - 2.0 * math.pi / (math.exp(math.pi) - math.exp(-math.pi))
        assert rec["value"] == pytest.approx(closed, abs=1e-9)

    def test_sweep_csv(self, capsys):
        code, out, _ = run(capsys, "eval", "--t-start", "1", "--t-stop", "2",
                           "--t-count", "3", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "t,value,err_lo,err_hi,method,terms"
        assert len(lines) == 4

    def test_determinism(self, capsys):
        args = ("eval", "--t-start", "0.5", "--t-stop", "50", "--t-count", "7", "--t-log")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2


class TestAsym:
    def test_classical_coefficients(self, capsys):
        code, out, _ = run(capsys, "asym", "--n-terms", "3")
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert recs[0]["coefficient"] == pytest.approx(1.0)
        assert recs[1]["coefficient"] == pytest.approx(-1.0 / 6.0)

    def test_offset_coefficient(self, capsys):
        code, out, _ = run(capsys, "asym", "--u", "0.5", "--n-terms", "2")
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert recs[1]["coefficient"] == pytest.approx(-11.0 / 12.0)

    def test_alternating_expansion(self, capsys):
        # leading entry of the alternating expansion: -E_1(0) = 1/2 at t^-4
        code, out, _ = run(capsys, "asym", "--alt", "--n-terms", "2")
        assert code == 0
        recs = [json.loads(line) for line in out.strip().splitlines()]
        assert recs[0]["k"] == 0
        assert recs[0]["inv_t_power"] == 4.0
        assert recs[0]["coefficient"] == pytest.approx(0.5)

    def test_regime_exit_2(self, capsys):
        code, _, err = run(capsys, "asym", "--gamma", "3.5")
        assert code == 2
        assert "gamma" in err


class TestConstants:
    def test_classical(self, capsys):
        code, out, _ = run(capsys, "constants", "--mu", "1", "--u", "0")
        assert code == 0
        rec = json.loads(out.strip().replace('"inf"', '"Infinity"').replace('"Infinity"', "1e999"))
        assert rec["m"] == pytest.approx(1.0 / 6.0, abs=1e-6)
        assert rec["M"] == pytest.approx(0.4159537, abs=1e-5)

    def test_limiting(self, capsys):
        code, out, _ = run(capsys, "constants", "--inf", "--u", "0")
        rec = json.loads(out.strip())
        assert rec["M_inf"] == 1.0
        assert 0.0 < rec["m_inf"] <= 1.0 / 6.0 + 1e-12

    def test_bounds_echoed(self, capsys):
        code, out, _ = run(capsys, "constants", "--mu", "1", "--u", "1")
        rec = json.loads(out.strip().replace('"inf"', "1e999"))
        assert 2.0 < rec["m"] <= 2.0 + 1.0 / 6.0 + 1e-9
        assert 2.25 < rec["M"] < 4.0

    def test_negative_u_exit_2(self, capsys):
        code, _, _ = run(capsys, "constants", "--mu", "1", "--u", "-0.5")
        assert code == 2


class TestVerify:
    def test_classical_suite_passes(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "classical", "--output", str(out_path))
        assert code == 0
        doc = json.loads(out_path.read_text())
        assert doc["passed"] is True
        assert {r["check_name"] for r in doc["reports"]} >= {
            "classical-inequalities", "poisson-closed-forms"
        }

    def test_deliberate_failure_exit_1(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code, out, _ = run(capsys, "verify", "monotone", "--b", "10", "--output", str(out_path))
        assert code == 1
        doc = json.loads(out_path.read_text())
        assert not doc["passed"]
        viol = doc["reports"][0]["violations"]
        assert viol, "expected a witness for the oversized shift"

    def test_unknown_suite_exit_2(self, capsys):
        assert cli.main(["verify", "nope"]) == 2


class TestHankel:
    def test_exp_kernel_closed_form(self, capsys):
        code, out, _ = run(capsys, "hankel", "--kernel", "exp", "--m", "3",
                           "--t", "1", "--p", "1")
        rec = json.loads(out.strip())
        expected = math.sqrt(2.0 / math.pi) * 0.5
        assert rec["value"] == pytest.approx(expected, abs=1e-10)

    def test_difference_kernel_matches_series_gap(self, capsys):
        code, out, _ = run(capsys, "hankel", "--kernel", "g-pu", "--m", "3",
                           "--t", "1", "--p", "0.4", "--u", "0")
        rec = json.loads(out.strip())
        s = eval_S(MathieuParams(1.0, 2.0, 1.0, 0.0), 1.0, 1e-12).value
        expected = (1.0 / (0.4**2 + 1.0) - s) * 2.0**0.5 / math.sqrt(math.pi)
        assert rec["value"] == pytest.approx(expected, abs=1e-10)


class TestConfigPlumbing:
    def test_config_file_merge_flags_win(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("t = 2.0\nmu = 1.0\n")
        code, out, _ = run(capsys, "eval", "--config", str(cfg), "--t", "1.0")
        rec = json.loads(out.strip())
        assert rec["t"] == 1.0  # flag beats file
        code, out, _ = run(capsys, "eval", "--config", str(cfg))
        rec = json.loads(out.strip())
        assert rec["t"] == 2.0

    def test_explicit_sweep_beats_file_point(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("t = 2.0\n")
        code, out, _ = run(capsys, "eval", "--config", str(cfg),
                           "--t-start", "1", "--t-stop", "3", "--t-count", "3")
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_config_rejects_unknown_key(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("bogus = 1\n")
        code, _, err = run(capsys, "eval", "--config", str(cfg), "--t", "1.0")
        assert code == 2
        assert "bogus" in err

    def test_runconfig_roundtrip(self):
        cfg = cli.RunConfig(command="eval", gamma=1.5, t=2.0)
        again = cli.RunConfig.from_dict(cfg.to_dict())
        assert again == cfg

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / "out.jsonl"
        code, out, _ = run(capsys, "eval", "--t", "1.0", "--output", str(path))
        assert code == 0
        assert out == ""
        assert json.loads(path.read_text().strip())["t"] == 1.0

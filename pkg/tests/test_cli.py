"""Command-line surface: exit codes, formats, determinism."""

import json
import math

import pytest

from alphaharmonic.cli import main


@pytest.fixture()
def boundary_file(tmp_path):
    def write(name, degree, coefficients):
        path = tmp_path / name
        path.write_text(json.dumps({"degree": degree, "coefficients": coefficients}))
        return str(path)

    return write


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval2F1:
    def test_log_value(self, capsys):
        code, out, _ = run(capsys, ["eval2f1", "--a", "1", "--b", "1",
                                    "--c", "2", "--x", "0.5"])
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "value,terms_used,transform"
        value = float(lines[1].split(",")[0])
        assert value == pytest.approx(2.0 * math.log(2.0), rel=1e-11)

    def test_trivial_a_zero(self, capsys):
        code, out, _ = run(capsys, ["eval2f1", "--a", "0", "--b", "5",
                                    "--c", "1", "--x", "0.9"])
        assert code == 0
        assert float(out.strip().split("\n")[1].split(",")[0]) == 1.0

    def test_invalid_c_exits_2(self, capsys):
        code, _, err = run(capsys, ["eval2f1", "--a", "1", "--b", "1",
                                    "--c", "-2", "--x", "0.1"])
        assert code == 2
        assert "domain error" in err

    def test_missing_flag_exits_1(self, capsys):
        code, _, _ = run(capsys, ["eval2f1", "--a", "1", "--b", "1", "--c", "2"])
        assert code == 1

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, ["eval2f1", "--a", "1", "--b", "1",
                                    "--c", "2", "--x", "0.25", "--format", "json"])
        assert code == 0
        doc = json.loads(out)
        assert doc["transform"] == "none"


class TestSolve:
    def test_constant_boundary(self, capsys, boundary_file):
        path = boundary_file("one.json", 0, [[1.0, 0.0]])
        code, out, _ = run(capsys, ["solve", "--alpha", "2", "--boundary", path,
                                    "--z-re", "0.4", "--z-im", "0.2"])
        assert code == 0
        row = out.strip().split("\n")[1].split(",")
        header = out.strip().split("\n")[0].split(",")
        rec = dict(zip(header, row))
        assert float(rec["f_re"]) == pytest.approx(1.0, abs=1e-10)
        assert float(rec["f_im"]) == pytest.approx(0.0, abs=1e-10)

    def test_identity_boundary(self, capsys, boundary_file):
        path = boundary_file("eik.json", 1, [[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]])
        code, out, _ = run(capsys, ["solve", "--alpha", "1.5", "--boundary", path,
                                    "--z-re", "0.3", "--z-im", "0.1",
                                    "--format", "json"])
        assert code == 0
        doc = json.loads(out)
        assert doc["f_re"] == pytest.approx(0.3, abs=1e-10)
        assert doc["f_im"] == pytest.approx(0.1, abs=1e-10)
        assert doc["deriv_norm"] == pytest.approx(1.0, abs=1e-9)
        assert doc["quad_converged"] is True

    def test_exterior_point_exits_2(self, capsys, boundary_file):
        path = boundary_file("one.json", 0, [[1.0, 0.0]])
        code, _, err = run(capsys, ["solve", "--alpha", "1", "--boundary", path,
                                    "--z-re", "1.5", "--z-im", "0"])
        assert code == 2

    def test_unreadable_file_exits_1(self, capsys, tmp_path):
        code, _, _ = run(capsys, ["solve", "--alpha", "1",
                                  "--boundary", str(tmp_path / "missing.json"),
                                  "--z-re", "0.1", "--z-im", "0"])
        assert code == 1

    def test_malformed_json_exits_1(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        code, _, _ = run(capsys, ["solve", "--alpha", "1", "--boundary", str(bad),
                                  "--z-re", "0.1", "--z-im", "0"])
        assert code == 1

    def test_starved_quadrature_exits_3(self, capsys, boundary_file):
        coeffs = [[0.0, 0.0]] * 16 + [[1.0, 0.0]]  # degree-8 mode, 17 entries
        path = boundary_file("hi.json", 8, coeffs)
        code, _, err = run(capsys, ["solve", "--alpha", "2", "--boundary", path,
                                    "--z-re", "0.9", "--z-im", "0",
                                    "--quad-n-max", "8"])
        assert code == 3
        assert "non-convergence" in err

    def test_escape_hatch_allows_near_boundary(self, capsys, boundary_file):
        path = boundary_file("one.json", 0, [[1.0, 0.0]])
        code, out, _ = run(capsys, ["solve", "--alpha", "1", "--boundary", path,
                                    "--z-re", "0.995", "--z-im", "0",
                                    "--quad-n-max", str(2 ** 16),
                                    "--format", "json"])
        assert code == 0
        assert json.loads(out)["f_re"] == pytest.approx(1.0, abs=1e-9)


class TestBounds:
    def test_colonna_row(self, capsys):
        code, out, _ = run(capsys, ["bounds", "--id", "COLONNA", "--r", "0"])
        assert code == 0
        assert float(out.strip().split("\n")[1].split(",")[-1]) == pytest.approx(
            4.0 / math.pi, rel=1e-12)

    def test_all_returns_ten_rows(self, capsys):
        code, out, _ = run(capsys, ["bounds", "--id", "all", "--r", "0.5",
                                    "--alpha", "2", "--c", "0.6"])
        assert code == 0
        assert len(out.strip().split("\n")) == 11  # header + 10 bounds

    def test_all_negative_alpha_skips_nonapplicable(self, capsys):
        code, out, _ = run(capsys, ["bounds", "--id", "all", "--r", "0.5",
                                    "--alpha", "-0.5", "--c", "0.6"])
        assert code == 0
        body = out.strip().split("\n")[1:]
        assert len(body) == 9
        assert not any(line.startswith("M_PRIME") for line in body)

    def test_m1_without_c_exits_2(self, capsys):
        code, _, err = run(capsys, ["bounds", "--id", "M1", "--r", "0.5",
                                    "--alpha", "2"])
        assert code == 2

    def test_bad_radius_exits_2(self, capsys):
        code, _, _ = run(capsys, ["bounds", "--id", "M2", "--r", "1.5",
                                  "--alpha", "1"])
        assert code == 2


class TestVerify:
    def test_identities_suite_passes(self, capsys):
        code, out, _ = run(capsys, ["verify", "--suite", "identities",
                                    "--seed", "0", "--trials", "25"])
        assert code == 0
        assert out.startswith("theorem_id,")

    def test_machinery_deterministic_bytes(self, capsys):
        argv = ["verify", "--suite", "machinery", "--seed", "1", "--trials", "10"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2

    def test_schwarz_small(self, capsys):
        code, out, _ = run(capsys, ["verify", "--suite", "schwarz",
                                    "--seed", "4", "--trials", "15"])
        assert code == 0
        assert "CENTER_M," in out

    def test_violations_exit_4(self, capsys, monkeypatch):
        from alphaharmonic.verify import TrialReport
        import alphaharmonic.cli as cli_mod

        fake = [TrialReport("CENTER_M", 10, 2, 0, -1e-3)]
        monkeypatch.setattr(cli_mod, "run_suite", lambda name, spec: fake)
        code, out, err = run(capsys, ["verify", "--suite", "schwarz"])
        assert code == 4
        assert "violations" in err

    def test_informational_violations_do_not_fail(self, capsys, monkeypatch):
        from alphaharmonic.verify import TrialReport
        import alphaharmonic.cli as cli_mod

        fake = [TrialReport("CENTER_M1", 10, 2, 0, -1e-3, informational=True),
                TrialReport("CENTER_M", 10, 0, 0, 0.5)]
        monkeypatch.setattr(cli_mod, "run_suite", lambda name, spec: fake)
        code, _, _ = run(capsys, ["verify", "--suite", "schwarz"])
        assert code == 0

    def test_high_inconclusive_rate_exits_3(self, capsys, monkeypatch):
        from alphaharmonic.verify import TrialReport
        import alphaharmonic.cli as cli_mod

        fake = [TrialReport("CENTER_M", 90, 0, 10, 0.5)]
        monkeypatch.setattr(cli_mod, "run_suite", lambda name, spec: fake)
        code, _, err = run(capsys, ["verify", "--suite", "schwarz"])
        assert code == 3


class TestFigure1:
    def test_default_rows(self, capsys):
        code, out, _ = run(capsys, ["figure1"])
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "alpha,M,M2"
        assert len(lines) == 81
        for line in lines[1:]:
            _, m, m2 = (float(v) for v in line.split(","))
            assert m <= m2

    def test_alpha_zero_row(self, capsys):
        _, out, _ = run(capsys, ["figure1"])
        want = 4.0 / math.pi * math.atan(0.99)
        for line in out.strip().split("\n")[1:]:
            a, m, m2 = (float(v) for v in line.split(","))
            if a == 0.0:
                assert m == pytest.approx(want, abs=1e-10)
                assert m2 == pytest.approx(want, abs=1e-10)
                break
        else:
            pytest.fail("no alpha = 0 row")

    def test_low_alpha_min_exits_2(self, capsys):
        code, _, _ = run(capsys, ["figure1", "--alpha-min", "-2"])
        assert code == 2

    def test_deterministic_bytes(self, capsys):
        _, out1, _ = run(capsys, ["figure1", "--step", "0.5"])
        _, out2, _ = run(capsys, ["figure1", "--step", "0.5"])
        assert out1 == out2

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "fig.csv"
        code, out, _ = run(capsys, ["figure1", "--step", "1.0", "--out", str(dest)])
        assert code == 0
        assert out == ""
        text = dest.read_text()
        assert text.startswith("alpha,M,M2\n")
        assert "\r" not in text


class TestUsage:
    def test_no_command_exits_1(self, capsys):
        code, _, _ = run(capsys, [])
        assert code == 1

    def test_unknown_command_exits_1(self, capsys):
        code, _, _ = run(capsys, ["frobnicate"])
        assert code == 1

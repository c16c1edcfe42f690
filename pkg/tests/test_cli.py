import csv
import json
import math
import pathlib

import pytest

from nbsloc import cli
from nbsloc.locop import disk_eigenvalue, leakage_bound


def run_cli(args, capsys):
    code = cli.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    params = {}
    rows = []
    header = None
    for line in text.splitlines():
        if line.startswith("#"):
            key, _, value = line[2:].partition(" = ")
            params[key] = value
        elif header is None:
            header = line.split(",")
        else:
            rows.append(line.split(","))
    return params, header, rows


class TestEigvals:
    def test_unit_strength_table(self, capsys):
        code, out, _ = run_cli(["eigvals", "--B", "1", "--R", "0.5", "--j-max", "3"], capsys)
        assert code == 0
        _, header, rows = parse_csv(out)
        assert header == ["j", "lambda"]
        values = [float(r[1]) for r in rows]
        for j, got in enumerate(values):
            assert got == pytest.approx(0.25 ** (j + 1), abs=1e-12)

    def test_json_structure(self, capsys):
        code, out, _ = run_cli(
            ["eigvals", "--B", "1.5", "--j-max", "2", "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["params"]["B"] == 1.5
        assert [row["j"] for row in doc["data"]] == [0, 1, 2]

    def test_higher_level_table(self, capsys):
        code, out, _ = run_cli(
            ["eigvals", "--B", "2.5", "--m", "1", "--j-max", "2", "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert all(0.0 <= row["lambda"] <= 1.0 for row in doc["data"])

    def test_inadmissible_level_exit_code(self, capsys):
        code, _, err = run_cli(["eigvals", "--B", "1.5", "--m", "2"], capsys)
        assert code == 2
        assert "floor(B - 1/2)" in err

    def test_bad_radius_exit_code(self, capsys):
        code, _, err = run_cli(["eigvals", "--R", "1.5"], capsys)
        assert code == 2
        assert "0 < R < 1" in err

    def test_nan_strength_exit_code(self, capsys):
        code, _, err = run_cli(["eigvals", "--B", "nan"], capsys)
        assert code == 2
        assert "2B > 1" in err


class TestKernel:
    def test_default_s_note_and_value(self, capsys):
        code, out, _ = run_cli(
            ["kernel", "--B", "1", "--R", "0.5", "--z", "0", "--w", "0.3", "--format", "json"],
            capsys)
        assert code == 0
        doc = json.loads(out)
        rec = doc["data"][0]
        assert doc["params"]["s"] == 0.25
        assert rec["note"] == "s defaulted to R^2"
        assert rec["closed_re"] == pytest.approx(0.25, rel=1e-10)
        assert rec["rel_discrepancy"] <= 1e-8

    def test_outside_disk_rejected(self, capsys):
        code, _, err = run_cli(["kernel", "--z", "1.2", "--w", "0.1"], capsys)
        assert code == 2
        assert "|z| < 1" in err

    def test_malformed_complex_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["kernel", "--z", "nope", "--w", "0.1"])
        assert exc.value.code == 2


class TestLeakage:
    def test_matches_library(self, capsys):
        code, out, _ = run_cli(
            ["leakage", "--B", "1.5", "--R", "0.5", "--z", "0.7", "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        assert doc["data"][0]["bound"] == pytest.approx(
            leakage_bound(0.7, 1.5, 0.5), rel=1e-12)
        assert doc["data"][0]["p"] == pytest.approx(0.49)


class TestDensity:
    def test_rows_parse_and_normalize_roughly(self, capsys):
        code, out, _ = run_cli(
            ["density", "--B", "1.5", "--j-max", "1", "--samples", "400"], capsys)
        assert code == 0
        _, header, rows = parse_csv(out)
        assert header == ["j", "rho", "density"]
        per_j = {}
        for j, rho, dens in rows:
            per_j.setdefault(int(j), []).append(float(dens))
        # left Riemann sum on the uniform grid is a crude mass check
        for j, vals in per_j.items():
            assert sum(vals) / 400 == pytest.approx(1.0, abs=0.05)


class TestMc:
    def test_estimates_close(self, capsys):
        code, out, _ = run_cli(
            ["mc", "--B", "1.25", "--R", "0.6", "--j-max", "2",
             "--samples", "100000", "--format", "json"], capsys)
        assert code == 0
        doc = json.loads(out)
        for row in doc["data"]:
            exact = disk_eigenvalue(row["j"], 1.25, 0.6)
            sigma = math.sqrt(exact * (1.0 - exact) / 100000)
            assert abs(row["estimate"] - exact) <= 5.0 * sigma

    def test_byte_identical_reruns(self, tmp_path, capsys):
        out_a = tmp_path / "a.csv"
        out_b = tmp_path / "b.csv"
        for path in (out_a, out_b):
            code, _, _ = run_cli(
                ["mc", "--B", "1.25", "--R", "0.6", "--j-max", "1",
                 "--samples", "20000", "--seed", "7", "--out", str(path)], capsys)
            assert code == 0
        assert out_a.read_bytes() == out_b.read_bytes()


class TestVerifyCommand:
    def test_report_written_and_passes(self, tmp_path, capsys):
        out = tmp_path / "report.json"
        code, _, err = run_cli(["verify", "--format", "json", "--out", str(out)], capsys)
        assert code == 0
        assert "verification passed" in err
        doc = json.loads(out.read_text())
        assert all(row["passed"] for row in doc["data"])

    def test_report_validates_against_schema(self, tmp_path, capsys):
        jsonschema = pytest.importorskip("jsonschema")
        out = tmp_path / "report.json"
        code, _, _ = run_cli(["verify", "--format", "json", "--out", str(out)], capsys)
        assert code == 0
        schema_path = pathlib.Path(__file__).resolve().parent.parent / "docs" / "verify_report.schema.json"
        jsonschema.validate(json.loads(out.read_text()), json.loads(schema_path.read_text()))

    def test_injected_fault_fails_with_exit_one(self, capsys):
        from nbsloc import specfun

        specfun.set_gamma_ratio_perturbation(1e-3)
        try:
            code, _, err = run_cli(["verify"], capsys)
        finally:
            specfun.set_gamma_ratio_perturbation(0.0)
        assert code == 1
        assert "laguerre_orthonormality" in err
        assert "FAILED" in err

import csv
import io
import json
import math
import subprocess
import sys

import pytest

from pemc_casimir import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def results_by_name(text):
    return {r["name"]: r for r in json.loads(text)["results"]}


def test_force_si_pec_pec(capsys):
    code, out, _ = run(["force", "--theta-plus", "0", "--theta-minus", "0", "--L", "1e-6", "--units", "si"], capsys)
    assert code == cli.EXIT_OK
    res = results_by_name(out)
    assert res["force_analytic"]["value"] == pytest.approx(-1.300e-3, rel=5e-3)
    assert res["force_analytic"]["units"] == "si"
    assert res["ratio_to_pec_pec"]["value"] == pytest.approx(1.0, abs=1e-12)
    assert res["analytic_quadrature_discrepancy"]["value"] < 1e-15


def test_force_pec_pmc_ratio(capsys):
    code, out, _ = run(["force", "--m-plus", "inf", "--m-minus", "0", "--units", "normalized"], capsys)
    assert code == 0
    assert results_by_name(out)["ratio_to_pec_pec"]["value"] == pytest.approx(-7 / 8, abs=1e-12)


def test_identical_plates(capsys):
    _, out, _ = run(["force", "--theta-plus", "1.0", "--theta-minus", "1.0"], capsys)
    assert results_by_name(out)["ratio_to_pec_pec"]["value"] == pytest.approx(1.0, abs=1e-12)


def test_missing_plate_is_pec(capsys):
    _, out, _ = run(["force", "--m-minus", "0"], capsys)
    assert results_by_name(out)["ratio_to_pec_pec"]["value"] == pytest.approx(-7 / 8, abs=1e-12)


@pytest.mark.parametrize("argv", [
    ["force", "--theta-plus", "0.1", "--m-minus", "2"],
    ["force", "--L", "-1"],
    ["force", "--L", "0"],
    ["sweep", "--points", "1"],
    ["sweep", "--delta-min", "1", "--delta-max", "0.5"],
    ["force", "--rel-tol", "0"],
    ["force", "--units", "cgs"],
    ["bogus"],
    [],
])
def test_usage_errors(argv, capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(argv)
    assert info.value.code == cli.EXIT_USAGE


def test_sweep_default(capsys):
    code, out, _ = run(["sweep"], capsys)
    assert code == 0
    assert out.endswith("\n") and "\r" not in out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["delta_rad", "force_normalized"]
    data = [(float(a), float(b)) for a, b in rows[1:]]
    assert len(data) == cli.DEFAULT_POINTS
    assert data[0] == (0.0, pytest.approx(-1.0, abs=1e-12))
    assert data[-1][0] == pytest.approx(math.pi / 2, abs=0)
    assert data[-1][1] == pytest.approx(0.875, abs=1e-12)
    mid = data[(len(data) - 1) // 2]
    assert mid[0] == pytest.approx(math.pi / 4) and mid[1] == pytest.approx(7 / 128, abs=1e-12)
    deltas = [d for d, _ in data]
    assert all(b > a for a, b in zip(deltas, deltas[1:]))
    signs = [v > 0 for _, v in data]
    assert sum(a != b for a, b in zip(signs, signs[1:])) == 1
    # fields are written with 17 significant digits
    assert all("%.17g" % float(x) == x for row in rows[1:] for x in row)


def test_sweep_two_points_and_json(capsys):
    _, out, _ = run(["sweep", "--points", "2", "--format", "json"], capsys)
    doc = json.loads(out)
    assert list(doc) == ["config", "results", "checks"]
    assert len(doc["results"]) == 2
    for row in doc["results"]:
        assert row["delta"]["units"] == "rad"
        assert row["force_normalized"]["units"] == "normalized"


def test_sweep_methods_agree(capsys):
    outs = []
    for method in ("analytic", "quartic", "quadrature"):
        _, out, _ = run(["sweep", "--points", "7", "--method", method], capsys)
        outs.append([float(r[1]) for r in list(csv.reader(io.StringIO(out)))[1:]])
    for a, b in zip(outs[0], outs[2]):
        assert a == pytest.approx(b, rel=1e-10, abs=1e-14)


def test_deterministic_output(capsys):
    _, a, _ = run(["sweep", "--points", "31", "--format", "json"], capsys)
    _, b, _ = run(["sweep", "--points", "31", "--format", "json"], capsys)
    assert a == b


def test_crit(capsys):
    _, out, _ = run(["crit"], capsys)
    res = results_by_name(out)
    assert res["delta_crit_closed_form"]["value"] == pytest.approx(0.755035, abs=1e-6)
    assert res["difference"]["value"] <= 1e-10
    assert abs(res["ratio_to_quarter_pi"]["value"] - 0.96) <= 0.005


def test_sumrule_csv(capsys):
    _, out, _ = run(["sumrule", "--format", "csv"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["quantity", "value", "units"]
    assert all(abs(float(r[1])) < 1e-10 for r in rows[1:])


def _every_number_tagged(node):
    if isinstance(node, dict):
        if "value" in node and isinstance(node["value"], float):
            assert isinstance(node.get("units"), str)
            return
        for v in node.values():
            _every_number_tagged(v)
    elif isinstance(node, list):
        for v in node:
            _every_number_tagged(v)
    else:
        assert not isinstance(node, float)


def test_json_units_tags(capsys):
    _, out, _ = run(["force", "--theta-plus", "0.4"], capsys)
    _every_number_tagged(json.loads(out))


def test_output_file_and_io_error(tmp_path, capsys):
    target = tmp_path / "sweep.csv"
    assert cli.main(["sweep", "--points", "3", "-o", str(target)]) == 0
    assert target.read_text().startswith("delta_rad,force_normalized\n")
    code = cli.main(["sweep", "--points", "3", "-o", str(tmp_path / "missing" / "x.csv")])
    assert code == cli.EXIT_IO


def test_accuracy_exit(monkeypatch, capsys):
    from pemc_casimir import force as fm
    from pemc_casimir.errors import AccuracyError

    def boom(*a, **k):
        raise AccuracyError("forced", -1.0, 1.0)
    monkeypatch.setattr(fm, "force_quadrature", boom)
    code, _, err = run(["force"], capsys)
    assert code == cli.EXIT_ACCURACY
    assert "accuracy" in err


def test_verify_subprocess():
    ok = subprocess.run([sys.executable, "-m", "pemc_casimir", "verify", "--json"], capture_output=True, text=True)
    assert ok.returncode == 0, ok.stdout
    doc = json.loads(ok.stdout)
    assert doc["checks"] and all(c["passed"] for c in doc["checks"])
    bad = subprocess.run([sys.executable, "-m", "pemc_casimir", "verify", "--inject-fault", "1e-6"],
                         capture_output=True, text=True)
    assert bad.returncode == cli.EXIT_VERIFY
    failed = [r[0] for r in csv.reader(io.StringIO(bad.stdout)) if r[1] == "FAIL"]
    assert failed == ["three_way_agreement"]

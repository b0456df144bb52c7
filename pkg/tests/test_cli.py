import csv
import hashlib
import json

import pytest

from weberbox.cli import main


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


@pytest.mark.slow
def test_spectrum_full_grid(tmp_path):
    out = tmp_path / "spectrum.csv"
    assert main(["spectrum", "--l-min", "0", "--l-max", "5", "--l-step", "0.05", "--n-max", "5", "--out", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["l", "n", "parity", "energy", "ratio_to_ground"]
    assert len(rows) == 607
    first = rows[1]
    assert first[:3] == ["0", "0", "even"] and float(first[3]) == pytest.approx(0.5, abs=1e-10)


def test_spectrum_box_row_and_determinism(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    argv = ["spectrum", "--l-min", "19", "--l-max", "20", "--l-step", "0.5", "--n-max", "2"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r" not in a.read_bytes()
    row = next(r for r in read_csv(a)[1:] if r[0] == "20" and r[1] == "1")
    assert float(row[4]) == pytest.approx(4.0, rel=0.05)
    # 15 significant digits
    assert len(row[3].replace(".", "").lstrip("0")) <= 15


def test_default_output_name(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["spectrum", "--l-min", "0", "--l-max", "0.1", "--l-step", "0.1", "--n-max", "1"]) == 0
    assert (tmp_path / "spectrum.csv").exists()
    assert main(["spectrum", "--l-max", "0.1", "--l-step", "0.1", "--n-max", "1", "--format", "json"]) == 0
    doc = json.loads((tmp_path / "spectrum.json").read_text())
    assert doc["meta"]["n_max"] == 1 and len(doc["rows"]) == 4


@pytest.mark.parametrize(
    "argv",
    [
        ["spectrum", "--l-step", "-0.1"],
        ["spectrum", "--l-min", "-1"],
        ["spectrum", "--l-min", "3", "--l-max", "1"],
        ["asymptotics", "--sandwich", "--r-list", "0,1"],
        ["asymptotics", "--sandwich", "--lambda", "1.2"],
        ["hydrogen", "--xi", "2", "--L", "0"],
        ["hydrogen"],
        ["verify", "--only", "99"],
        ["verify", "--budget-scale", "nan"],
        ["wavefunction", "--l", "1"],
    ],
)
def test_usage_errors_exit_2(tmp_path, monkeypatch, argv):
    monkeypatch.chdir(tmp_path)
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_wavefunction_critical_nodes(tmp_path):
    out = tmp_path / "wf.csv"
    assert main(["wavefunction", "--l", "1.2825498", "--n", "2", "--z-max", "8", "--out", str(out)]) == 0
    rows = [(float(z), float(p)) for z, p in read_csv(out)[1:]]
    nodes = [0.5 * (a[0] + b[0]) for a, b in zip(rows, rows[1:]) if (a[1] < 0) != (b[1] < 0)]
    assert len(nodes) == 2 and all(abs(abs(z) - 1.28) < 0.01 for z in nodes)


def test_wavefunction_max_norm_single_node(tmp_path):
    out = tmp_path / "wf.json"
    assert main(["wavefunction", "--l", "6", "--n", "1", "--max-norm", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["meta"]["normalization"] == "max"
    vals = [r["psi"] for r in doc["rows"]]
    assert max(abs(v) for v in vals) == pytest.approx(1.0)
    signs = [v < 0 for v in vals if abs(v) > 1e-9]
    assert sum(a != b for a, b in zip(signs, signs[1:])) == 1


def test_wavefunction_gaussian(tmp_path):
    out = tmp_path / "g.csv"
    assert main(["wavefunction", "--l", "0", "--n", "0", "--z-max", "3", "--h", "0.01", "--max-norm", "--out", str(out)]) == 0
    for z, p in read_csv(out)[1:]:
        assert float(p) == pytest.approx(2.718281828459045 ** (-float(z) ** 2 / 4), abs=1e-9)


def test_asymptotics_table(tmp_path):
    out = tmp_path / "asy.csv"
    argv = ["asymptotics", "--r-list", "1", "--omega-min", "100", "--omega-max", "300", "--omega-step", "100", "--sandwich"]
    assert main(argv + ["--out", str(out)]) == 0
    rows = read_csv(out)
    assert rows[0] == ["omega", "r", "normalized_ratio", "head", "tail", "lower", "upper"]
    for r in rows[1:]:
        w, ratio, lower, upper = float(r[0]), float(r[2]), float(r[5]), float(r[6])
        assert lower <= ratio <= upper
        if w == 200:
            assert 0.95 <= ratio <= 1.05


def test_asymptotics_r_zero(tmp_path):
    out = tmp_path / "asy0.csv"
    assert main(["asymptotics", "--r-list", "0", "--omega-min", "100", "--omega-max", "100", "--out", str(out)]) == 0
    assert float(read_csv(out)[1][2]) == pytest.approx(1.0, abs=1e-12)


def test_hydrogen_modes(tmp_path):
    out = tmp_path / "h.csv"
    assert main(["hydrogen", "--xi", "1.3", "--rho-min", "100", "--rho-max", "100", "--with-prefactor", "--out", str(out)]) == 0
    assert float(read_csv(out)[1][3]) == pytest.approx(1.0, abs=0.01)
    lv = tmp_path / "lv.json"
    assert main(["hydrogen", "--piecewise", "--R", "0", "--L", "1", "--levels", "1", "--format", "json", "--out", str(lv)]) == 0
    row = json.loads(lv.read_text())["rows"][0]
    assert row["energy"] == pytest.approx(-1 / 16, rel=1e-4)
    assert row["xi"] == pytest.approx(4.0, rel=1e-4)


def test_verify_quick_writes_json(tmp_path, capsys):
    code = main(["verify", "--only", "1,8", "--outdir", str(tmp_path)])
    assert code == 0
    doc = json.loads((tmp_path / "verify.json").read_text())
    assert doc["passed"] and [c["id"] for c in doc["checks"]] == ["1", "8"]
    assert "2/2 checks passed" in capsys.readouterr().out


def test_verify_failure_exit_1(tmp_path):
    # the sandwich-bounds check is known to fail its head/tail thresholds
    assert main(["verify", "--only", "7", "--outdir", str(tmp_path)]) == 1
    doc = json.loads((tmp_path / "verify.json").read_text())
    assert doc["failed"] == ["7"]


def test_verify_compare_csv(tmp_path):
    assert main(["verify", "--only", "5", "--outdir", str(tmp_path)]) == 0
    rows = read_csv(tmp_path / "verify_compare.csv")
    assert rows[0] == ["l", "n", "method_a", "method_b", "abs_diff"]
    assert len(rows) == 16
    digest = hashlib.sha256((tmp_path / "verify_compare.csv").read_bytes()).hexdigest()
    assert main(["verify", "--only", "5", "--outdir", str(tmp_path)]) == 0
    assert hashlib.sha256((tmp_path / "verify_compare.csv").read_bytes()).hexdigest() == digest

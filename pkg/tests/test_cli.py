import subprocess
import sys

import numpy as np
import pytest

from classa.cli import main, run_examples
from classa.registry import REGISTRY

ZHAO = ["--matrix", "1.2545", "-2.9594", "1.5576", "2.3836", "--vector", "0.9724", "0.2333"]


def write_example(tmp_path, key):
    (rec,) = [r for r in REGISTRY if r.key == key]
    p = tmp_path / f"ex{key.replace('@', '_')}.txt"
    p.write_text(rec.source)
    return p


@pytest.fixture
def doc(tmp_path):
    def make(text, name="c.txt"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return make


def read_csv(path):
    return np.loadtxt(path, delimiter=",", skiprows=1, ndmin=2)


# -- generate


def test_generate_csv(tmp_path):
    src = write_example(tmp_path, "3")
    out = tmp_path / "ex3.csv"
    assert main(["generate", str(src), "--out", str(out)]) == 0
    raw = out.read_bytes()
    assert raw.startswith(b"t,x,y,kappa\n") and b"\r" not in raw
    data = read_csv(out)
    assert data.shape == (1001, 4)
    assert data[0, 0] == 0 and data[-1, 0] == 1
    assert np.all(np.diff(data[:, 3]) < 0)
    poly = (tmp_path / "ex3_polygon.csv").read_text().splitlines()
    assert poly[0] == "j,x,y" and len(poly) == 7
    # 17 significant digits round-trip exactly
    first = raw.splitlines()[2].split(b",")
    assert float(first[0]) == 0.001


def test_generate_stdout_and_svg(tmp_path, capsys):
    src = write_example(tmp_path, "1")
    assert main(["generate", str(src)]) == 0
    assert capsys.readouterr().out.startswith("t,x,y,kappa\n")
    assert main(["generate", str(src), "--format", "svg"]) == 0
    assert capsys.readouterr().out.lstrip().startswith("<svg")


def test_generate_errors(doc, capsys):
    assert main(["generate", doc("matrix = 1, 0, 0, 1\nseed = 1, 2\ndegree = 3\n")]) == 3
    assert "degenerate" in capsys.readouterr().err
    assert main(["generate", doc("matrix = 1, 0\nseed = 1, 2\ndegree = 3\n")]) == 2
    assert main(["generate", "/nonexistent/file.txt"]) == 2


def test_determinism(tmp_path):
    src = write_example(tmp_path, "13")
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["generate", str(src), "--out", str(a)])
    main(["generate", str(src), "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()
    sa, sb = tmp_path / "a.svg", tmp_path / "b.svg"
    main(["plot", str(src), "--out", str(sa)])
    main(["plot", str(src), "--out", str(sb)])
    assert sa.read_bytes() == sb.read_bytes()


# -- plot


def test_plot_svg(tmp_path):
    src = write_example(tmp_path, "1")
    out = tmp_path / "ex1.svg"
    assert main(["plot", str(src), "--out", str(out)]) == 0
    svg = out.read_text()
    assert 'width="800"' in svg and 'height="400"' in svg
    assert "<polyline" in svg and "<path" in svg
    assert "<script" not in svg and "font-face" not in svg


def test_plot_degenerate_line(doc, tmp_path):
    out = tmp_path / "line.svg"
    assert main(["plot", doc("matrix = 1, 0, 0, 1\nseed = 1, 2\ndegree = 3\n"), "--out", str(out)]) == 0
    assert "<svg" in out.read_text()


# -- certify


def test_certify_exit_codes(tmp_path, capsys):
    assert main(["certify", str(write_example(tmp_path, "3"))]) == 0
    out = capsys.readouterr().out
    assert "PositiveRealSeed  holds" in out
    assert main(["certify", str(write_example(tmp_path, "5"))]) == 1
    assert "oracle: monotone" in capsys.readouterr().out
    assert main(["certify", str(write_example(tmp_path, "1"))]) == 1
    assert "oracle: non-monotone" in capsys.readouterr().out


def test_certify_errors(doc, tmp_path):
    assert main(["certify", doc("matrix = 2, 0, 0, 2\nseed = 1, 0\ndegree = 3\n")]) == 3
    assert main(["certify", doc("degree = 3\n")]) == 2
    assert main(["certify", str(write_example(tmp_path, "3")), "--grid", "10"]) == 2


# -- examples


def test_examples_full_run(capsys):
    assert main(["examples"]) == 0
    out = capsys.readouterr().out
    assert "16/16 passed" in out and "FAIL" not in out


def test_examples_filter(capsys):
    assert main(["examples", "15"]) == 0
    rows = run_examples("15")
    assert [(r.degree, r.observed) for r in rows] == [(3, "monotone-decreasing"), (8, "non-monotone")]
    assert main(["examples", "99"]) == 2


# -- farin-audit


def test_farin_audit_cao(capsys):
    assert main(["farin-audit", "--sigma", "1.05", "1.102"]) == 0
    out = capsys.readouterr().out
    assert "corrected condition survives subdivision" in out
    assert "witness" not in out


def test_farin_audit_witness(capsys):
    assert main(["farin-audit", "--sigma", "1.5", "3"]) == 0
    out = capsys.readouterr().out
    assert "f'(0) = 3 sigma_min - sigma_max - 2: -0.5\n" in out
    assert "witness: f(" in out


def test_farin_audit_zhao(capsys):
    assert main(["farin-audit", *ZHAO]) == 0
    out = capsys.readouterr().out
    assert "expansion condition (min eig of symmetric part >= 1): no" in out
    ratio = float(out.split("ratio v.Mv / v.v: ")[1].split()[0])
    assert abs(ratio - 0.9979) < 5e-4
    assert "proposition (n=3)" in out


def test_farin_audit_document_and_errors(tmp_path, capsys):
    assert main(["farin-audit", str(write_example(tmp_path, "11"))]) == 0
    assert "proposition (n=7)" in capsys.readouterr().out
    assert main(["farin-audit", "--matrix", "1", "2", "3"]) == 2
    assert main(["farin-audit", "--matrix", "1", "0", "0", "1", "--vector", "1", "0", "0"]) == 2
    assert main(["farin-audit"]) == 2
    assert main(["farin-audit", "--sigma", "0", "1"]) == 2
    assert main(["farin-audit", "--matrix", *["1", "0", "0", "0", "2", "0", "0", "0", "3"]]) == 0


def test_module_entry_point(tmp_path):
    src = write_example(tmp_path, "8")
    r = subprocess.run([sys.executable, "-m", "classa", "certify", str(src)], capture_output=True, text=True)
    assert r.returncode == 0 and "Jordan" in r.stdout


def test_certify_alarm_path(tmp_path, monkeypatch, capsys):
    # force a contradiction to exercise the exit-4 wiring
    from classa import certifier

    monkeypatch.setattr(certifier, "contradictions", lambda certs, verdict, k0: [c for c in certs if c.holds])
    assert main(["certify", str(write_example(tmp_path, "3"))]) == 4
    assert "SOUNDNESS ALARM: PositiveRealSeed" in capsys.readouterr().err

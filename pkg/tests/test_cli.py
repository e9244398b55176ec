import io
import json
import math
import subprocess
import sys

import pytest

from slipflow import cli


def run(*argv):
    out = io.StringIO()
    code = cli.run(list(argv), stdout=out)
    return code, out.getvalue()


def test_fmt():
    assert cli.fmt(0.1) == "0.1"
    assert cli.fmt(1 / 3) == "0.333333333333"
    assert cli.fmt(True) == "1" and cli.fmt(7) == "7"
    assert cli.fmt(float("inf")) == "inf" and cli.fmt(float("nan")) == "nan"
    assert cli.fmt(-2.5e-300) == "-2.5e-300"


def test_parse_grid():
    assert list(cli.parse_grid("0:1:3")) == [0.0, 0.5, 1.0]
    g = cli.parse_grid("1e-2:1e2:5:log")
    assert g[0] == pytest.approx(1e-2) and g[2] == pytest.approx(1.0)
    for bad in ("1:2", "0:1:0", "0:1:3:cubic", "a:b:c", "0:1:2:log"):
        with pytest.raises(cli.UsageError):
            cli.parse_grid(bad)


def test_compute_disk_csv():
    code, text = run("compute", "--shape", "disk", "--radius", "1", "--beta", "0")
    assert code == 0
    rows = dict(line.split(",") for line in text.splitlines() if not line.startswith("#") and "," in line)
    assert float(rows["q_steady"]) == pytest.approx(math.pi / 8, rel=1e-12)
    assert float(rows["area"]) == pytest.approx(math.pi, rel=1e-14)


def test_compute_json_and_shapes():
    for args in (["--shape", "rect", "--a", "1", "--b", "0.5"], ["--shape", "tri", "--area", "2"],
                 ["--shape", "ellipse", "--axis", "1.1"], ["--shape", "ngon", "--n", "5", "--area", "1"],
                 ["--shape", "fourier", "--a0", "0", "--an", "0,0.05", "--bn", "0,0", "--functionals", "geometry"]):
        code, text = run("compute", *args, "--beta", "0.2", "--format", "json")
        assert code == 0, args
        data = json.loads(text)
        assert data["columns"] == ["quantity", "value"]


def test_transient_and_periodic():
    code, text = run("transient", "--shape", "disk", "--radius", "1", "--t-grid", "0:2:5")
    assert code == 0
    last = text.strip().splitlines()[-1].split(",")
    assert 0.9 < float(last[2]) < 1.0
    code, text = run("periodic", "--shape", "disk", "--radius", "1", "--omega-grid", "0.1:10:3:log",
                     "--format", "json")
    assert code == 0 and len(json.loads(text)["rows"]) == 3
    assert run("periodic", "--shape", "rect", "--a", "1", "--b", "1")[0] == 2


def test_sweep_custom_and_svg():
    code, text = run("sweep", "--shape", "rect", "--a", "1", "--b", "1", "--beta-grid", "0.01:10:4:log")
    assert code == 0
    for line in text.splitlines()[2:]:
        f = [float(v) for v in line.split(",")]
        assert f[3] < 1.0 < f[4]
    code, svg = run("sweep", "--figure", "tri-q-ratio", "--format", "svg")
    assert code == 0 and svg.startswith("<svg") and svg.rstrip().endswith("</svg>") and "polyline" in svg


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["compute"], ["compute", "--shape", "disk", "--radius", "-1"],
    ["compute", "--shape", "disk", "--radius", "nan"], ["sweep", "--figure", "nope"], ["table", "--table", "nope"],
    ["verify", "--suite", "nope"], ["transient", "--shape", "tri", "--a", "1", "--t-grid", "0:1:3"],
    ["transient", "--shape", "disk", "--radius", "1", "--t-grid", "0:1:3", "--modes", "0"],
    ["sweep"], ["compute", "--shape", "fourier", "--an", "0.05"],
    ["transient", "--shape", "disk", "--radius", "1", "--t-grid", "0:1:3", "--modes", "3"],
])
def test_usage_errors_exit_2(argv):
    assert run(*argv)[0] == 2


def test_out_file(tmp_path):
    path = tmp_path / "t.csv"
    code, text = run("table", "--table", "rn-table", "--out", str(path))
    assert code == 0 and text == ""
    assert path.read_text().startswith("#")
    assert run("table", "--table", "rn-table", "--out", str(tmp_path / "no" / "x.csv"))[0] == 2


def test_verify_small_suite():
    code, text = run("verify", "--suite", "classical", "--format", "json")
    assert code == 0 and json.loads(text)["pass"] is True
    code, text = run("verify", "--suite", "deficit", "--format", "csv")
    assert code == 0 and text.startswith("id,point,margin")


def test_failed_verify_exits_1(monkeypatch):
    from slipflow import verify
    bad = verify.VerifyReport("bad", {}, ["x"], [-1.0], [False])
    monkeypatch.setitem(verify.SUITES, "bad", lambda: [bad])
    assert run("verify", "--suite", "bad")[0] == 1


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "slipflow", "table", "--table", "polygon-deficits"],
                       capture_output=True, text=True, timeout=60)
    assert p.returncode == 0 and "0.653986686" in p.stdout

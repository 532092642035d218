import io
import json
import subprocess
import sys

import pytest

from cotangent import cli
from cotangent.series import IntegrityError


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out=out)
    return code, out.getvalue()


def test_series_cone_json():
    code, out = run("series", "cone", "--d", "4", "--order", "4", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["kind"] == "uni"
    assert obj["terms"] == [{"c": 4, "deg": 1}, {"c": 3, "deg": 2}, {"c": 3, "deg": 3}, {"c": 9, "deg": 4}]


def test_json_is_byte_stable():
    a = run("series", "cone-multigraded", "--d", "5", "--order", "3", "--json")[1]
    b = run("series", "cone-multigraded", "--d", "5", "--order", "3", "--json")[1]
    assert a == b and list(json.loads(a)) == sorted(json.loads(a))


def test_series_table():
    code, out = run("series", "fatpoint-module", "--m", "3", "--order", "3")
    assert code == 0
    lines = out.split("\n")
    assert lines[0].split() == ["n", "dim"]
    assert [line.split() for line in lines[1:5]] == [["0", "9"], ["1", "15"], ["2", "18"], ["3", "46"]]


def test_dim_t_cone_multigraded():
    assert run("dim", "t", "--target", "cone-multigraded", "--d", "5", "--R", "5,2") == (0, "2\n")
    assert run("dim", "t", "--target", "cone-multigraded", "--d", "5", "--R", "5,2", "--oracle") == (0, "2\n")
    assert run("dim", "t", "--target", "cone-multigraded", "--d", "5", "--R", "5,2", "--n", "3") == (0, "0\n")


@pytest.mark.parametrize(
    "argv, value",
    [
        (("dim", "t1", "--d", "5", "--R", "2,1"), 2),
        (("dim", "t2", "--d", "5", "--R", "5,2"), 2),
        (("dim", "t0", "--d", "5", "--R", "0,0"), 2),
        (("dim", "c", "--m", "3", "--n", "5"), 48),
        (("dim", "c", "--m", "3", "--n", "5", "--oracle"), 48),
        (("dim", "c", "--d", "4", "--R", "3,2", "--oracle"), 1),
        (("dim", "harr", "--m", "3", "--n", "4"), 46),
        (("dim", "harr", "--m", "3", "--n", "4", "--oracle"), 46),
        (("dim", "t", "--target", "cone", "--d", "4", "--n", "4"), 9),
        (("dim", "t", "--target", "fatpoint-module", "--m", "2", "--n", "2", "--oracle"), 1),
        (("dim", "t", "--target", "quotient", "--d", "4", "--tau", "9", "--n", "1"), 9),
    ],
)
def test_dim_values(argv, value):
    assert run(*argv) == (0, f"{value}\n")


def test_partition_requires_tau(capsys):
    assert run("series", "partition", "--d", "4")[0] == 2
    assert "--tau is required" in capsys.readouterr().err


def test_partition_series():
    code, out = run("series", "partition", "--d", "4", "--tau", "7", "--order", "3", "--json")
    assert code == 0
    assert [t["c"] for t in json.loads(out)["terms"]] == [7, 6, 12]


@pytest.mark.parametrize(
    "argv",
    [
        ("series", "cone", "--d", "2"),
        ("series", "cone", "--order", "-1"),
        ("series", "fatpoint", "--m", "1"),
        ("series", "nonsense"),
        ("dim", "t", "--R", "9,1", "--d", "4"),
        ("dim", "t", "--R", "x"),
        ("dim", "c", "--m", "3"),
        ("series", "quotient", "--d", "4", "--tau", "-3"),
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert run(*argv)[0] == 2
    capsys.readouterr()


def test_integrity_failure_exits_3(monkeypatch, capsys):
    def broken(d, order):
        raise IntegrityError("remainder", degree=(3, 2))

    monkeypatch.setattr(cli.F, "p_cone", broken)
    assert run("series", "cone")[0] == 3
    assert "(3, 2)" in capsys.readouterr().err


def test_verify_passes():
    code, out = run("verify", "--d", "3", "--max-height", "4")
    assert code == 0
    lines = out.strip().split("\n")
    assert sum(line.startswith("PASS R=") for line in lines) == 4 + 7 + 10 + 13
    assert lines[-1] == "all checks passed"


def test_verify_reports_mismatch(monkeypatch):
    import cotangent.verify as V

    real = V.p_tilde_cone
    monkeypatch.setattr(V, "p_tilde_cone", lambda ctx, cut: real(ctx, cut) * 2)
    code, out = run("verify", "--d", "4", "--max-height", "3")
    assert code == 1
    assert "FAIL" in out and out.strip().endswith("MISMATCH")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cotangent", "dim", "t", "--target", "cone-multigraded", "--d", "5", "--R", "5,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "2\n"

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from dellac import __version__
from dellac.cli import run

T1 = "T n=7 cols=1,2,3,2,4,3,5,7,6,4,1,7,5,6"
F1 = "P n=7 f=2,6,4,8,12,6,8,10,14,12,12,14,14,14"
FX = "T n=7 cols=1,2,2,3,5,4,4,5,7,3,1,7,6,6"


def out(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


def test_phi_and_Phi(capsys):
    assert out(capsys, "map", "phi", "--tableau", T1) == (0, F1 + "\n")
    assert out(capsys, "map", "Phi", "--pistol", F1) == (0, T1 + "\n")


def test_Phi_trace(capsys):
    code, text = out(capsys, "map", "Phi", "--pistol", F1, "--trace")
    assert code == 0 and "I.2-b)ii." in text


def test_phi_inverse_json(capsys):
    code, text = out(capsys, "map", "phi-inverse", "--pistol", "P n=2 f=2,2,4,4", "--format", "json")
    assert code == 0
    assert json.loads(text)


def test_counts(capsys):
    assert out(capsys, "count", "--object", "spdc", "--n", "3") == (0, "98\n")
    assert out(capsys, "count", "--object", "tableau", "--n", "4", "--jobs", "2") == (0, "180\n")


def test_enumerate_json(capsys):
    code, text = out(capsys, "enumerate", "--object", "pistol", "--n", "2", "--format", "json")
    assert code == 0
    assert [o["f"] for o in json.loads(text)] == [[2, 2, 4, 4], [2, 4, 4, 4], [4, 2, 4, 4]]


def test_sequence(capsys):
    code, text = out(capsys, "sequence", "--name", "r", "--terms", "5")
    assert code == 0
    assert [int(line.split()[1]) for line in text.splitlines()] == [1, 2, 10, 98, 1594]


def test_sequence_bfile_mismatch(capsys, tmp_path):
    b = tmp_path / "b.txt"
    b.write_text("0 1\n1 2\n2 11\n", encoding="utf-8")
    code, _ = out(capsys, "sequence", "--terms", "3", "--bfile", str(b))
    assert code == 1


def test_labels_and_stats(capsys):
    code, text = out(capsys, "labels", T1)
    assert code == 0 and "β0e" in text
    code, text = out(capsys, "stats", T1, "--format", "json")
    assert code == 0 and json.loads(text)


def test_tpath(capsys):
    code, text = out(capsys, "tpath", "--tableau", "J n=7 j=4 cols=1,1,3,.,.,3,.,.,.,.,2,.,.,2", "--j", "4", "--i", "8")
    assert code == 0 and "8" in text and "6" in text


def test_switch_and_mute(capsys):
    code, text = out(capsys, "switch", "--tableau", FX, "--mu", "1,1")
    assert (code, text.strip()) == (0, "T n=7 cols=1,2,1,3,5,4,4,5,7,3,2,6,7,6")
    code, text = out(capsys, "mute", "--tableau", FX, "--j0", "3", "--gamma", "alpha")
    assert (code, text.strip()) == (0, "T n=7 cols=1,2,1,3,5,4,4,7,6,3,2,6,5,7")


def test_render_svg(capsys):
    code, text = out(capsys, "render", T1, "--format", "svg")
    assert code == 0 and text.startswith("<svg")


def test_verify_json_is_deterministic(capsys):
    _, first = out(capsys, "verify", "--check", "all", "--n", "3", "--format", "json")
    _, second = out(capsys, "verify", "--check", "all", "--n", "3", "--format", "json")
    assert first == second
    data = json.loads(first)
    assert data["version"] == __version__
    assert all(r["pass"] and r["elapsed_ms"] == 0 for r in data["reports"])


def test_verify_timing(capsys):
    code, text = out(capsys, "verify", "--check", "eq1", "--n", "2", "--timing", "--format", "json")
    assert code == 0 and json.loads(text)["reports"][0]["elapsed_ms"] >= 0


@pytest.mark.parametrize(
    "argv",
    [
        ["map", "phi", "--tableau", "T n=2 cols=2,1,1,2"],
        ["switch", "--tableau", FX, "--mu", "1"],
        ["mute", "--tableau", FX, "--j0", "1", "--gamma", "beta"],
    ],
)
def test_domain_errors_exit_2(capsys, argv):
    assert run(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_errors_exit_2():
    with pytest.raises(SystemExit) as info:
        run(["count", "--object", "spdc", "--n", "0"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        run(["count", "--object", "spdc", "--n", "2", "--format", "svg"])
    assert info.value.code == 2


def test_module_entry_point_reads_stdin():
    proc = subprocess.run(
        [sys.executable, "-m", "dellac", "map", "phi"],
        input=T1 + "\n",
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == F1

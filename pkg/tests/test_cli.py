import json
import subprocess
import sys

import pytest

from pathgraphs.cli import main
from pathgraphs.selftest import FIGURE1_EDGES, G2_EDGES


def _write(path, pairs):
    path.write_text("\n".join(" ".join(p.split("-")) if "-" in p else f"{p[0]} {p[1]}" for p in pairs.split()) + "\n")
    return str(path)


@pytest.fixture
def files(tmp_path):
    return {
        "fig1": _write(tmp_path / "fig1.txt", FIGURE1_EDGES),
        "g2": _write(tmp_path / "g2.txt", G2_EDGES),
        "c4": _write(tmp_path / "c4.txt", "ab bc cd da"),
    }


def test_recognize_exit_codes(files, capsys):
    assert main(["recognize", files["fig1"]]) == 0
    assert "clique path tree" in capsys.readouterr().out
    assert main(["recognize", files["g2"]]) == 1
    assert "full antipodal triple" in capsys.readouterr().out
    assert main(["recognize", files["c4"]]) == 2


def test_certificate_round_trip(files, tmp_path, capsys):
    main(["recognize", files["g2"], "--certificate"])
    out = capsys.readouterr().out
    cert = tmp_path / "cert.json"
    cert.write_text(out.split("--- machine ---\n", 1)[1])
    assert json.loads(cert.read_text())["verdict"] == "not_path_graph"
    assert main(["verify", files["g2"], str(cert)]) == 0
    assert "verified" in capsys.readouterr().out


def test_dot_dir(files, tmp_path):
    out = tmp_path / "dots"
    assert main(["recognize", files["fig1"], "--dot-dir", str(out)]) == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == ["clique_path_tree.dot", "separator_0.dot", "separator_1.dot"]


def test_oracle_and_attachedness(files, capsys):
    assert main(["oracle", files["g2"]]) == 1
    assert "16 trees" in capsys.readouterr().out
    assert main(["attachedness", files["fig1"], "--separator", "0", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["separator"] == ["b", "c", "e"] and len(data["antipodal"]) == 3
    assert main(["attachedness", files["fig1"], "--separator", "9"]) == 3


def test_gen_is_deterministic(capsys):
    main(["gen", "--n", "10", "--seed", "7"])
    a = capsys.readouterr().out
    main(["gen", "--n", "10", "--seed", "7"])
    assert capsys.readouterr().out == a and a
    assert main(["gen", "--n", "1", "--seed", "3"]) == 0


def test_usage_errors(tmp_path, capsys):
    assert main(["recognize", str(tmp_path / "missing.txt")]) == 3
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 3


def test_env_cap(files, monkeypatch):
    monkeypatch.setenv("PATHGRAPHS_MAX_CLIQUES", "2")
    assert main(["oracle", files["fig1"]]) == 4


def test_selftest_small(capsys):
    assert main(["selftest", "--only", "1", "2", "8"]) == 0
    assert capsys.readouterr().out.count("[PASS]") == 3


def test_selftest_zero_caps(capsys):
    assert main(["selftest", "--max-n", "0", "--samples", "0", "--only", "3"]) == 0


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "pathgraphs", "recognize", files["c4"]], capture_output=True, text=True)
    assert proc.returncode == 2 and "not_chordal" in proc.stdout

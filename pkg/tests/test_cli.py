import json
import pathlib
import subprocess
import sys

import pytest

from doublechar import cli
from doublechar.errors import OracleError

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

FK3_LINES = [
    "ch P(σ,−) = 2 ch M(σ,−) + ch M(e,+) + ch M(τ,0) + ch M(e,ρ)",
    "ch P(e,+) = 2 ch M(e,+) + 2 ch M(σ,−)",
    "ch P(e,ρ) = ch M(τ,0) + ch M(e,ρ) + ch M(σ,−)",
]


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture(scope="module")
def taft_files(tmp_path_factory):
    out = tmp_path_factory.mktemp("taft3")
    code = cli.main(["taft", "3", "--out", str(out)])
    assert code == 0
    return out


def test_weights_s3(capsys):
    code, out, _ = run(
        capsys,
        "weights",
        "--group", DATA / "s3_group.json",
        "--aliases", DATA / "fk3_aliases.json",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 9
    assert lines[-1] == "8 weights; sum of squared dimensions = 36"
    assert lines[4].startswith("g1r1  σ,−  class_size=3")


def test_weights_trivial_group(capsys, tmp_path):
    path = tmp_path / "trivial.json"
    path.write_text(json.dumps({"format": 1, "degree": 1, "generators": []}))
    code, out, _ = run(capsys, "weights", "--group", path)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    assert lines[0].startswith("g0r0")


def test_fusion_example(capsys):
    code, out, _ = run(
        capsys, "fusion", "--group", DATA / "c3_group.json", "g1r2", "g2r2"
    )
    assert code == 0
    assert out.strip() == "g1r2 (x) g2r2 = g0r1"


def test_bgg_fk3_lines(capsys, tmp_path):
    code, out, _ = run(
        capsys,
        "bgg",
        "--group", DATA / "s3_group.json",
        "--profile", DATA / "fk3_ml.json",
        "--aliases", DATA / "fk3_aliases.json",
        "--out", tmp_path,
    )
    assert code == 0
    for line in FK3_LINES:
        assert line in out
    text = (tmp_path / "report.txt").read_text(encoding="utf-8")
    for line in FK3_LINES:
        assert line in text


def test_bgg_is_byte_deterministic(capsys, tmp_path):
    outs = []
    for sub in ("a", "b"):
        code, _, _ = run(
            capsys,
            "bgg",
            "--group", DATA / "s3_group.json",
            "--profile", DATA / "fk3_ml.json",
            "--out", tmp_path / sub,
        )
        assert code == 0
        outs.append(
            (
                (tmp_path / sub / "report.json").read_bytes(),
                (tmp_path / sub / "report.txt").read_bytes(),
            )
        )
    assert outs[0] == outs[1]


def test_taft_summary_lines(capsys):
    code, out, _ = run(capsys, "taft", "2")
    assert code == 0
    assert out.strip() == "all 4 weights verified; 2 simple projective Vermas"
    code, out, _ = run(capsys, "taft", "3")
    assert out.strip() == "all 9 weights verified; 3 simple projective Vermas"


def test_bgg_on_taft_files(capsys, taft_files):
    code, out, _ = run(
        capsys,
        "bgg",
        "--group", taft_files / "group.json",
        "--profile", taft_files / "profile.json",
        "--simples", taft_files / "simples.json",
        "--aliases", taft_files / "aliases.json",
    )
    assert code == 0
    assert "ch P(2,1) = ch M(2,1) + t^2 ch M(0,2)" in out
    assert "simple projective Vermas (3): 0,1, 1,0, 2,2" in out


def test_bgg_ungraded_flag(capsys, taft_files):
    code, out, _ = run(
        capsys,
        "bgg",
        "--group", taft_files / "group.json",
        "--profile", taft_files / "profile.json",
        "--simples", taft_files / "simples.json",
        "--aliases", taft_files / "aliases.json",
        "--ungraded",
    )
    assert code == 0
    # every coefficient collapses to a constant, so the graded shift disappears
    assert "ch P(2,1) = ch M(0,2) + ch M(2,1)" in out
    assert "t^" not in out


def test_ind_line(capsys, taft_files):
    code, out, _ = run(
        capsys,
        "ind",
        "--group", taft_files / "group.json",
        "--profile", taft_files / "profile.json",
        "--simples", taft_files / "simples.json",
        "--aliases", taft_files / "aliases.json",
        "g0r0",
    )
    assert code == 0
    assert "ch Ind(0,0) = ch P(0,0) + t ch P(2,2)" in out
    assert "dimension check: 9 = 9" in out


def test_tensor_line(capsys, taft_files):
    code, out, _ = run(
        capsys,
        "tensor",
        "--group", taft_files / "group.json",
        "--profile", taft_files / "profile.json",
        "--simples", taft_files / "simples.json",
        "--aliases", taft_files / "aliases.json",
        "2,2", "2,2",
    )
    assert code == 0
    assert "P(2,2) (x) P(2,2) = t^-2 Ind(0,0)" in out
    assert "dimension check: 9 = 9" in out


def test_verify_taft_files(capsys, taft_files):
    code, out, _ = run(
        capsys,
        "verify",
        "--group", taft_files / "group.json",
        "--profile", taft_files / "profile.json",
        "--simples", taft_files / "simples.json",
    )
    assert code == 0
    assert out.count("ok:") == 6


def test_verify_ml_fixture(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--group", DATA / "s3_group.json",
        "--profile", DATA / "fk3_ml.json",
    )
    assert code == 0
    assert out.count("ok:") == 3


def test_input_error_exits(capsys, tmp_path):
    code, _, err = run(capsys, "weights", "--group", tmp_path / "absent.json")
    assert code == 2 and "input error" in err
    code, _, err = run(
        capsys, "fusion", "--group", DATA / "c3_group.json", "g9r9", "g0r0"
    )
    assert code == 2 and "unknown weight" in err
    code, _, err = run(capsys, "taft", "13")
    assert code == 2
    code, _, err = run(
        capsys,
        "bgg",
        "--group", DATA / "s3_group.json",
        "--profile", DATA / "s3_group.json",
    )
    assert code == 2


def test_inconsistent_matrix_exits_3(capsys, tmp_path):
    obj = json.loads((DATA / "fk3_ml.json").read_text())
    rows = {r["w"]: r for r in obj["rows"]}
    for w in rows:
        rows[w]["factors"] = [{"w": w, "m": 1}]
    rows["g0r0"]["factors"] = [{"w": "g0r0", "m": 5}]
    path = tmp_path / "bad_ml.json"
    path.write_text(json.dumps(obj))
    code, _, err = run(
        capsys, "bgg", "--group", DATA / "s3_group.json", "--profile", path
    )
    assert code == 3
    assert "inconsistency" in err


def test_span_failure_dumps_residual(capsys, tmp_path, taft_files):
    obj = json.loads((taft_files / "simples.json").read_text())
    for entry in obj["simples"]:
        if entry["w"] == "g0r2":
            entry["char"] = {
                "char": [
                    {"deg": 0, "weights": [{"w": "g0r2", "m": 1}]},
                    {"deg": -2, "weights": [{"w": "g1r0", "m": 1}]},
                ]
            }
    path = tmp_path / "warped.json"
    path.write_text(json.dumps(obj))
    code, _, err = run(
        capsys,
        "bgg",
        "--group", taft_files / "group.json",
        "--profile", taft_files / "profile.json",
        "--simples", path,
    )
    assert code == 3
    assert "residual character" in err


def test_oracle_failure_exits_4(capsys, monkeypatch):
    def boom(params, r, s):
        raise OracleError("forced failure")

    monkeypatch.setattr(cli, "explicit_matrices", boom)
    code, _, err = run(capsys, "taft", "3")
    assert code == 4
    assert "oracle verification failed" in err


def test_cache_dir_env_and_flag(capsys, tmp_path, monkeypatch):
    env_dir = tmp_path / "env_cache"
    flag_dir = tmp_path / "flag_cache"
    env_dir.mkdir()
    flag_dir.mkdir()
    monkeypatch.setenv("DOUBLECHAR_CACHE_DIR", str(env_dir))
    code, _, _ = run(capsys, "weights", "--group", DATA / "s3_group.json")
    assert code == 0
    assert list(env_dir.glob("chartable-*.json"))
    code, _, _ = run(
        capsys,
        "weights",
        "--group", DATA / "c3_group.json",
        "--cache-dir", flag_dir,
    )
    assert code == 0
    # the flag wins over the environment
    assert list(flag_dir.glob("chartable-*.json"))


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "doublechar.cli", "taft", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "all 4 weights verified" in proc.stdout

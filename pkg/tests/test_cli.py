"""Command line behavior: exit codes, output formats, error reporting."""

import json

import pytest

from semlat import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_writes_file_and_reports(tmp_path, capsys):
    out = tmp_path / "cat5.slx"
    code, stdout, _ = run(capsys, "gen", "--n", "5", "--out", str(out))
    assert code == 0
    assert stdout.strip() == "n=5 count=5"
    lines = out.read_text().splitlines()
    assert lines[0] == "SLX1 n=5 count=5"
    assert len(lines) == 6


def test_gen_usage_errors(tmp_path, capsys, monkeypatch):
    monkeypatch.delenv("SEMLAT_MAX_N", raising=False)
    code, _, err = run(capsys, "gen", "--n", "1", "--out", str(tmp_path / "x"))
    assert code == 1 and err
    code, _, err = run(capsys, "gen", "--n", "11", "--out", str(tmp_path / "x"))
    assert code == 1
    assert "SEMLAT_MAX_N" in err


def test_gen_io_error(capsys):
    code, _, err = run(capsys, "gen", "--n", "4", "--out", "/nonexistent/dir/x.slx")
    assert code == 3
    assert "i/o error" in err


def test_usage_exit_codes(capsys):
    assert run(capsys, )[0] == 1
    assert run(capsys, "bogus")[0] == 1
    assert run(capsys, "verify", "--claim", "t9", "--n", "4")[0] == 1
    assert run(capsys, "verify", "--claim", "t1", "--n", "8..4")[0] == 1
    assert run(capsys, "--help")[0] == 0


def test_profile_json(tmp_path, capsys):
    path = tmp_path / "cat4.slx"
    run(capsys, "gen", "--n", "4", "--out", str(path))
    code, stdout, _ = run(capsys, "profile", "--catalog", str(path))
    assert code == 0
    records = [json.loads(line) for line in stdout.splitlines()]
    assert len(records) == 2
    for rec in records:
        assert set(rec) == {
            "canonicalKey", "n", "inconsistentCount", "cov1Vector",
            "sigmaCov1", "sigma", "histogramSummary", "coatomCount",
            "atomCount",
        }
        assert set(rec["inconsistentCount"]) == {"1", "2"}
        assert set(rec["histogramSummary"]) == {
            "emptyBucketSize", "maxBucketSize", "numRealizedSolutionSets",
        }
        assert len(rec["cov1Vector"]) == 4
    assert {r["sigmaCov1"] for r in records} == {36}


def test_profile_csv_and_text(tmp_path, capsys):
    path = tmp_path / "cat4.slx"
    run(capsys, "gen", "--n", "4", "--out", str(path))
    code, stdout, _ = run(
        capsys, "profile", "--catalog", str(path), "--format", "csv"
    )
    assert code == 0
    lines = stdout.splitlines()
    assert len(lines) == 3
    assert lines[0].startswith("canonicalKey,n,inconsistentCount_m1")
    code, stdout, _ = run(
        capsys, "profile", "--catalog", str(path), "--format", "text"
    )
    assert code == 0
    assert len(stdout.splitlines()) == 2


def test_profile_out_file(tmp_path, capsys):
    path = tmp_path / "cat4.slx"
    run(capsys, "gen", "--n", "4", "--out", str(path))
    dest = tmp_path / "stats.jsonl"
    code, stdout, _ = run(
        capsys, "profile", "--catalog", str(path), "--out", str(dest)
    )
    assert code == 0 and stdout == ""
    assert len(dest.read_text().splitlines()) == 2


def test_profile_io_errors(tmp_path, capsys):
    code, _, err = run(capsys, "profile", "--catalog", str(tmp_path / "no.slx"))
    assert code == 3
    bad = tmp_path / "bad.slx"
    bad.write_text("SLX1 n=4 count=1\n00\n")
    code, _, err = run(capsys, "profile", "--catalog", str(bad))
    assert code == 3
    assert "line 2" in err


def test_verify_ok_and_skip(capsys):
    code, stdout, _ = run(capsys, "verify", "--claim", "t1", "--n", "4..5")
    assert code == 0
    assert "claim t1: Verified" in stdout
    code, stdout, _ = run(capsys, "verify", "--claim", "t4", "--n", "5")
    assert code == 0
    assert "claim t4: Skipped" in stdout


def test_verify_all(capsys):
    code, stdout, _ = run(capsys, "verify", "--claim", "all", "--n", "4..5", "--m", "1")
    assert code == 0
    for name in ("t1", "t2", "t4", "conjecture", "bounds"):
        assert f"claim {name}:" in stdout


def test_verify_counterexample_exit(capsys, monkeypatch):
    # a sabotaged engine must surface as exit code 2: pretend every
    # single-coatom structure has a huge solution total
    from semlat import equations

    def wrong_total(latt):
        return 1000 if latt.coatoms().bit_count() == 1 else 10

    monkeypatch.setattr(equations, "total_solutions", wrong_total)
    code, stdout, _ = run(capsys, "verify", "--claim", "conjecture", "--n", "4")
    assert code == 2
    assert "CounterexampleFound" in stdout


def test_show_builtin(capsys):
    code, stdout, _ = run(capsys, "show", "--builtin", "fan5")
    assert code == 0
    assert "n=5 bottom=0 top=4" in stdout
    assert "atoms: 1 2 3" in stdout
    code, stdout, _ = run(capsys, "show", "--builtin", "spire5")
    assert code == 0
    assert "coatoms: 3" in stdout


def test_show_key(capsys):
    code, stdout, _ = run(capsys, "show", "--key", "0001")
    assert code == 0
    assert "n=2" in stdout


def test_show_errors(capsys):
    assert run(capsys, "show", "--builtin", "cube3")[0] == 1
    assert run(capsys, "show", "--builtin", "spire7")[0] == 1
    assert run(capsys, "show", "--builtin", "chain1")[0] == 1
    assert run(capsys, "show", "--key", "0100")[0] == 1
    assert run(capsys, "show", "--key", "000")[0] == 1
    assert run(capsys, "show")[0] == 1


def test_landmarks_report(capsys):
    code, stdout, _ = run(capsys, "landmarks")
    assert code == 0
    assert "65 > 63" in stdout
    assert "chain5" in stdout and "spire5" in stdout


def test_landmarks_detect_engine_regression(capsys, monkeypatch):
    from semlat import equations

    real = equations.first_kind_pairs

    def perturbed(latt, elem):
        pairs = set(real(latt, elem))
        if elem == latt.top:
            pairs.add((0, latt.top))
        return frozenset(pairs)

    monkeypatch.setattr(equations, "first_kind_pairs", perturbed)
    code, stdout, _ = run(capsys, "landmarks")
    assert code == 2
    assert "MISMATCH" in stdout

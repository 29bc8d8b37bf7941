import os
import pathlib
import subprocess
import sys

from rainbowtrees import (
    monochromatic_complete,
    parse_coloring,
    read_coloring,
    read_partition,
    is_partition_valid,
    solve,
    validate,
    write_coloring,
)
from rainbowtrees.cli import main


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def payload(out):
    """Drop the `#` config/comment lines from CLI stdout."""
    return "\n".join(l for l in out.splitlines() if not l.startswith("#")) + "\n"


def test_formula_command(capsys):
    code, out, _ = run_cli(capsys, "formula", 6, 5)
    assert code == 0
    assert "t=3 value=2" in out


def test_formula_r1(capsys):
    code, out, _ = run_cli(capsys, "formula", 7, 1)
    assert code == 0
    assert "t=0 value=4" in out


def test_formula_bad_input(capsys):
    code, _, err = run_cli(capsys, "formula", 3, 9)
    assert code == 1
    assert "error" in err


def test_canonical_solve_round_trip(tmp_path, capsys):
    cfile = tmp_path / "c.txt"
    code, out, _ = run_cli(capsys, "canonical", 4, 3, "-o", cfile)
    assert code == 0
    code, out, _ = run_cli(capsys, "solve", cfile)
    assert code == 0
    assert "count=1" in out
    # the file round trip matches the in-memory pipeline
    from rainbowtrees import generate_canonical

    c, _ = generate_canonical(4, 3)
    assert read_coloring(cfile) == c
    assert solve(c).count == 1


def test_canonical_stdout_is_a_valid_coloring_file(capsys):
    code, out, _ = run_cli(capsys, "canonical", 5, 4)
    assert code == 0
    c = parse_coloring(out)  # config lines are comments in the format
    assert validate(c) == []
    assert c.n == 5 and c.r == 4


def test_canonical_partition_output(tmp_path, capsys):
    cfile = tmp_path / "c.txt"
    pfile = tmp_path / "p.txt"
    code, _, _ = run_cli(capsys, "canonical", 8, 5, "-o", cfile, "--partition", pfile)
    assert code == 0
    c = read_coloring(cfile)
    p = read_partition(pfile, c)
    ok, why = is_partition_valid(c, p)
    assert ok, why
    assert p.count == 3


def test_solve_writes_partition(tmp_path, capsys):
    cfile = tmp_path / "c.txt"
    write_coloring(monochromatic_complete(5), cfile)
    pfile = tmp_path / "p.txt"
    code, out, _ = run_cli(capsys, "solve", cfile, "--partition", pfile)
    assert code == 0
    assert "count=3" in out
    p = read_partition(pfile, monochromatic_complete(5))
    ok, why = is_partition_valid(monochromatic_complete(5), p)
    assert ok, why


def test_construct_command(tmp_path, capsys):
    cfile = tmp_path / "c.txt"
    run_cli(capsys, "canonical", 6, 5, "-o", cfile)
    pfile = tmp_path / "p.txt"
    code, out, _ = run_cli(capsys, "construct", cfile, "--partition", pfile)
    assert code == 0
    assert "count=2 bound=2" in out


def test_merge_command(tmp_path, capsys):
    cfile = tmp_path / "c.txt"
    run_cli(capsys, "canonical", 5, 4, "-o", cfile)
    ofile = tmp_path / "m.txt"
    code, _, _ = run_cli(capsys, "merge", cfile, 4, 1, "-o", ofile)
    assert code == 0
    merged = read_coloring(ofile)
    assert merged.r == 3
    assert validate(merged) == []


def test_solve_guard_exit_code(tmp_path, capsys):
    cfile = tmp_path / "c.txt"
    write_coloring(monochromatic_complete(6), cfile)
    code, _, err = run_cli(capsys, "solve", cfile, "--max-n", 5)
    assert code == 3
    assert "guard" in err


def test_malformed_file_reports_line_number(tmp_path, capsys):
    cfile = tmp_path / "bad.txt"
    cfile.write_text("3 2\n0 1 1\n5 9 1\n")
    code, _, err = run_cli(capsys, "solve", cfile)
    assert code == 1
    assert "line 3" in err


def test_invalid_coloring_rejected(tmp_path, capsys):
    cfile = tmp_path / "bad.txt"
    cfile.write_text("3 2\n0 1 1\n0 2 1\n1 2 1\n")  # color 2 never used
    code, _, err = run_cli(capsys, "solve", cfile)
    assert code == 1
    assert "MissingColor" in err


def test_usage_error_exit_code(capsys):
    assert run_cli(capsys, "no-such-command")[0] == 1
    assert run_cli(capsys, "formula", "x", "y")[0] == 1


def test_verify_command_writes_report(tmp_path, capsys):
    rfile = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "cutedge", "--max-n", 4, "--report", rfile, "--format", "json"
    )
    assert code == 0
    assert "result PASS" in out
    from rainbowtrees import VerificationReport

    report = VerificationReport.from_json(rfile.read_text())
    assert report.passed and report.campaign == "cutedge"


def test_verify_seeded_json_is_byte_identical(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for path in (a, b):
        code, _, _ = run_cli(
            capsys, "verify", "monotonicity", "--samples", 20, "--seed", 5,
            "--report", path, "--format", "json",
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_guard_exit(capsys):
    code, _, err = run_cli(capsys, "verify", "cutedge", "--max-n", 9)
    assert code == 3


def test_campaign_failure_exit_code(capsys, monkeypatch):
    import rainbowtrees.cli as cli_mod
    from rainbowtrees import VerificationReport

    failing = VerificationReport("monotonicity", {}, 1, failures=[{"kind": "demo"}])
    monkeypatch.setattr(cli_mod, "campaign_monotonicity", lambda **kw: failing)
    code, out, _ = run_cli(capsys, "verify", "monotonicity")
    assert code == 2
    assert "result FAIL" in out


def test_construction_defect_exit_code(tmp_path, capsys, monkeypatch):
    import rainbowtrees.cli as cli_mod
    from rainbowtrees import ConstructionDefect

    def boom(c):
        raise ConstructionDefect("forced for the test", instance_text="3 1\n")

    monkeypatch.setattr(cli_mod, "partition_complete", boom)
    cfile = tmp_path / "c.txt"
    write_coloring(monochromatic_complete(4), cfile)
    code, _, err = run_cli(capsys, "construct", cfile)
    assert code == 2
    assert "defect" in err and "3 1" in err


def test_config_echo(capsys):
    _, out, _ = run_cli(capsys, "formula", 6, 5)
    assert out.splitlines()[0].startswith("# config formula")


def test_module_entry_point_subprocess():
    src = str(pathlib.Path(__file__).resolve().parent.parent / "src")
    env = dict(os.environ)
    env["PYTHONPATH"] = src + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run(
        [sys.executable, "-m", "rainbowtrees", "formula", "6", "5"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert proc.returncode == 0
    assert "t=3 value=2" in proc.stdout

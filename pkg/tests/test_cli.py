import json

from fatlocus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out


def test_generate_writes_a_valid_record(tmp_path, capsys):
    out = tmp_path / "a9.json"
    code, _ = run(capsys, "generate", "a4k1", "--k", "2", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["npoints"] == 9
    assert data["manifest"]["command"] == "generate"
    from fatlocus import atlas

    rec = atlas.load(out)
    assert rec.npoints == 9


def test_generate_d4_and_dk(tmp_path, capsys):
    out = tmp_path / "d4.json"
    assert run(capsys, "generate", "d4", "--out", str(out))[0] == 0
    assert json.loads(out.read_text())["npoints"] == 12
    out = tmp_path / "dk7.json"
    assert run(capsys, "generate", "dk", "--variant", "seven", "--out", str(out))[0] == 0
    assert json.loads(out.read_text())["npoints"] == 7


def test_certify_exit_codes(tmp_path, capsys):
    code, out = run(capsys, "certify", "a13_3_table", "-d", "6", "-m", "5")
    assert code == 0
    assert "31 > 30" in out and "Proven" in out

    code, out = run(capsys, "certify", "a30_3_29_table", "-d", "14", "-m", "13")
    assert code == 2
    assert "Inconclusive" in out

    code, out = run(capsys, "certify", "a30_3_table", "-d", "14")
    assert code == 0
    assert "198" in out and "185" in out  # both bookkeeping variants are printed


def test_certify_plane_count_via_file(tmp_path, capsys):
    d4 = tmp_path / "d4.json"
    run(capsys, "generate", "d4", "--out", str(d4))
    code, out = run(capsys, "certify", str(d4), "-d", "3", "-m", "3")
    assert code == 0
    assert "12 > 10" in out


def test_analyze_nine_point_dual(tmp_path, capsys):
    a9 = tmp_path / "a9.json"
    run(capsys, "generate", "a4k1", "--k", "2", "--out", str(a9))
    code, out = run(
        capsys, "analyze", str(a9), "-d", "4", "-m", "3", "--trials", "6", "--seed", "1"
    )
    assert code == 0
    assert "unexpected: yes" in out
    assert "ProbablyZero" in out


def test_analyze_seven_general_points(tmp_path, capsys):
    dk = tmp_path / "dk7.json"
    run(capsys, "generate", "dk", "--variant", "seven", "--out", str(dk))
    code, out = run(
        capsys, "analyze", str(dk), "-d", "3", "-m", "2", "--trials", "6", "--seed", "1"
    )
    assert code == 0
    assert "unexpected: no" in out
    assert "witness" in out  # the locus is a proper curve


def test_locus_json_output(tmp_path, capsys):
    dk = tmp_path / "dk7.json"
    run(capsys, "generate", "dk", "--variant", "seven", "--out", str(dk))
    out = tmp_path / "locus.json"
    code, _ = run(
        capsys, "locus", str(dk), "-d", "3", "-m", "2",
        "--format", "json", "--out", str(out), "--sample", "10",
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["locus"]["degree"] == 6
    assert not data["locus"]["zero"]
    assert len(data["samples"]) == 10
    assert all(len(pt) == 2 for pt in data["samples"])


def test_locus_zero_flag(tmp_path, capsys):
    a9 = tmp_path / "a9.json"
    run(capsys, "generate", "a4k1", "--k", "2", "--out", str(a9))
    out = tmp_path / "zero.json"
    code, _ = run(
        capsys, "locus", str(a9), "-d", "4", "-m", "3", "--format", "json", "--out", str(out)
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["locus"]["zero"] is True
    assert data["locus"]["terms"] == []


def test_audit_penrose(capsys):
    code, out = run(capsys, "audit-penrose", "--remove", "0")
    assert code == 0
    assert "8,8,8" in out.replace(" ", "") or "min 20" in out
    code, out = run(capsys, "audit-penrose")
    assert code == 0
    assert "15504" in out
    assert "no 15-point subset" in out


def test_audit_penrose_json_profiles(tmp_path, capsys):
    out = tmp_path / "audit.json"
    code, _ = run(capsys, "audit-penrose", "--format", "json", "--out", str(out))
    assert code == 0
    data = json.loads(out.read_text())
    assert data["audit"]["total_subsets"] == 15504
    assert len(data["audit"]["profiles"]) == 15504
    assert data["audit"]["all_six_count"] == 0


def test_incidence_output(tmp_path, capsys):
    code, out = run(capsys, "incidence", "a15_1", "--format", "json", "--out",
                    str(tmp_path / "inc.json"))
    assert code == 0
    data = json.loads((tmp_path / "inc.json").read_text())
    assert data["weak_table"] == {"3": 10, "5": 6}
    assert len(data["hyperplanes"]) == 16


def test_malformed_input_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    code, _ = run(capsys, "certify", str(bad), "-d", "6", "-m", "5")
    assert code == 1
    code, _ = run(capsys, "certify", "no-such-config", "-d", "6", "-m", "5")
    assert code == 1


def test_identical_flags_reproduce_identical_bytes(tmp_path, capsys):
    a9 = tmp_path / "a9.json"
    run(capsys, "generate", "a4k1", "--k", "2", "--out", str(a9))
    out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
    for out in (out1, out2):
        code, _ = run(
            capsys, "analyze", str(a9), "-d", "4", "-m", "3",
            "--trials", "5", "--seed", "42", "--format", "json", "--out", str(out),
        )
        assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    # different seed changes the manifest but not the verdict
    out3 = tmp_path / "r3.json"
    run(
        capsys, "analyze", str(a9), "-d", "4", "-m", "3",
        "--trials", "5", "--seed", "43", "--format", "json", "--out", str(out3),
    )
    a, b = json.loads(out1.read_text()), json.loads(out3.read_text())
    assert a["manifest"] != b["manifest"]
    assert a["report"]["unexpected"] == b["report"]["unexpected"]


def test_generate_fermat_member(tmp_path, capsys):
    out = tmp_path / "z1.json"
    code, _ = run(capsys, "generate", "fermat", "--member", "z1", "--pindex", "2",
                  "--out", str(out))
    assert code == 0
    assert json.loads(out.read_text())["npoints"] == 20


def test_audit_bytes_identical_across_thread_counts(tmp_path, capsys):
    outs = []
    for i, threads in enumerate((1, 2)):
        out = tmp_path / f"audit{i}.json"
        code, _ = run(
            capsys, "audit-penrose", "--remove", "4", "--threads", str(threads),
            "--format", "json", "--out", str(out),
        )
        assert code == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]

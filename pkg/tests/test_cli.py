import json

from opaqcheck import check_ini, check_ni, check_opacity_orwellian, parse_model
from opaqcheck.cli import main

SECRET_RE = "h l + h d h l l*"


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_orwellian_check_prints_verdict_witness_and_breakdown(capsys, fixtures_dir):
    code, out, _ = run(
        capsys, "check", "orwellian", "--system", str(fixtures_dir / "downgrade_loop.lts"), "--secret-re", SECRET_RE
    )
    lines = out.splitlines()
    assert code == 1
    assert lines[0] == "violated"
    assert lines[1] == "h l"
    assert len(lines) == 4 and all(" violated" in ln for ln in lines[2:])


def test_json_lines_report_schema(capsys, fixtures_dir):
    code, out, _ = run(
        capsys,
        "check", "orwellian",
        "--system", str(fixtures_dir / "downgrade_loop.lts"),
        "--secret-re", SECRET_RE,
        "--report", "json-lines",
    )
    records = [json.loads(ln) for ln in out.splitlines()]
    assert code == 1
    assert len(records) == 2
    assert all(set(r) == {"state", "holds", "witness"} for r in records)
    assert [r["holds"] for r in records] == [False, False]
    assert records[0]["witness"] == "h l"


def test_ni_and_ini_verdicts_on_the_declassified_chain(capsys, fixtures_dir):
    path = str(fixtures_dir / "hdl_chain.lts")
    code, out, _ = run(capsys, "check", "ni", "--system", path)
    assert code == 1
    assert out.splitlines()[1] == "l"
    code, out, _ = run(capsys, "check", "ini", "--system", path)
    assert code == 0
    assert out.splitlines()[1] == ""


def test_empty_word_secret_is_covered(capsys, fixtures_dir):
    code, out, _ = run(
        capsys, "check", "static", "--system", str(fixtures_dir / "downgrade_loop.lts"), "--secret-re", "()"
    )
    assert code == 0
    assert out.splitlines()[0] == "holds"


def test_witness_line_is_empty_exactly_on_success(capsys, fixtures_dir):
    invocations = [
        ("check", "orwellian", "--system", str(fixtures_dir / "downgrade_loop.lts")),
        ("check", "static", "--system", str(fixtures_dir / "downgrade_loop.lts")),
        ("check", "ni", "--system", str(fixtures_dir / "hdl_chain.lts")),
        ("check", "ini", "--system", str(fixtures_dir / "hdl_chain.lts")),
        ("oracle", "--obs", "orwellian", "--max-len", "8", "--system", str(fixtures_dir / "downgrade_loop.lts")),
    ]
    for argv in invocations:
        code, out, _ = run(capsys, *argv)
        lines = out.splitlines()
        assert code in (0, 1)
        assert (lines[1] == "") == (code == 0)


def test_cli_matches_the_library_on_fixtures(capsys, fixtures_dir):
    system = parse_model((fixtures_dir / "downgrade_loop.lts").read_text())
    code, _, _ = run(capsys, "check", "orwellian", "--system", str(fixtures_dir / "downgrade_loop.lts"))
    assert code == (0 if check_opacity_orwellian(system).holds else 1)
    chain = parse_model((fixtures_dir / "hdl_chain.lts").read_text())
    code, _, _ = run(capsys, "check", "ni", "--system", str(fixtures_dir / "hdl_chain.lts"))
    assert code == (0 if check_ni(chain).holds else 1)
    code, _, _ = run(capsys, "check", "ini", "--system", str(fixtures_dir / "hdl_chain.lts"))
    assert code == (0 if check_ini(chain).holds else 1)


def test_reduce_to_ni_produces_a_checkable_model(capsys, fixtures_dir, tmp_path):
    target = tmp_path / "layered.lts"
    code, out, _ = run(
        capsys,
        "reduce", "to-ni",
        "--system", str(fixtures_dir / "downgrade_loop.lts"),
        "--secret-re", SECRET_RE,
        "-o", str(target),
    )
    assert code == 0 and out == ""
    code, _, _ = run(capsys, "check", "ni", "--system", str(target))
    assert code == 1  # the fixture's secret leaks already under a static observer


def test_reduce_from_ini_round_trips_through_a_file(capsys, fixtures_dir, tmp_path):
    for name, expected in (("hdl_chain.lts", 0), ("downgrade_loop.lts", 1)):
        target = tmp_path / f"folded_{name}"
        code, _, _ = run(capsys, "reduce", "from-ini", "--system", str(fixtures_dir / name), "-o", str(target))
        assert code == 0
        code, _, _ = run(capsys, "check", "orwellian", "--system", str(target))
        assert code == expected


def test_reduce_to_ini_round_trips_through_a_file(capsys, fixtures_dir, tmp_path):
    target = tmp_path / "layered.lts"
    code, _, _ = run(
        capsys,
        "reduce", "to-ini",
        "--system", str(fixtures_dir / "downgrade_loop.lts"),
        "--secret-re", SECRET_RE,
        "-o", str(target),
    )
    assert code == 0
    code, _, _ = run(capsys, "check", "ini", "--system", str(target))
    assert code == 1


def test_oracle_subcommand_agrees_with_the_decider(capsys, fixtures_dir):
    code, out, _ = run(
        capsys, "oracle", "--obs", "orwellian", "--max-len", "10", "--system", str(fixtures_dir / "downgrade_loop.lts")
    )
    assert code == 1
    assert out.splitlines()[1] == "h l"


def test_input_errors_use_exit_code_two(capsys, fixtures_dir, tmp_path):
    bad = tmp_path / "bad.lts"
    bad.write_text("trans 1 h 2\n")
    code, _, err = run(capsys, "check", "ni", "--system", str(bad))
    assert code == 2 and "error:" in err

    code, _, _ = run(capsys, "check", "ni", "--system", str(tmp_path / "missing.lts"))
    assert code == 2

    code, _, err = run(
        capsys, "check", "static", "--system", str(fixtures_dir / "hdl_chain.lts")
    )
    assert code == 2 and "secret" in err

    code, _, err = run(
        capsys, "oracle", "--obs", "orwellian", "--max-len", "-3",
        "--system", str(fixtures_dir / "downgrade_loop.lts"),
    )
    assert code == 2


def test_usage_errors_use_exit_code_two(capsys):
    assert main(["check", "ni"]) == 2  # --system missing
    assert main(["check", "sideways", "--system", "x"]) == 2


def test_both_secret_flags_are_rejected(capsys, fixtures_dir, tmp_path):
    secret = tmp_path / "secret.lts"
    secret.write_text((fixtures_dir / "downgrade_loop.lts").read_text())
    code, _, err = run(
        capsys,
        "check", "static",
        "--system", str(fixtures_dir / "downgrade_loop.lts"),
        "--secret", str(secret),
        "--secret-re", "()",
    )
    assert code == 2 and "not both" in err


def test_secret_automaton_file_is_accepted(capsys, fixtures_dir, tmp_path):
    secret = tmp_path / "secret.lts"
    secret.write_text(
        "alphabet obs l\nalphabet unobs h\nalphabet down d\n"
        "states p0 p1 p2\ninit p0\naccept Fphi: p2\n"
        "trans p0 h p1\ntrans p1 l p2\n"
    )
    code, out, _ = run(
        capsys, "check", "orwellian",
        "--system", str(fixtures_dir / "downgrade_loop.lts"),
        "--secret", str(secret),
    )
    assert code == 1
    assert out.splitlines()[1] == "h l"

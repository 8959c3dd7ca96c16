"""Report assembly, JSON round-trips, and the command-line surface."""

import json

import pytest

from bbg import (
    Parameters,
    ParameterError,
    Report,
    SolutionType,
    TrivialParametersError,
    build_report,
    parse_json,
    render_json,
    render_text,
    symmetry_orbit,
)
from bbg import cli, verify


def test_report_3_4_5():
    rep = build_report(3, 4, 5)
    assert rep.parameters.as_tuple() == (3, 6, 4, 5)
    assert rep.dimension == 3
    assert rep.ell == 2
    assert rep.ell_terms == (3, 2, 3)
    assert rep.statement == (
        "0-connected at infinity, not 1-connected at infinity"
    )
    assert rep.duality is False
    assert rep.exceptional is False
    assert rep.exceptional_witness is None
    assert rep.built and rep.f_vector == (84, 420, 600, 240) and rep.euler == 24
    assert rep.flag_ok is True
    assert [row.type.as_tuple() for row in rep.types] == [
        (0, 3, 4, 2),
        (1, 2, 3, 3),
        (2, 1, 2, 4),
        (3, 0, 1, 5),
    ]
    assert [row.bound for row in rep.types] == [0, 1, 1, 1]
    assert [row.hconn for row in rep.types] == [0, 1, 1, 1]
    assert rep.types[0].betti == ((1, 2), (2, 1))
    assert rep.types[3].betti == ((2, 14),)
    assert all(row.torsion == () for row in rep.types)
    assert min(row.bound for row in rep.types) == rep.ell - 2


def test_report_2_3_3_duality():
    rep = build_report(2, 3, 3)
    assert rep.duality is True
    assert rep.statement == (
        "0-connected at infinity, not 1-connected at infinity"
    )
    assert rep.f_vector == (15, 36, 18) and rep.euler == -3


def test_report_4_4_4_exceptional():
    rep = build_report(4, 4, 4)
    assert rep.exceptional is True
    assert rep.exceptional_witness == SolutionType(2, 2, 2, 2)
    assert rep.ell == 2
    witness_row = next(
        row for row in rep.types if row.type == rep.exceptional_witness
    )
    assert witness_row.bound == 0
    assert witness_row.hconn == 0
    assert witness_row.betti == ((1, 1),)  # the witness link is a circle


def test_trivial_parameters():
    with pytest.raises(TrivialParametersError):
        build_report(1, 2, 2)
    rep = build_report(1, 2, 2, allow_trivial=True)
    assert rep.note is not None and "free group" in rep.note
    assert rep.ell is None and rep.statement is None
    assert rep.types == ()
    assert rep.duality is None and rep.exceptional is None
    assert rep.built and rep.f_vector == (4, 4)


def test_json_round_trip():
    for args in [(3, 4, 5), (4, 4, 4), (2, 3, 3)]:
        rep = build_report(*args)
        assert parse_json(render_json(rep)) == rep
    trivial = build_report(1, 2, 2, allow_trivial=True)
    assert parse_json(render_json(trivial)) == trivial


def test_json_deterministic():
    a = render_json(build_report(3, 4, 5))
    b = render_json(build_report(3, 4, 5))
    assert a == b
    assert a.endswith("\n")
    json.loads(a)  # well-formed


def test_json_big_integers_become_strings():
    orbit, canonical = symmetry_orbit(Parameters.for_robots(2, 3, 3))
    rep = Report(
        parameters=Parameters.for_robots(2, 3, 3),
        orbit=orbit,
        canonical=canonical,
        dimension=2,
        note=None,
        ell=2,
        ell_terms=(2, 2, 2),
        statement="0-connected at infinity, not 1-connected at infinity",
        duality=True,
        exceptional=False,
        exceptional_witness=None,
        types=(),
        built=False,
        f_vector=None,
        euler=2**60,
        flag_ok=None,
    )
    text = render_json(rep)
    doc = json.loads(text)
    assert doc["euler"] == str(2**60)
    assert parse_json(text) == rep


def test_json_schema_rejection():
    doc = json.loads(render_json(build_report(2, 3, 3)))
    doc["schema"] = "bogus/9"
    with pytest.raises(ParameterError):
        parse_json(json.dumps(doc))


def test_render_text():
    rep = build_report(4, 4, 4)
    text = render_text(rep)
    assert rep.statement in text
    assert "exceptional" in text
    assert "(2, 2, 2, 2)" in text
    assert "locally CAT(0)" in text
    assert render_text(rep) == text  # stable


def test_cli_report_exit_zero(capsys, tmp_path):
    assert cli.main(["report", "2", "3", "3"]) == 0
    out = capsys.readouterr().out
    assert "0-connected at infinity" in out


def test_cli_report_json_export(tmp_path):
    path = tmp_path / "report.json"
    assert cli.main(["report", "3", "4", "5", "--json", str(path)]) == 0
    rep = parse_json(path.read_text())
    assert rep == build_report(3, 4, 5)


def test_cli_report_cell_export(tmp_path):
    path = tmp_path / "cells.txt"
    assert cli.main(["report", "2", "3", "3", "--export-cells", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert lines[0].startswith("# cube cells")
    assert len(lines) == 1 + 15 + 36 + 18


def test_cli_report_facet_export(tmp_path):
    path = tmp_path / "facets.txt"
    assert cli.main(["report", "3", "4", "5", "--export-facets", str(path)]) == 0
    text = path.read_text()
    for t in [(0, 3, 4, 2), (1, 2, 3, 3), (2, 1, 2, 4), (3, 0, 1, 5)]:
        assert f"# type {t}" in text


def test_cli_trivial_exit_codes(capsys):
    assert cli.main(["report", "1", "2", "2"]) == 2
    capsys.readouterr()
    assert cli.main(["report", "1", "2", "2", "--allow-trivial"]) == 0
    assert "free group" in capsys.readouterr().out


def test_cli_resource_limit_exit(tmp_path, capsys):
    # the report itself degrades gracefully under a tiny cap...
    assert cli.main(["report", "2", "3", "3", "--max-zero-cells", "5"]) == 0
    capsys.readouterr()
    # ...but an explicit cell export cannot, and reports the resource error
    path = tmp_path / "cells.txt"
    code = cli.main(
        [
            "report",
            "2",
            "3",
            "3",
            "--max-zero-cells",
            "5",
            "--export-cells",
            str(path),
        ]
    )
    assert code == 2


def test_cli_verify_single_criterion(capsys):
    assert cli.main(["verify", "--criteria", "1"]) == 0
    out = capsys.readouterr().out
    assert "criterion  1 PASS" in out
    assert "1/1 criteria passed" in out


def test_cli_verify_known_red(capsys):
    # the 1x1 board is a genuine counterexample to the sharpness claim
    assert cli.main(["verify", "--criteria", "3"]) == 1
    out = capsys.readouterr().out
    assert "criterion  3 FAIL" in out
    assert "(1,1)" in out or "(1, 1)" in out


def test_mutation_is_caught():
    vr = verify.run(level="quick", criteria=[2], mutate="nu")
    assert not vr.ok
    assert vr.results[0].number == 2
    assert not vr.results[0].passed


def test_mutation_restores_clean_state():
    verify.run(level="quick", criteria=[2], mutate="nu")
    vr = verify.run(level="quick", criteria=[2])
    assert vr.ok


def test_run_validation():
    with pytest.raises(ParameterError):
        verify.run(level="bogus")
    with pytest.raises(ParameterError):
        verify.run(criteria=[13])
    with pytest.raises(ParameterError):
        verify.run(mutate="euler")


def test_verification_run_lines():
    vr = verify.run(level="quick", criteria=[1, 10])
    lines = vr.lines()
    assert len(lines) == 3
    assert lines[-1] == "verify quick: 2/2 criteria passed"

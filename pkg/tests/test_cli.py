import json
import shutil

import pytest

from bettikit.cli import main
from bettikit.fixtures import fixture_path
from bettikit.tables import BettiTable


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_pure_text_output(capsys):
    code, out, _ = run(capsys, "pure", "0,3,4,5")
    assert code == 0
    assert "2: . 10 15 6" in out
    assert "multiplicity: 10" in out


def test_pure_clear_denominators(capsys):
    code, out, _ = run(capsys, "pure", "0,2,4,5", "--clear-denominators")
    assert code == 0
    assert "cleared by: 3" in out
    assert "multiplicity: 20/3" in out


def test_pure_json(capsys):
    code, out, _ = run(capsys, "pure", "0,2,4,5", "--out", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degrees"] == [0, 2, 4, 5]
    assert payload["multiplicity"] == "20/3"
    assert {"p": 1, "q": 1, "num": "10", "den": "3"} in payload["entries"]


def test_pure_bad_sequence(capsys):
    code, _, err = run(capsys, "pure", "0,2,2")
    assert code == 1
    assert "strictly increasing" in err


def test_decompose_projected_veronese(capsys):
    code, out, _ = run(capsys, "decompose", fixture_path("veronese_projection.table"))
    assert code == 0
    assert out.splitlines() == [
        "2/3  0,3,4",
        "7/30  0,3,4,5",
        "1/10  0,3,4,5,6",
    ]


def test_decompose_json_with_codim(capsys):
    code, out, _ = run(capsys, "decompose", fixture_path("cubic_conic_union.table"),
                       "--format", "json", "--codim", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["multiplicity"] == "5"
    assert {"coefficient": "2/15", "degrees": [0, 2, 3, 5]} in payload["terms"]


def test_decompose_codim_warning(capsys):
    code, out, err = run(capsys, "decompose", fixture_path("veronese_projection.table"),
                         "--codim", "3")
    assert code == 0
    assert "warning" in err
    assert "multiplicity (length 3 part): 7/3" in out


def test_decompose_rejects_off_cone(tmp_path, capsys):
    bad = tmp_path / "bad.table"
    bad.write_text("0: 1\n1: . . 2\n")
    code, _, err = run(capsys, "decompose", str(bad))
    assert code == 1
    assert "cone" in err


def test_decompose_missing_file(capsys):
    code, _, err = run(capsys, "decompose", "/nonexistent/t.table")
    assert code == 1
    assert err


def test_betti_text(capsys):
    code, out, _ = run(capsys, "betti", fixture_path("twisted_cubic.ideal"), "--qmax", "3")
    assert code == 0
    assert "field: gf 32003" in out
    assert "complete: true" in out
    assert "0: 1" in out
    assert "1: . 3 2" in out


def test_betti_rational_json(capsys):
    code, out, _ = run(capsys, "betti", fixture_path("twisted_cubic.ideal"),
                       "--qmax", "3", "--field", "rational", "--out", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["field"] == "rational"
    assert payload["complete"] is True
    assert BettiTable.from_json_dict(payload) == BettiTable(
        {(0, 0): 1, (1, 1): 3, (2, 1): 2})


def test_betti_bad_field(capsys):
    code, _, err = run(capsys, "betti", fixture_path("twisted_cubic.ideal"),
                       "--qmax", "2", "--field", "gf")
    assert code == 1
    assert "bad field" in err


def test_betti_parse_diagnostic(tmp_path, capsys):
    bad = tmp_path / "bad.ideal"
    bad.write_text("vars 2\nx0*x5\n")
    code, _, err = run(capsys, "betti", str(bad), "--qmax", "2")
    assert code == 1
    assert "bad.ideal:2:" in err
    assert "x5" in err


def test_check_violation_exit_code(capsys):
    code, out, _ = run(capsys, "check", fixture_path("veronese_projection.table"),
                       "--codim", "2", "--assert-nd")
    assert code == 2
    assert "verdict: Violation(p=1)" in out


def test_check_all_max_exit_zero(tmp_path, capsys):
    table = tmp_path / "tc.table"
    table.write_text("0: 1\n1: . 3 2\n")
    code, out, _ = run(capsys, "check", str(table), "--codim", "2")
    assert code == 0
    assert "verdict: AllMax" in out
    assert "predicted degree: 3" in out


def test_check_next_to_max(capsys):
    code, out, _ = run(capsys, "check", fixture_path("cubic_conic_union.table"),
                       "--codim", "3", "--next-to-max", "--ndm", "2,3")
    assert code == 2
    assert "verdict: Violation(p=2)" in out
    assert "property N_{2,3}: fails" in out


def test_check_json_report(capsys):
    code, out, _ = run(capsys, "check", fixture_path("veronese_projection.table"),
                       "--codim", "2", "--out", "json")
    assert code == 2
    payload = json.loads(out)
    assert payload["report"]["verdict"] == "Violation"
    assert payload["report"]["q_strand"] == 2


def test_check_q_mismatch(capsys):
    code, _, err = run(capsys, "check", fixture_path("veronese_projection.table"),
                       "--codim", "2", "--q", "1")
    assert code == 1
    assert "does not match" in err


def test_check_malformed_table(tmp_path, capsys):
    bad = tmp_path / "bad.table"
    bad.write_text("0: 1\n1: -2\n")
    code, _, err = run(capsys, "check", str(bad), "--codim", "1")
    assert code == 1
    assert "negative entry" in err
    assert "bad.table:2:" in err


def test_check_trivial_table(tmp_path, capsys):
    table = tmp_path / "free.table"
    table.write_text("0: 1\n")
    code, out, _ = run(capsys, "check", str(table), "--codim", "1")
    assert code == 0
    assert "nothing to check" in out


def test_fixtures_all_pass(capsys):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0
    assert "11/11 fixtures passed" in out
    assert "FAIL" not in out


def test_fixtures_dir_override(tmp_path, capsys, monkeypatch):
    shutil.copy(fixture_path("veronese_projection.table"), tmp_path / "veronese_projection.table")
    monkeypatch.setenv("FIXTURES_DIR", str(tmp_path))
    code, out, _ = run(capsys, "decompose", fixture_path("veronese_projection.table"))
    assert code == 0
    assert str(tmp_path) in fixture_path("veronese_projection.table")


def test_table_normalized_to_degree_zero(tmp_path, capsys):
    # a twist of the twisted cubic table: generator in degree 2
    shifted = tmp_path / "shifted.table"
    shifted.write_text("2: 1\n3: . 3 2\n")
    code, out, err = run(capsys, "decompose", str(shifted))
    assert code == 0
    assert "shifted down by 2" in err
    assert out.splitlines() == ["1  0,2,3"]


def test_unknown_subcommand_exit_64(capsys):
    with pytest.raises(SystemExit) as info:
        main(["bogus"])
    assert info.value.code == 64


def test_no_subcommand_usage(capsys):
    code = main([])
    assert code == 64


def test_emit_parse_round_trip_on_fixture_files(capsys):
    for name in ("veronese_projection.table", "cubic_conic_union.table"):
        text = open(fixture_path(name)).read()
        table = BettiTable.from_text(text)
        assert table.to_text() == text
        assert BettiTable.from_json(table.to_json()) == table

import io
import json

import pytest

from pcwords.cli import main, render_json

APARTMENT_OUTPUT = """\
apartment
artmentap
entapartm
mentapart
ntapartme
partmenta
rtmentapa
tapartmen
tmentapar
bwt = tpmteaanr, not clustering
"""


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_bwt_text_output(capsys):
    code, out, _ = run(capsys, "bwt", "apartment")
    assert code == 0
    assert out == APARTMENT_OUTPUT


def test_bwt_clustering_lines(capsys):
    _, out, _ = run(capsys, "bwt", "aluminium")
    assert out.splitlines()[-1] == "bwt = mmnauuiil, 451623-clustering"
    _, out, _ = run(capsys, "bwt", "acacacbbbc")
    assert out.splitlines()[-1] == "bwt = ccccbbbaaa, perfectly clustering (321-clustering)"


def test_bwt_json_round_trips(capsys):
    code, out, _ = run(capsys, "bwt", "apartment", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["bwt"] == "tpmteaanr"
    assert data["clustering"] == {"pi": None, "perfect": False}
    assert render_json(data) == out


def test_factor_text_output(capsys):
    code, out, _ = run(capsys, "factor", "acacacbbbc")
    assert code == 0
    assert out == "a|cacac|b|bb|c (palindromic), W = cbbbcacaca\n"


def test_factor_json(capsys):
    code, out, _ = run(capsys, "factor", "aaabaab", "--json")
    assert code == 0
    data = json.loads(out)
    assert data == {
        "letters": ["a", "b"],
        "gaps": ["aabaa"],
        "palindromic": True,
        "W": "baabaaa",
    }
    assert render_json(data) == out


def test_factor_rejects_non_clustering_word(capsys):
    code, out, err = run(capsys, "factor", "apartment")
    assert code == 1
    assert not out
    assert "error" in err


def test_rows_output(capsys):
    code, out, _ = run(capsys, "rows", "aaabaab")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[2] == 'rows 3,4: y="a" m="ab" x="aaba" xy="aabaa" gap=1'


def test_iet_composition(capsys):
    code, out, _ = run(capsys, "iet", "3,3,4")
    assert code == 0
    assert out == (
        "composition = 3,3,4\n"
        "t = 7,1,-6\n"
        "sigma = 8,9,10,5,6,7,1,2,3,4\n"
        "cycles = (1 8 2 9 3 10 4 5 6 7)\n"
        "circular = yes\n"
        "encoding(1) = acacacbbbc\n"
    )


def test_iet_non_circular(capsys):
    code, out, _ = run(capsys, "iet", "2,2")
    assert code == 0
    assert "circular = no" in out
    assert "encoding" not in out


def test_iet_word_mode(capsys):
    code, out, _ = run(capsys, "iet", "--word", "bbbcacacac")
    assert code == 0
    assert "composition = 3,3,4" in out
    assert "r = 4" in out
    assert "encoding(4) = bbbcacacac" in out


def test_iet_start_flag(capsys):
    code, out, _ = run(capsys, "iet", "3,3,4", "--start", "4")
    assert code == 0
    assert "encoding(4) = bbbcacacac" in out


def test_rows_json_round_trips(capsys):
    code, out, _ = run(capsys, "rows", "acacacbbbc", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["pairs"][0] == {
        "rows": [1, 2], "y": "acac", "m": "acbbb", "x": "c",
        "xy": "cacac", "gap": 1,
    }
    assert render_json(data) == out


def test_iet_json_round_trips(capsys):
    code, out, _ = run(capsys, "iet", "3,3,4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["t"] == [7, 1, -6]
    assert data["circular"] is True
    assert data["encoding"] == "acacacbbbc"
    assert render_json(data) == out
    code, out, _ = run(capsys, "iet", "--word", "bbbcacacac", "--json")
    data = json.loads(out)
    assert data["r"] == 4 and data["composition"] == [3, 3, 4]
    assert render_json(data) == out


def test_iet_requires_exactly_one_input(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["iet"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["iet", "1,1", "--word", "ab"])
    assert exc.value.code == 2


def test_iet_bad_composition(capsys):
    code, _, err = run(capsys, "iet", "3,x")
    assert code == 1 and "error" in err
    code, _, err = run(capsys, "iet", "3,0")
    assert code == 1 and "error" in err


def test_auto_output(capsys):
    code, out, _ = run(capsys, "auto", "--rho", "b", "ab")
    assert code == 0
    assert out == "rho_b(ab) = abb (positive)\n"
    code, out, _ = run(capsys, "auto", "--rho", "b", "ca")
    assert out == "rho_b(ca) = b-cab (not positive)\n"
    code, out, _ = run(capsys, "auto", "--lambda", "a", "ab")
    assert out == "lambda_a(ab) = aab (positive)\n"


def test_auto_needs_exactly_one_side(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["auto", "ab"])
    assert exc.value.code == 2


def test_enum_text(capsys):
    code, out, _ = run(capsys, "enum", "--k", "2", "--max-len", "3",
                       "--full-alphabet")
    assert code == 0
    assert out.splitlines() == ["ab", "aab", "abb"]


def test_enum_json_round_trips(capsys):
    code, out, _ = run(capsys, "enum", "--k", "2", "--max-len", "4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["counts_by_length"]["1"] == 2
    assert render_json(data) == out


def test_enum_both_methods_agree(capsys):
    code, out, err = run(capsys, "enum", "--k", "3", "--max-len", "7",
                         "--method", "both", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["closure_agrees"] is True
    assert not err


def test_enum_cap_error(capsys):
    code, _, err = run(capsys, "enum", "--k", "9", "--max-len", "3")
    assert code == 1
    assert "max_alphabet" in err


def test_stdin_word_list(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("ab\naab\n\n"))
    code, out, _ = run(capsys, "factor", "-")
    assert code == 0
    assert out.splitlines() == [
        "a||b (palindromic), W = ba",
        "a|a|b (palindromic), W = baa",
    ]


def test_alphabet_override(capsys):
    # with order b < a the word ba is Lyndon and perfectly clustering
    code, out, _ = run(capsys, "factor", "ba", "--alphabet", "ba")
    assert code == 0
    assert out == "b||a (palindromic), W = ab\n"


def test_verify_passes_and_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "--k", "2", "--max-len", "6",
                       "--samples", "200")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1].endswith("checks passed")
    assert all("PASS" in line for line in lines[:-1] if line and not line.startswith(" "))
    assert any(line.startswith("Theorem 1") for line in lines)
    assert any(line.startswith("Corollary 2") for line in lines)


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2

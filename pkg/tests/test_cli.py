import json

import pytest
from hypothesis import given

from monideal.cli import ParseError, dumps, format_ideal, main, parse_ideal, run_scan, staircase_family
from monideal.core import MonomialIdeal

from conftest import zero_dim_ideals


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_examples():
    I = parse_ideal("x^3, x^2*y^8, x*y^15, y^21")
    assert I.gens == ((3, 0), (2, 8), (1, 15), (0, 21))
    assert parse_ideal("x^3, x^2y^8, xy^15, y^21") == I
    assert parse_ideal(" x ,y ") == MonomialIdeal.maximal(2)
    assert parse_ideal("x1^2, x2*x3, x3^4").dim == 3
    assert parse_ideal("1").is_unit()


@pytest.mark.parametrize("text, pos", [
    ("x^-1", 2), ("x, z", 3), ("x^", 2), ("x,,y", 2), ("2x", 0), ("x y ^", 5), ("x, y$", 4),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as err:
        parse_ideal(text)
    assert err.value.position == pos


def test_parse_rejects_mixed_names():
    with pytest.raises(ParseError):
        parse_ideal("x, x2")


@given(zero_dim_ideals(emax=12))
def test_format_parse_round_trip(I):
    assert parse_ideal(format_ideal(I)) == I
    assert format_ideal(parse_ideal(format_ideal(I))) == format_ideal(I)


def test_classify_counterexample_json(capsys):
    code, out, _ = run(capsys, "classify", "x^3, x^2y^8, xy^15, y^21", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == 1
    assert rep["normal"]["normal"] is False
    assert rep["mfull"]["verdict"]["is_m_full"] is True
    assert rep["closure"]["integral_closure"]["generators"] == [[3, 0], [2, 7], [1, 14], [0, 21]]


def test_rees_json_lists_extra_quadric(capsys):
    code, out, _ = run(capsys, "rees", "x^3, x^2y, xy^4, y^10", "--json")
    assert code == 0
    rep = json.loads(out)["rees"]
    assert rep["extra_generators"] in (["y^3*T3^2 - T2*T4"], ["T2*T4 - y^3*T3^2"])
    assert rep["routes_agree"] is True and rep["violations"] == []


def test_classify_maximal_ideal(capsys):
    code, out, _ = run(capsys, "classify", "x, y")
    assert code == 0 and "normal: true" in out


def test_output_is_deterministic_and_float_free(capsys, tmp_path):
    args = ["classify", "x^2, y^3", "--json"]
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args, "--out", str(tmp_path / "r.json"))
    assert first == second == (tmp_path / "r.json").read_text()

    def walk(v):
        assert not isinstance(v, float)
        if isinstance(v, dict):
            for w in v.values():
                walk(w)
        elif isinstance(v, list):
            for w in v:
                walk(w)
    walk(json.loads(first))


def test_irp_search_reports_witness(capsys):
    code, out, _ = run(capsys, "irp", "x^3, x^2y^8, xy^15, y^21", "--search", "--json")
    v = json.loads(out)["irp"]["verdict"]
    assert code == 0 and v["holds"] is False and v["witness"] == [2, 7]
    assert v["lp_solution"] == ["2/3", 0, 0, "1/3"]


def test_pick_and_three_variable_closure(capsys):
    code, out, _ = run(capsys, "pick", "x^2, xy^2, y^3", "--json")
    assert code == 0 and all(p.get("pick_holds", True) for p in json.loads(out)["pick"]["polygons"])
    code, out, _ = run(capsys, "closure", "x1^2, x2^3, x3^2", "--json")
    assert code == 0 and "newton_facets" in json.loads(out)["closure"]


def test_errors_exit_one(capsys):
    code, _, err = run(capsys, "closure", "x^-1")
    assert code == 1 and "position 2" in err
    code, _, err = run(capsys, "rees", "x^2, xy")
    assert code == 1
    code, _, err = run(capsys, "irp", "x^3, y^3", "--wbox", "700")
    assert code == 1 and "ceiling" in err
    code, _, err = run(capsys, "rees", "x^5, x^4y, x^2y^3, y^7", "--max-basis", "3")
    assert code == 1
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_scan_ordering_and_summary(capsys):
    family = list(staircase_family(3, 3))
    serial = list(run_scan(3, 3, workers=1))
    parallel = list(run_scan(3, 3, workers=2))
    assert [r["input"] for r in serial] == [S.ideal for S in family]
    assert dumps({"r": serial}) == dumps({"r": parallel})
    code, out, _ = run(capsys, "scan", "--n", "3", "--emax", "3", "--json", "--workers", "1")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == len(family) + 1
    assert json.loads(lines[-1])["summary"]["violations"] == 0

import json
import os
import pathlib

import pytest

import foliage

CASES = pathlib.Path(os.environ.get("FOLIAGE_CASES", pathlib.Path(__file__).resolve().parents[2] / "cases"))


def test_intersection():
    assert foliage.intersection("x", "y") == 1
    assert foliage.intersection("y^2 - x^3", "y^2 - x^2") == 4
    assert foliage.intersection("1 + x", "y") == 0
    assert foliage.intersection("x y", "x^2") is None


def test_curve_numbers():
    assert foliage.milnor_number("x y (x - y)") == 4
    assert foliage.tjurina_number("y^4 - x^5 + x^3 y^2") == 11
    assert foliage.milnor_number("y^2") is None


def test_foliation_numbers():
    assert foliage.foliation_milnor_number("4xy", "y - 2x^2") == 3
    assert foliage.gsv_index("4xy", "y - 2x^2", "y") == (2, 2)
    assert foliage.normalize("y - x + x") == "y"


def test_input_errors():
    with pytest.raises(foliage.InputError):
        foliage.intersection("x +", "y")
    with pytest.raises(ValueError):
        foliage.gsv_index("4xy", "y - 2x^2", "x")
    with pytest.raises(foliage.InputError):
        foliage.analyze({"form": {"P": "-y"}})
    with pytest.raises(foliage.InputError):
        foliage.check(CASES / "f3.json", checks=["no_such_row"])


def test_analyze_radial():
    r = foliage.analyze(CASES / "radial.json")
    assert r["mu_F"] == 1
    assert r["delta_B0"] == 0
    assert r["dicritical"] is True
    assert r["tree"]["depth"] == 1
    assert list(r)[0] == "form"


def test_modes_on_4xy():
    case = json.loads((CASES / "four_xy.json").read_text())
    assert foliage.analyze(case)["chi"] == 1
    assert foliage.analyze(case, mode="literal")["chi"] == 2
    rows = foliage.check(case, mode="literal", checks="gsv_milnor_gap")
    assert [r["status"] for r in rows] == ["fail"]
    assert all(r["status"] != "fail" for r in foliage.check(case))


@pytest.mark.parametrize("name", sorted(p.stem for p in CASES.glob("*.json")))
def test_every_case_checks(name):
    rows = foliage.check(CASES / f"{name}.json")
    assert rows
    assert all(r["status"] in ("pass", "n/a") for r in rows)


def test_reduce_and_dot():
    text = (CASES / "dulac2.json").read_text()
    tree = foliage.reduce(text)
    assert tree["depth"] == 2
    assert tree["second_type"] is False
    dot = foliage.reduce_dot(text)
    assert dot.startswith("digraph reduction {")
    assert dot.count("shape=box") == len(tree["components"])


def test_internal_error_on_depth_guard():
    with pytest.raises((foliage.InconsistencyError, RuntimeError)):
        foliage.reduce(CASES / "dulac2.json", max_depth=0)


def test_stable_output():
    a = foliage._foliage.analyze_json((CASES / "f3.json").read_text(), None, 3, None, None)
    b = foliage._foliage.analyze_json((CASES / "f3.json").read_text(), None, 3, None, None)
    assert a == b

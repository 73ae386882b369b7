import json

import pytest

import multispinal as msp


def test_fixture_names():
    assert msp.fixture_names() == ["grigorchuk", "nonsimple-variant", "z3z3"]


def test_analyze_grigorchuk():
    report = msp.analyze_text(msp.fixture_json("grigorchuk"))
    assert report["verdict"] == "Simple"
    assert report["kirchberg"] is True
    assert report["amenability"] == "Established"
    assert report["gram"]["scale"] == "7"
    assert report["gram"]["scaled_determinant"] == "896"
    assert report["psi"]["values"] == {"e": "1", "b": "1/7", "c": "2/7", "d": "4/7"}
    assert report["criteria"] == {
        "matrix_criterion": True,
        "kernel_criterion": True,
        "criteria_agree": True,
    }
    assert report["witness"]["agent"] == "A:d"


def test_analyze_nonsimple_variant_via_alias():
    report = msp.analyze_text(msp.fixture_json("gupta-variant"))
    assert report["verdict"] == "NotSimple"
    assert report["kirchberg"] is False
    assert report["gram"]["scaled_determinant"] == "0"


def test_z3z3_determinant():
    report = msp.analyze_text(
        msp.fixture_json("z3z3"), truncation_depth=0, witness_search=False
    )
    assert report["gram"]["scale"] == "14"
    assert report["gram"]["scaled_determinant"] == "634894848"
    assert report["verdict"] == "Simple"


def test_fixed_count():
    assert msp.fixed_count(msp.fixture_json("grigorchuk"), "b", 12) == 586


def test_determinism():
    first = msp.analyze_text(msp.fixture_json("z3z3"))
    second = msp.analyze_text(msp.fixture_json("z3z3"))
    assert first == second


def test_check_text():
    summary = msp.check_text(msp.fixture_json("grigorchuk"))
    assert summary == {"valid": True, "a_order": 4, "b_order": 2, "alphabet_size": 2}


def test_canonical_round_trip():
    canonical = msp.canonical_json(msp.fixture_json("grigorchuk"))
    assert json.loads(canonical)["A"]["kind"] == "table"
    assert msp.canonical_json(canonical) == canonical


def test_parse_error():
    with pytest.raises(ValueError, match="ParseError"):
        msp.analyze_text('{"A": 3}')


def test_validation_error_not_free():
    doc = json.loads(msp.fixture_json("grigorchuk"))
    doc["action"]["a"] = ["0", "1"]  # nontrivial element acting trivially
    with pytest.raises(ValueError, match="NotFree"):
        msp.analyze_text(json.dumps(doc))


def test_unknown_fixture():
    with pytest.raises(ValueError, match="UnknownFixture"):
        msp.fixture_json("no-such-instance")

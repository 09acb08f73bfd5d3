import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from brownchi.zetam1 import (
    DATA_DIR_ENV,
    FieldData,
    FieldDataError,
    IdealClassData,
    XiEntry,
    integrality_check,
    load_field_data,
    parse_field_data,
    parse_rational,
    solve_identity,
    torsion_contribution,
)

Q = load_field_data("Q")
Q5 = load_field_data("Q_sqrt5")


def test_contributions():
    assert torsion_contribution(Q) == F(7, 6)
    assert torsion_contribution(Q5) == F(8, 5) + F(4, 3) + 1 == F(59, 15)
    assert torsion_contribution(FieldData("empty", 1, ())) == 0


def test_solve_identity():
    assert solve_identity(Q, chi_h=1) == F(-1, 12)
    assert solve_identity(Q5, chi_h=4) == F(1, 30)
    assert solve_identity(FieldData("empty", 1, ()), chi_h=0) == 0
    with pytest.raises(ValueError):
        solve_identity(Q)
    with pytest.raises(ValueError):
        solve_identity(Q, chi_h=1, zeta=F(-1, 12))


def test_bundled_known_values_consistent():
    for fd in (Q, Q5):
        assert solve_identity(fd, chi_h=fd.chi_h) == fd.zeta_minus_one


@given(st.fractions(max_denominator=1000))
def test_round_trip(z):
    for fd in (Q, Q5):
        assert solve_identity(fd, chi_h=solve_identity(fd, zeta=z)) == z


def test_integrality_check():
    assert integrality_check(Q5, F(1, 30))
    assert integrality_check(Q, F(-1, 12))
    assert not integrality_check(Q, F(0))


def test_parse_rational():
    assert parse_rational("-1/12") == F(-1, 12)
    assert parse_rational(4) == 4
    for bad in ("0.5", 0.5, "x", True):
        with pytest.raises(ValueError):
            parse_rational(bad)


GOOD = {
    "name": "toy",
    "degree": 1,
    "xi_entries": [{"xi": "i", "count": 2, "ideal_classes": [{"cokernel_size": 2, "torsion_units": 4}]}],
}


def test_parse_reports_json_syntax_line():
    text = '{\n  "name": "x",\n  "degree": 1,\n  "xi_entries": [,\n}'
    with pytest.raises(FieldDataError) as err:
        parse_field_data(text, "bad.json")
    assert err.value.line == 4
    assert "bad.json:4" in str(err.value)


def test_parse_reports_field_and_line():
    bad = json.loads(json.dumps(GOOD))
    bad["xi_entries"][0]["ideal_classes"][0]["torsion_units"] = 1
    text = json.dumps(bad, indent=2)
    with pytest.raises(FieldDataError) as err:
        parse_field_data(text)
    assert err.value.field == "xi_entries[0].ideal_classes[0].torsion_units"
    assert err.value.line == next(k for k, line in enumerate(text.splitlines(), 1) if "torsion_units" in line)


def test_parse_missing_and_mistyped_fields():
    missing = dict(GOOD)
    del missing["degree"]
    with pytest.raises(FieldDataError, match="degree"):
        parse_field_data(json.dumps(missing))
    wrong = dict(GOOD, degree="one")
    with pytest.raises(FieldDataError, match="integer"):
        parse_field_data(json.dumps(wrong, indent=1))
    floaty = dict(GOOD, chi_h=1.5)
    with pytest.raises(FieldDataError, match="chi_h"):
        parse_field_data(json.dumps(floaty))


def test_parse_good():
    fd = parse_field_data(json.dumps(GOOD))
    assert fd.xi_entries == (XiEntry("i", 2, (IdealClassData(2, 4),)),)
    assert fd.chi_h is None


def test_data_dir_override(tmp_path, monkeypatch):
    (tmp_path / "toy.json").write_text(json.dumps(GOOD))
    monkeypatch.setenv(DATA_DIR_ENV, str(tmp_path))
    assert load_field_data("toy").name == "toy"
    with pytest.raises(FieldDataError):
        load_field_data("Q")


def test_field_data_invariants():
    with pytest.raises(ValueError):
        FieldData("x", 1, (XiEntry("i", 2, (IdealClassData(0, 4),)),))

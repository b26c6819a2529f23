from fractions import Fraction

import pytest

from heis_deform.family import (EXAMPLE9, FamilyError, crossings, family_from_json, family_table, parse_affine,
                                sample_values)
from heis_deform.properness import example9


@pytest.mark.parametrize("text, const, coef", [
    ("3", 3, 0),
    ("1/2", Fraction(1, 2), 0),
    ("c", 0, 1),
    ("-c", 0, -1),
    ("2 - c/2", 2, Fraction(-1, 2)),
    ("1 + 3*c", 1, 3),
    ("0.5c - 1", -1, Fraction(1, 2)),
    (7, 7, 0),
])
def test_parse_affine(text, const, coef):
    a = parse_affine(text)
    assert (a.const, a.coef) == (const, coef)


@pytest.mark.parametrize("text", ["c^2", "c*c", "2/c", "", "x", "c c", "c 2"])
def test_parse_affine_rejects_nonaffine(text):
    with pytest.raises(FamilyError):
        parse_affine(text)


def test_example9_preset_matches_library_family():
    fam = family_from_json(EXAMPLE9)
    for c in sample_values(0, 1, 5):
        assert fam.at(c) == example9(c)


def test_example9_fiber_lengths():
    fam = family_from_json(EXAMPLE9)
    rows = family_table(fam, sample_values(0, 1, 3))
    assert [r["fiber_length"] for r in rows] == [3, Fraction(5, 2), 2]
    assert all(r["torus_matrix"] == ((1, 1), (0, 1)) for r in rows)
    assert all(r["component"] == (1, 1) for r in rows)
    assert crossings(fam, 0, 1) == {"cond_a": [], "cond_b": []}


def test_constant_family_has_identical_rows():
    obj = {"rho": {"gamma1": [1, 0, 0], "gamma2": [0, 1, 0]}, "rho_prime": {"gamma1": [0, 0, 0], "gamma2": [0, 0, 0]}}
    rows = family_table(family_from_json(obj), sample_values(-1, 1, 4))
    assert all({k: v for k, v in r.items() if k != "param"} == {k: v for k, v in rows[0].items() if k != "param"}
               for r in rows)


def test_family_crossing_fiber_zero():
    # A' = s * ((0, 2), (-2, 0)); det A' = 4 s^2 meets det A = 1 at s = 1/2; det(A - A') = 1 + 4 s^2.
    obj = {
        "param": "s",
        "rho": {"gamma1": [1, 0, 0], "gamma2": [0, 1, 0]},
        "rho_prime": {"gamma1": ["0", "-2s", "0"], "gamma2": ["2s", "0", "0"]},
    }
    fam = family_from_json(obj)
    rows = family_table(fam, sample_values(0, 1, 5))
    assert [r["proper"] for r in rows] == [True, True, False, True, True]
    assert rows[2]["param"] == Fraction(1, 2) and rows[2]["fiber_value"] == 0
    assert rows[1]["component"] == (1, 1) and rows[3]["component"] == (1, -1)
    assert crossings(fam, 0, 1) == {"cond_a": [], "cond_b": [Fraction(1, 2)]}


def test_irrational_crossing_reported_as_float():
    obj = {
        "param": "s",
        "rho": {"gamma1": [1, 0, 0], "gamma2": [0, 1, 0]},
        "rho_prime": {"gamma1": ["0", "-2s", "0"], "gamma2": ["s", "0", "0"]},
    }
    roots = crossings(family_from_json(obj), 0, 2)["cond_b"]
    assert len(roots) == 1 and isinstance(roots[0], float)
    assert roots[0] == pytest.approx(2 ** -0.5, abs=1e-12)


def test_float_family():
    obj = {"rho": {"gamma1": [2.0, "c", 0.0], "gamma2": [1.0, 2.0, 0.0]},
           "rho_prime": {"gamma1": [1.0, "c", 0.0], "gamma2": [0.0, 1.0, 0.0]}}
    fam = family_from_json(obj)
    assert not fam.exact
    rows = family_table(fam, sample_values(0, 1, 3, exact=False))
    assert [r["fiber_length"] for r in rows] == pytest.approx([3.0, 2.5, 2.0])


def test_bad_family_inputs():
    with pytest.raises(FamilyError):
        family_from_json({"rho": {}})
    with pytest.raises(FamilyError):
        family_from_json({"rho": {"gamma1": ["c*c", 0, 0], "gamma2": [0, 1, 0]},
                          "rho_prime": {"gamma1": [0, 0, 0], "gamma2": [0, 0, 0]}})
    with pytest.raises(FamilyError):
        sample_values(0, 1, 0)

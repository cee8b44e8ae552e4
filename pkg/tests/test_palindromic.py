import json

import pytest

from ucelab.errors import NotPalindromic, OddDegree
from ucelab.exact import A, ONE, ZERO, ParamPoly
from ucelab.palindromic import is_palindromic, observed_dimension, symmetry_report
from ucelab.superelliptic import curve_new, palindromic_family, quadratic, quartic


def test_is_palindromic():
    assert is_palindromic([1, -2 * A, 1])
    assert is_palindromic([1, 0, -2 * A, 0, 1])
    # 1 - (1 + k^2) x^2 + k^2 x^4 at k = 2
    assert not is_palindromic([1, 0, -5, 0, 4])
    assert not is_palindromic([3, -2 * A, 1])
    assert is_palindromic([ParamPoly([1])])


def test_preconditions():
    with pytest.raises(NotPalindromic):
        symmetry_report(curve_new([3, -2 * A, 1]))
    with pytest.raises(OddDegree):
        symmetry_report(curve_new([1, ZERO, ZERO, ONE]))


def chains(report):
    return {(c["generator"], c["direction"], c["stride"]) for c in report.legendre_chains}


def test_quadratic_report():
    rep = symmetry_report(quadratic())
    assert ("omega2", "positive", 1) in chains(rep)
    assert ("omega1", "negative", 1) in chains(rep)
    assert rep.multi_component_generators == []
    assert rep.coefficient_symmetry and rep.mirror_law
    assert rep.mirror_center == -1
    # P has an odd coefficient, so sectors are not split by parity
    assert not rep.parity_separated
    assert rep.dimension_formula == rep.dimension_observed == 3


def test_quartic_report():
    rep = symmetry_report(quartic())
    assert ("omega3", "positive", 2) in chains(rep)
    assert rep.multi_component_generators == ["omega2", "omega4"]
    assert rep.parity_separated and rep.coefficient_symmetry and rep.mirror_law
    assert set(rep.relation_tables) == {"even", "odd"}
    assert rep.dimension_formula == rep.dimension_observed == 5


def test_degree_six_report_is_well_formed():
    rep = symmetry_report(palindromic_family(6))
    doc = json.loads(json.dumps(rep.to_dict()))
    assert doc["degree"] == 6
    assert set(doc["verdicts"]) == {
        "parity_separated", "coefficient_symmetry", "mirror_law", "legendre_chains", "multi_component_generators",
    }
    assert doc["dimension"] == {"formula": 7, "observed": 7}
    assert doc["notes"]
    for rows in doc["relation_tables"].values():
        for row in rows:
            assert isinstance(row["r"], int)
            for term in row["terms"]:
                assert isinstance(term["coeff"], str) and "." not in term["coeff"]


@pytest.mark.parametrize("degree", [2, 4, 6, 8])
def test_observed_dimension(degree):
    assert observed_dimension(palindromic_family(degree)) == 1 + degree

from fractions import Fraction

import pytest

from dkh import (BigradedAbelianGroup, NotAKnot, S2Mismatch, dkh, fixture, parse_gauss_code)
from dkh.obstructions import (classicality_test, concordance_obstruction, genus_lower_bound,
                              link_to_knot_bound, peel, report, slice_obstruction,
                              unknot_connect_sum_condition)


def test_peel_recovers_g():
    g = BigradedAbelianGroup({(0, 1): (1, ()), (1, 3): (0, (4,))})
    # h = G + G{-1}
    h = BigradedAbelianGroup({(0, 1): (1, ()), (0, 0): (1, ()),
                              (1, 3): (0, (4,)), (1, 2): (0, (4,))})
    res = peel(h)
    assert res.failure is None
    assert res.free == {(0, 1): 1}
    assert res.torsion == {4: {(1, 3): 1}}
    assert g.groups[(0, 1)] == (1, ())


def test_peel_splits_torsion_by_prime_power():
    h = BigradedAbelianGroup({(0, 0): (0, (6,)), (0, -1): (0, (2, 3))})
    assert peel(h).failure is None


def test_peel_failure_on_virtual_hopf():
    v = classicality_test(dkh(fixture("VH")))
    assert v.status == "yes"
    assert v.evidence["peel_failure"] is not None


@pytest.mark.parametrize("name", ["TRP", "TRN", "HOPF", "U0"])
def test_classical_links_are_inconclusive(name):
    v = classicality_test(dkh(fixture(name)))
    assert v.status == "inconclusive"
    assert v.evidence["witness"]


def test_k21_report():
    rep = report(fixture("K21")).to_json()
    assert rep["verdicts"] == {"non_classical": "yes", "unknot_connect_sum_condition": "fails",
                               "slice": "obstructed", "concordance": "obstructed"}
    assert rep["evidence"]["s1"] == -5 and rep["evidence"]["s2"] == -2
    assert rep["evidence"]["J"] == -2
    assert rep["evidence"]["peel_failure"] == [-1, -6]
    assert rep["theorems"]


def test_link_report_skips_knot_checks():
    rep = report(fixture("VH"))
    assert set(rep.verdicts) == {"non_classical"}


def test_unknot_condition():
    assert unknot_connect_sum_condition(fixture("KISH")).status == "holds"
    assert unknot_connect_sum_condition(fixture("TRP")).status == "fails"


def test_slice():
    assert slice_obstruction(fixture("U0")).status == "inconclusive"
    v = slice_obstruction(fixture("TRP"))
    assert v.status == "obstructed" and "s1" in v.reason
    v = slice_obstruction(fixture("K21"))
    assert v.status == "obstructed" and "s2" in v.reason
    with pytest.raises(NotAKnot):
        slice_obstruction(fixture("HOPF"))


def test_concordance():
    v = concordance_obstruction(fixture("K21"), fixture("U0"))
    assert v.status == "obstructed" and "J differs" in v.reason
    assert v.evidence["not_concordant_to_classical"] == [True, False]
    v = concordance_obstruction(fixture("TRP"), fixture("U0"))
    assert v.status == "obstructed" and "s1 differs" in v.reason
    assert concordance_obstruction(fixture("KISH"), fixture("U0")).status == "inconclusive"


def test_genus_bound():
    b = genus_lower_bound(fixture("TRP"), fixture("U0"))
    assert b.value == Fraction(1) and b.caveat
    assert b.to_json()["genus_lower_bound"] == "1"
    with pytest.raises(S2Mismatch):
        genus_lower_bound(fixture("K21"), fixture("U0"))


def test_link_to_knot():
    v = link_to_knot_bound(fixture("VH"), fixture("U0"))
    assert v.status == "obstructed" and v.evidence["M"] is None
    v = link_to_knot_bound(parse_gauss_code("() / ()"), fixture("U0"))
    assert v.status == "inconclusive" and v.evidence["M"] == 2
    v = link_to_knot_bound(fixture("L9261V"), fixture("U0"))
    assert v.status == "obstructed"


def test_verdict_json():
    d = slice_obstruction(fixture("K21")).to_json()
    assert set(d) == {"status", "reason", "theorems", "evidence"}

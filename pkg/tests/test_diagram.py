import pytest

from dkh import (BadArc, GaussSyntaxError, NotAKnot, SignMismatch, UnknownCrossing,
                 UnmatchedCrossing, VirtualLinkDiagram, connect_sum, crossing_parity,
                 degenerate_circles, disjoint_union, flank, gauss_diagram, mirror,
                 odd_writhe, parse_gauss_code, reverse_component, serialize, virtualize)


@pytest.mark.parametrize("code", [
    "", "()", "() / ()", "O1+ / U1+", "O1- O2- U1- U2-",
    "O1+ U2+ O3+ U1+ O2+ U3+", "O1+ U2+ / U1+ O2+",
])
def test_parse_serialize_roundtrip(code):
    d = parse_gauss_code(code)
    assert parse_gauss_code(serialize(d)) == d


def test_unknot_spellings_agree():
    assert parse_gauss_code("") == parse_gauss_code("()")
    assert parse_gauss_code("").n_components == 1
    assert parse_gauss_code("() / ()").n_components == 2


def test_counts():
    d = parse_gauss_code("O1- O2- U1- U2-")
    assert (d.n_crossings, d.n_plus, d.n_minus) == (2, 0, 2)
    assert d.is_knot()
    assert not parse_gauss_code("O1+ / U1+").is_knot()


@pytest.mark.parametrize("code, err", [
    ("O1+ X2+", GaussSyntaxError),
    ("O1 U1", GaussSyntaxError),
    ("O1+ O1+", UnmatchedCrossing),
    ("O1+", UnmatchedCrossing),
    ("O1+ U1-", SignMismatch),
])
def test_parse_errors(code, err):
    with pytest.raises(err):
        parse_gauss_code(code)


def test_mirror_is_involution_and_flips_writhe():
    d = parse_gauss_code("O1- O2- U1- U2-")
    assert mirror(mirror(d)) == d
    assert odd_writhe(mirror(d)) == -odd_writhe(d) == 2


def test_parity_and_odd_writhe():
    k21 = parse_gauss_code("O1- O2- U1- U2-")
    assert crossing_parity(k21) == {1: "odd", 2: "odd"}
    trefoil = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
    assert set(crossing_parity(trefoil).values()) == {"even"}
    assert odd_writhe(trefoil) == 0
    with pytest.raises(NotAKnot):
        odd_writhe(parse_gauss_code("O1+ / U1+"))


def test_degenerate_circles():
    assert degenerate_circles(gauss_diagram(parse_gauss_code("O1+ / U1+"))) == {0, 1}
    assert degenerate_circles(gauss_diagram(parse_gauss_code("O1+ U2+ / U1+ O2+"))) == set()


def test_disjoint_union_relabels():
    a = parse_gauss_code("O1+ / U1+")
    u = disjoint_union(a, a)
    assert u.n_components == 4 and u.n_crossings == 2


def test_connect_sum():
    a = parse_gauss_code("O1- O2- U1- U2-")
    s = connect_sum(a, 1, a, 0)
    assert s.n_crossings == 4 and s.is_knot()
    assert odd_writhe(s) == -4
    with pytest.raises(NotAKnot):
        connect_sum(a, 0, parse_gauss_code("O1+ / U1+"), 0)
    with pytest.raises(BadArc):
        connect_sum(a, 9, a, 0)


def test_flank_swaps_over_under_only():
    d = parse_gauss_code("O1- O2- U1- U2-")
    f = flank(d, 1)
    assert serialize(f) == "U1- O2- O1- U2-"
    assert f.signs == d.signs
    with pytest.raises(UnknownCrossing):
        flank(d, 7)


def test_virtualize_drops_tokens():
    d = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+")
    assert virtualize(d, [2]).crossings == (1, 3)


def test_reverse_component_changes_mixed_signs():
    d = parse_gauss_code("O1+ U2+ / U1+ O2+")
    r = reverse_component(d, 1)
    assert set(r.signs.values()) == {-1}
    assert reverse_component(reverse_component(d, 0), 0) == d


def test_from_components_with_empty():
    d = VirtualLinkDiagram.from_components([[], []])
    assert d.n_components == 2 and d.n_crossings == 0

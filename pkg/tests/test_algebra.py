from fractions import Fraction

import pytest

from dkh import (LEE, MERGE, SINGLE, SPLIT, STANDARD, AlgebraElement, ArityMismatch,
                 CycleNotFree, DoubledGenerator, EdgeData, VariantMismatch, apply_edge_map,
                 birth_map, death_map, edge_terms, from_red_green, gen, p_degree, to_red_green)

MERGE_ED = EdgeData(MERGE, (0, 1), (0,), (), 1)
SPLIT_ED = EdgeData(SPLIT, (0,), (0, 1), (), 2)
SINGLE_ED = EdgeData(SINGLE, (0,), (0,), (), 1)


def el(labels, tag="u", coef=1):
    return AlgebraElement.of(gen(labels, tag), coef)


def test_generator_string():
    assert str(gen("+-", "l")) == "v^l_{+-}"


@pytest.mark.parametrize("variant, x, want", [
    (STANDARD, "++", [("+", 1)]),
    (STANDARD, "+-", [("-", 1)]),
    (STANDARD, "--", []),
    (LEE, "--", [("+", 1)]),
])
def test_merge(variant, x, want):
    got = apply_edge_map(MERGE, variant, el(x), MERGE_ED)
    assert got == AlgebraElement([(gen(l), c) for l, c in want])


def test_split():
    got = apply_edge_map(SPLIT, STANDARD, el("-"), SPLIT_ED)
    assert got == el("--")
    got = apply_edge_map(SPLIT, LEE, el("-"), SPLIT_ED)
    assert got == el("--") + el("++")
    got = apply_edge_map(SPLIT, LEE, el("+"), SPLIT_ED)
    assert got == el("+-") + el("-+")


def test_eta():
    assert apply_edge_map(SINGLE, STANDARD, el("+"), SINGLE_ED) == el("+", "l")
    assert apply_edge_map(SINGLE, STANDARD, el("+", "l"), SINGLE_ED) == el("-", "u", 2)
    assert not apply_edge_map(SINGLE, STANDARD, el("-", "l"), SINGLE_ED)
    assert apply_edge_map(SINGLE, LEE, el("-", "l"), SINGLE_ED) == el("+", "u", 2)


def test_edge_maps_have_degree_minus_one_in_p():
    # p drops by one along every edge; the height shift restores j
    for kind, ed, n in [(MERGE, MERGE_ED, 2), (SPLIT, SPLIT_ED, 1), (SINGLE, SINGLE_ED, 1)]:
        for bits in range(1 << n):
            labels = tuple((bits >> k) & 1 for k in range(n))
            for tag in (0, 1):
                for _, new, ntag in edge_terms(kind, STANDARD, labels, tag, ed):
                    assert p_degree(new, ntag) == p_degree(labels, tag) - 1


def test_arity_and_variant_errors():
    with pytest.raises(ArityMismatch):
        apply_edge_map(MERGE, STANDARD, el("+"), MERGE_ED)
    with pytest.raises(VariantMismatch):
        apply_edge_map(MERGE, "odd", el("++"), MERGE_ED)


def test_red_green_roundtrip():
    x = el("+-", "l", 3) + el("--")
    y = to_red_green(x)
    assert y.basis == "rg"
    assert from_red_green(y) == x


def test_birth_death():
    x = el("-")
    assert birth_map(x, 0) == el("+-")
    assert death_map(el("-+"), 0) == el("+")
    assert not death_map(el("+-"), 0)
    with pytest.raises(CycleNotFree):
        death_map(x, 0, free=False)


def test_death_after_birth_is_zero():
    # eps(v+) = 0 kills the unit, in both bases
    x = el("-", "l")
    assert not death_map(birth_map(x, 1), 1)
    r = to_red_green(x)
    assert not death_map(birth_map(r, 1), 1)


def test_counit_in_red_green_basis():
    r = AlgebraElement.of(DoubledGenerator((0,), 0), 1, basis="rg")
    g = AlgebraElement.of(DoubledGenerator((1,), 0), 1, basis="rg")
    one = DoubledGenerator((), 0)
    assert death_map(r, 0).terms == {one: Fraction(1, 2)}
    assert death_map(g, 0).terms == {one: Fraction(-1, 2)}

import random

import pytest

from dkh import (BadArc, BadMove, DeathOnKnottedComponent, MultiComponentSaddle, acs_count,
                 disjoint_union, fixture, parse_gauss_code, serialize)
from dkh.cobordism import (Birth, CobordismPresentation, Death, Saddle, VirtualMove, apply_move,
                           chain_map_of_move, compose, induced_map_on_lee, parse_arc,
                           parse_presentation, saddle_kills_acs, shared_degrees)
from dkh.complex import is_admissible
from dkh.sampling import random_admissible

U0 = parse_gauss_code("")


def test_parse_arc():
    assert parse_arc("2:5") == (2, 5)
    with pytest.raises(BadArc):
        parse_arc("2-5")


def test_birth_and_death_moves():
    d = apply_move(U0, Birth())
    assert d.n_components == 2
    assert apply_move(d, Death(1)).n_components == 1
    with pytest.raises(DeathOnKnottedComponent):
        apply_move(fixture("K21"), Death(0))


def test_merge_and_split_saddles():
    two = parse_gauss_code("O1+ / U1+")
    merged = apply_move(two, Saddle((0, 0), (1, 0)))
    assert merged.n_components == 1 and merged.n_crossings == 1
    k = fixture("K21")
    split = apply_move(k, Saddle((0, 0), (0, 2)))
    assert split.n_components == 2
    assert sorted(len(c) for c in split.components) == [2, 2]


def test_self_saddle_on_empty_component():
    d = apply_move(U0, Saddle((0, 0), (0, 0)))
    assert d.n_components == 2 and d.n_crossings == 0


def test_virtual_move_only_reorders():
    k = fixture("K21")
    rotated = parse_gauss_code("O2- U1- U2- O1-")
    assert apply_move(k, VirtualMove(rotated)) == rotated
    with pytest.raises(BadMove):
        apply_move(k, VirtualMove(fixture("TRP")))


def test_chain_maps_commute(rng):
    done = 0
    while done < 40:
        d = random_admissible(rng, rng.randint(0, 3), rng.randint(1, 2), empty_ok=True)
        k = rng.randrange(d.n_components)
        n = max(len(d.components[k]), 1)
        m = rng.choice([Birth(), Saddle((k, rng.randrange(n)), (rng.randrange(d.n_components), 0))])
        try:
            after = apply_move(d, m)
        except (BadArc, BadMove):
            continue
        if not is_admissible(after):
            continue
        phi = chain_map_of_move(d, m)
        assert phi.commutes()
        done += 1


def test_death_after_birth_is_zero_at_chain_level():
    first = chain_map_of_move(U0, Birth())
    second = chain_map_of_move(apply_move(U0, Birth()), Death(1))
    assert compose(second, first).is_zero()


def test_birth_then_merge_is_identity():
    p = CobordismPresentation(U0, [Birth(), Saddle((0, 0), (1, 0))])
    m = induced_map_on_lee(p)
    assert m.matrix == [[int(r == c) for c in range(4)] for r in range(4)]
    assert p.euler_characteristic() == 0 and p.genus() == 0


def test_split_then_death_is_identity():
    p = CobordismPresentation(U0, [Saddle((0, 0), (0, 0)), Death(1)])
    m = induced_map_on_lee(p)
    assert m.matrix == [[int(r == c) for c in range(4)] for r in range(4)]


def test_saddle_kills_acs():
    k = fixture("K21")
    assert saddle_kills_acs(k, Saddle((0, 0), (0, 1)))
    assert acs_count(apply_move(k, Saddle((0, 0), (0, 1)))) == 0
    assert not saddle_kills_acs(k, Saddle((0, 0), (0, 2)))
    with pytest.raises(MultiComponentSaddle):
        saddle_kills_acs(fixture("HOPF"), Saddle((0, 0), (1, 0)))
    with pytest.raises(ValueError):
        # both circles carry an odd number of chord ends: nothing to kill
        saddle_kills_acs(parse_gauss_code("O1+ O2+ U2+ / U1+"), Saddle((0, 0), (0, 1)))


def test_killing_saddle_gives_zero_map():
    p = CobordismPresentation(fixture("K21"), [Saddle((0, 0), (0, 1))])
    assert not induced_map_on_lee(p).nonzero


def test_parse_presentation_and_counts():
    text = """
    # comment
    start: O1- O2- U1- U2-
    birth
    saddle 0:0 1:0
    vmove O2- U1- U2- O1-
    """
    p = parse_presentation(text)
    assert p.counts() == {"births": 1, "deaths": 0, "saddles": 1}
    assert serialize(p.end) == "O2- U1- U2- O1-"
    assert p.filtration_budget() == 0
    with pytest.raises(BadMove):
        parse_presentation("birth")
    with pytest.raises(BadMove):
        parse_presentation("start: \nfly away")


def test_two_component_configuration_vanishes():
    hopf = parse_gauss_code("O1- U2- / U1- O2-")
    start = disjoint_union(hopf, fixture("K21"))
    p = CobordismPresentation(start, [Saddle((2, 0), (2, 2)), Saddle((2, 0), (3, 1))])
    assert shared_degrees(p) == {-2}
    m = induced_map_on_lee(p)
    assert not m.nonzero
    assert m.to_json()["shared_degrees"] == [-2]


def test_virtual_hopf_merge_gives_one_crossing_knot():
    d = apply_move(fixture("VH"), Saddle((0, 0), (1, 0)))
    assert d.is_knot() and d.n_crossings == 1
    with pytest.raises(BadMove):
        apply_move(fixture("VH"), Saddle((0, 0), (0, 0)))

import random

import pytest

from dkh import (FIXTURES, MERGE, SINGLE, SPLIT, acs_count, classify_edge, cube,
                 enumerate_alternately_coloured, enumerate_alternately_coloured_bruteforce,
                 fixture, height, parse_gauss_code, resolve)
from dkh.complex import is_admissible
from dkh.sampling import random_diagram
from dkh.smoothing import disjoint_single_cycle_faces, edge_sign


def test_k21_states():
    d = fixture("K21")
    assert resolve(d, (0, 0)).n_cycles == 2
    assert classify_edge(d, (0, 0), 1) == MERGE
    assert classify_edge(d, (0, 1), 1) == SINGLE


def test_trefoil_states():
    d = fixture("TRP")
    s = resolve(d, (0, 0, 0))
    assert s.n_cycles == 2          # Seifert circles of the trefoil
    assert height(s, d) == 0
    assert resolve(d, (1, 1, 1)).n_cycles == 3
    assert classify_edge(d, (0, 0, 0), 2) == MERGE
    assert classify_edge(d, (1, 1, 0), 3) == SPLIT


def test_every_end_in_exactly_one_cycle():
    d = fixture("KISH")
    cb = cube(d)
    for w in range(1 << cb.n):
        s = cb.state(w)
        ends = [e for c in s.cycles for e in c]
        assert len(ends) == len(set(ends)) == len(s.end_cycle)


def test_edge_sign():
    assert edge_sign((0, 0, 0), 2) == 1
    assert edge_sign((1, 0, 0), 2) == -1
    assert edge_sign((1, 0, 1, 0), 3) == 1
    with pytest.raises(ValueError):
        edge_sign((1, 1), 1)


@pytest.mark.parametrize("name", list(FIXTURES))
def test_colouring_enumeration_matches_bruteforce(name):
    d = fixture(name)
    fast = enumerate_alternately_coloured(d)
    slow = enumerate_alternately_coloured_bruteforce(d)
    key = lambda pairs: sorted((s.word, tuple(sorted(c.items()))) for s, c in pairs)
    assert key(fast) == key(slow)
    assert len(fast) == acs_count(d)


def test_acs_count_values():
    assert acs_count(fixture("U0")) == 2
    assert acs_count(fixture("VH")) == 0
    assert acs_count(fixture("HOPF")) == 4
    assert acs_count(parse_gauss_code("() / () / ()")) == 8


def test_colouring_random(rng):
    for _ in range(40):
        d = random_diagram(rng, rng.randint(1, 4), rng.choice((1, 2)))
        assert len(enumerate_alternately_coloured_bruteforce(d)) == acs_count(d)


def test_face_detector_finds_bad_faces():
    rng = random.Random(3)
    hits = 0
    for _ in range(300):
        d = random_diagram(rng, 5)
        faces = disjoint_single_cycle_faces(d, limit=1)
        assert bool(faces) == (not is_admissible(d))
        hits += bool(faces)
    assert hits > 0

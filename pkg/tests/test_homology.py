import json

import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from dkh import (BigradedAbelianGroup, Laurent, NotAChainComplex, NotAKnot, bracket_oracle,
                 build_complex, dkh, euler_characteristic, fixture, is_leftmost, jones,
                 lee_summary, mirror, parse_gauss_code, rasmussen, rasmussen_leftmost,
                 reduced_dkh)
from dkh.homology import chain_euler_characteristic
from dkh.classical import classical_rasmussen
from dkh.sampling import random_admissible, random_diagram
from dkh.complex import is_admissible


def oracle_homology(d):
    """Bigraded homology from dense boundary blocks and sympy's Smith form."""
    c = build_complex(d)
    index = {i: {} for i in c.degrees}
    for i in c.degrees:
        for n, j in enumerate(c.jgrades[i]):
            index[i].setdefault(j, []).append(n)

    def block(i, j):
        cols, rows = index.get(i, {}).get(j, []), index.get(i + 1, {}).get(j, [])
        if not cols or not rows:
            return []
        mat = c.d.get(i, {})
        m = Matrix([[mat.get((r, k), 0) for k in cols] for r in rows])
        snf = smith_normal_form(m, domain=ZZ)
        return [abs(int(snf[k, k])) for k in range(min(snf.shape)) if snf[k, k] != 0]

    out = {}
    for i in c.degrees:
        for j, gens in index[i].items():
            f_out, f_in = block(i, j), block(i - 1, j)
            free = len(gens) - len(f_out) - len(f_in)
            tors = tuple(sorted(x for x in f_in if x > 1))
            if free or tors:
                out[(i, j)] = (free, tors)
    return BigradedAbelianGroup(out)


@pytest.mark.parametrize("name", ["U0", "VH", "K21", "TRP", "HOPF", "KISH", "K37"])
def test_dkh_against_sympy_oracle(name):
    assert dkh(fixture(name)) == oracle_homology(fixture(name))


def test_dkh_random_against_sympy_oracle(rng):
    for _ in range(12):
        d = random_admissible(rng, rng.randint(1, 5), rng.choice((1, 2)))
        assert dkh(d) == oracle_homology(d)


def test_k21_grid():
    h = dkh(fixture("K21"))
    assert h.groups == {(-2, -7): (1, ()), (-2, -6): (1, ()), (-2, -5): (1, ()),
                        (-2, -4): (1, ()), (-1, -5): (1, ()), (0, -1): (1, ()),
                        (0, -3): (0, (2,))}


def test_unknot_and_rational():
    h = dkh(fixture("U0"))
    assert h.groups == {(0, 1): (1, ()), (0, 0): (1, ()), (0, -1): (1, ()), (0, -2): (1, ())}
    q = dkh(fixture("K21"), ring="Q")
    assert q.total_rank() == dkh(fixture("K21")).total_rank()
    assert all(not t for _, t in q.groups.values())


def test_kishino_and_flanked_unknot_look_trivial():
    u = dkh(fixture("U0"))
    assert dkh(fixture("KISH")) == u
    assert dkh(fixture("K37")) == u


def test_json_roundtrip():
    h = dkh(fixture("TRP"))
    data = json.loads(json.dumps(h.to_json()))
    assert data["invariant"] == "dkh"
    assert BigradedAbelianGroup.from_json(data) == h


def test_table_and_empty():
    assert BigradedAbelianGroup().table() == "0"
    assert "Z/2" in dkh(fixture("VH")).table()


def test_inadmissible_raises(rng):
    while True:
        d = random_diagram(rng, 5)
        if not is_admissible(d):
            break
    for f in (dkh, reduced_dkh, lee_summary):
        with pytest.raises(NotAChainComplex):
            f(d)


# ------------------------------------------------------------- Jones

def test_jones_values():
    assert jones(fixture("U0")) == Laurent({1: 1, -1: 1})
    # the trefoil in this normalisation
    assert jones(fixture("TRP")) == Laurent({1: 1, 3: 1, 5: 1, 9: -1})
    assert jones(fixture("K21")) == Laurent({-1: 1, -2: -1, -3: 1, -6: 1})


def test_jones_matches_bracket_and_homology(rng):
    for _ in range(15):
        d = random_admissible(rng, rng.randint(1, 6), rng.choice((1, 2)))
        v = jones(d)
        assert v == bracket_oracle(d)
        assert v * Laurent({0: 1, -1: 1}) == euler_characteristic(dkh(d))


def test_jones_on_inadmissible_uses_chain_level(rng):
    while True:
        d = random_diagram(rng, 5)
        if not is_admissible(d):
            break
    c = build_complex(d)
    assert jones(d) * Laurent({0: 1, -1: 1}) == chain_euler_characteristic(c)
    assert jones(d) == bracket_oracle(d)


def test_reduced_euler_identity_on_knots():
    for name in ("K21", "TRP", "KISH"):
        d = fixture(name)
        assert euler_characteristic(dkh(d)) == (
            Laurent({0: 1, 2: 1}) * euler_characteristic(reduced_dkh(d)))


def test_reduced_basepoint_independence_for_trefoil():
    d = fixture("TRP")
    assert reduced_dkh(d, [0]) == reduced_dkh(d, [3])


# -------------------------------------------------------------- Lee

def test_lee_hopf():
    lee = lee_summary(fixture("HOPF"))
    assert lee.support() == [0, 2]
    assert lee.ranks[0] == lee.ranks[2] == 4
    assert sorted(lee.levels[0]) == [-1, 0, 1, 2]


def test_lee_virtual_hopf_vanishes():
    assert lee_summary(fixture("VH")).total_rank == 0


# -------------------------------------------------------- Rasmussen

@pytest.mark.parametrize("name, want", [("U0", (0, 0)), ("K21", (-5, -2)), ("TRP", (2, 0)),
                                        ("TRN", (-2, 0)), ("KISH", (0, 0)), ("K37", (0, 0))])
def test_rasmussen_values(name, want):
    r = rasmussen(fixture(name))
    assert (r.s1, r.s2) == want
    assert r.to_json() == {"invariant": "rasmussen", "s1": want[0], "s2": want[1]}


def test_classical_oracle_agrees_on_classical_knots():
    for code in ("O1+ U2+ O3+ U1+ O2+ U3+", "O1- U2+ O3- U4+ O2+ U1- O4+ U3-"):
        d = parse_gauss_code(code)
        assert rasmussen(d, fast=False).s1 == classical_rasmussen(d)


def test_rasmussen_mirror_and_fast_path(rng):
    for _ in range(15):
        d = random_admissible(rng, rng.randint(1, 5))
        r = rasmussen(d, fast=False)
        m = rasmussen(mirror(d), fast=False)
        assert (m.s1, m.s2) == (-r.s1, -r.s2)
        if is_leftmost(d):
            f = rasmussen_leftmost(d)
            assert (f.s1, f.s2) == (r.s1, r.s2)


def test_rasmussen_invariant_under_virtual_r2():
    # a two-crossing unknot diagram on which the lower summand sits on top
    d = parse_gauss_code("O1+ O2- U1+ U2-")
    r = rasmussen(d)
    assert (r.s1, r.s2) == (0, 0)
    assert r.sl_max == 1


def test_rasmussen_needs_knot():
    with pytest.raises(NotAKnot):
        rasmussen(fixture("HOPF"))

import pytest

from dkh import (FIXTURES, LEE, STANDARD, NotAChainComplex, ResourceLimit, build_complex,
                 build_reduced, crossing_cap, dump_complex, fixture, is_admissible,
                 parse_gauss_code, require_admissible, split_by_quantum, verify_chain_complex)
from dkh.sampling import random_admissible, random_diagram


@pytest.mark.parametrize("name", list(FIXTURES))
@pytest.mark.parametrize("variant", [STANDARD, LEE])
def test_fixture_complexes(name, variant):
    diag = verify_chain_complex(build_complex(fixture(name), variant))
    assert diag.ok
    assert diag.jumps <= ({0} if variant == STANDARD else {0, 4})


def test_ranks_of_unknot_and_k21():
    c = build_complex(fixture("U0"))
    assert c.ranks() == {0: 4}
    c = build_complex(fixture("K21"))
    # state 00 has two cycles, the other three have one; everything doubled
    assert c.ranks() == {-2: 2 * 4, -1: 2 * (2 + 2), 0: 2 * 2}


def test_admissible_random_complexes(rng):
    for _ in range(30):
        d = random_admissible(rng, rng.randint(1, 6), rng.choice((1, 2)))
        assert verify_chain_complex(build_complex(d, LEE)).ok


def test_inadmissible_diagrams_fail_d_squared(rng):
    # a face with two single-cycle edges on distinct cycles breaks d^2 = 0
    found = 0
    while found < 3:
        d = random_diagram(rng, 5)
        if is_admissible(d):
            continue
        found += 1
        diag = verify_chain_complex(build_complex(d))
        assert not diag.ok and diag.d_squared
        with pytest.raises(NotAChainComplex):
            require_admissible(d)


def test_split_by_quantum_sums_back():
    c = build_complex(fixture("TRP"))
    parts = split_by_quantum(c)
    total = {}
    for piece in parts.values():
        for i, r in piece.ranks().items():
            total[i] = total.get(i, 0) + r
    assert total == {i: r for i, r in c.ranks().items() if r}


def test_reduced_is_half_for_knots():
    for name in ("K21", "TRP", "KISH"):
        full = build_complex(fixture(name))
        sub, quo = build_reduced(fixture(name))
        assert not sub.meta["leaks"]
        assert all(2 * sub.rank(i) == full.rank(i) for i in full.degrees)
        sb, qb = sub.bigraded_ranks(), quo.bigraded_ranks()
        assert all(qb.get((i, j), 0) == sb.get((i, j - 2), 0) for (i, j) in set(qb) | set(sb))


def test_reduced_links_mark_every_component():
    d = parse_gauss_code("() / ()")
    sub, quo = build_reduced(d)
    assert sub.rank(0) == 2 and quo.rank(0) == 6


def test_cap_and_env(monkeypatch):
    d = fixture("T43V")
    with pytest.raises(ResourceLimit):
        build_complex(d, STANDARD, max_crossings=3)
    monkeypatch.setenv("DKH_MAX_CROSSINGS", "2")
    assert crossing_cap(STANDARD) == 2
    assert crossing_cap(STANDARD, 7) == 7
    with pytest.raises(ResourceLimit):
        build_complex(fixture("TRP"))


def test_dump_complex_format():
    text = dump_complex(build_complex(fixture("K21")))
    lines = text.splitlines()
    assert lines[0].startswith("# variant=standard")
    assert any(l.startswith("# basis i=-2 idx=0") for l in lines)
    entries = [l for l in lines if l.startswith("(")]
    assert entries and all(l.endswith(")") for l in entries)


def test_reidemeister_two_unknot_ranks():
    # one 2-cycle state, then a 3-cycle and a 1-cycle state, then a 2-cycle state; doubled
    c = build_complex(parse_gauss_code("O1+ O2- U2- U1+"))
    assert c.ranks() == {-1: 8, 0: 20, 1: 8}

import pytest

from dkh import (DiagramError, FIXTURES, KNOT_FIXTURES, SOURCES, dkh, fixture, flank, parse_gauss_code,
                 serialize, verify_chain_complex, build_complex, virtualize)
from dkh.complex import is_admissible


@pytest.mark.parametrize("name", list(FIXTURES))
def test_fixture_parses_and_is_admissible(name):
    d = fixture(name)
    assert serialize(d) == serialize(parse_gauss_code(FIXTURES[name]))
    assert is_admissible(d)
    assert verify_chain_complex(build_complex(d)).ok


def test_knot_fixtures_are_knots():
    for name in KNOT_FIXTURES:
        assert fixture(name).is_knot()


def test_unknown_fixture():
    with pytest.raises(DiagramError):
        fixture("nope")


@pytest.mark.parametrize("name", ["T43V", "L9261V"])
def test_virtualized_fixtures_rebuild_from_source(name):
    code, ids = SOURCES[name]
    assert virtualize(parse_gauss_code(code), ids) == fixture(name)


def test_k37_rebuilds_by_flanking():
    code, (c,) = SOURCES["K37"]
    assert flank(parse_gauss_code(code), c) == fixture("K37")


def test_flanking_preserves_homology():
    d = fixture("K37")
    for c in d.crossings:
        assert dkh(flank(d, c)) == dkh(d)

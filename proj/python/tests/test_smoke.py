from math import comb

import pytest

import setorbits


@pytest.fixture(scope="module")
def groups():
    return setorbits.load()


def test_orders(groups):
    assert groups.order("M12") == 95040
    assert groups.order("M24") == 244823040
    assert groups.degree("M22.2") == 22
    assert "ASL(5,2)" in groups.names()


def test_small_groups_match_brute_force(groups):
    for name in ["S4", "C5", "D8", "A4", "M11"]:
        assert groups.set_orbits(name) == groups.brute_force_set_orbits(name)


def test_cycle_index(groups):
    ci = groups.cycle_index("S3")
    assert ci == {(1, 1, 1): 1, (2, 1): 3, (3,): 2}
    assert sum(groups.cycle_index("M12").values()) == 95040


def test_multiset_and_wreath(groups):
    assert groups.multiset_orbits("M12", [3, 3, 2, 1, 1, 1, 1]) == 70
    assert groups.set_orbits("M22.2") == 105
    assert groups.wreath_set_orbits(5, "S4") == comb(8, 4)
    assert len(setorbits.partitions(12)) == 77


def test_limit_and_sequence(groups):
    s0 = groups.wreath_set_orbits(49, "M12")
    lo, hi = setorbits.limit_enclosure(s0, k=2, digits=19)
    assert lo.startswith("0.17122") and lo <= hi
    terms = setorbits.sequence(49, 24, s0, 12, 2)
    assert [t[0] for t in terms] == [-1, 0, 1, 2]
    assert terms[0][1] == 49


def test_bad_input(groups):
    with pytest.raises(IndexError):
        groups.order("M99")
    with pytest.raises(ValueError):
        setorbits.partitions(0)
    with pytest.raises(ValueError):
        groups.multiset_orbits("S3", [2, 2])

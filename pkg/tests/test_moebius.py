import pytest

from cyclofield.galois import SplittingType, subgroups_of_index
from cyclofield.gf2poly import INFINITY, Place, parse_poly, places_up_to
from cyclofield.moebius import (
    IDENTITY, MoebiusMap, act_place, certifies, enumerate_maps, find_isomorphism, fingerprint,
)

P = parse_poly
INV = MoebiusMap(0, 1, 1, 0)          # T -> 1/T
INV_SHIFT = MoebiusMap(0, 1, 1, 1)    # T -> 1/(T+1)
SHIFT = MoebiusMap(1, 1, 0, 1)        # T -> T+1


def place(text):
    return INFINITY if text == "inf" else Place(P(text))


def test_enumerate_maps():
    maps = enumerate_maps()
    assert len(maps) == 6 and len(set(maps)) == 6
    assert maps[0] == IDENTITY
    assert INV in maps and INV_SHIFT in maps
    with pytest.raises(ValueError):
        MoebiusMap(1, 1, 1, 1)


def test_group_structure():
    maps = enumerate_maps()
    for s in maps:
        assert s * s.inverse() == IDENTITY == s.inverse() * s
        for t in maps:
            assert s * t in maps
    # S3: not abelian
    assert any(s * t != t * s for s in maps for t in maps)


@pytest.mark.parametrize("sigma, src, dst", [
    (INV, "T^4+T+1", "T^4+T^3+1"),
    (INV, "T^7+T^4+1", "T^7+T^3+1"),
    (INV, "T", "inf"),
    (INV, "inf", "T"),
    (INV_SHIFT, "T^4+T+1", "T^4+T^3+T^2+T+1"),
    (SHIFT, "T^4+T+1", "T^4+T+1"),
    (SHIFT, "T", "T+1"),
    (SHIFT, "inf", "inf"),
])
def test_act_place_examples(sigma, src, dst):
    assert act_place(sigma, place(src)) == place(dst)


def test_action_laws():
    maps = enumerate_maps()
    places = places_up_to(5)
    for p in places:
        assert act_place(IDENTITY, p) == p
    for s in maps:
        for t in maps:
            for p in places:
                assert act_place(s * t, p) == act_place(s, act_place(t, p))


def test_action_is_degree_preserving_bijection():
    for s in enumerate_maps():
        for d in range(1, 8):
            layer = [p for p in places_up_to(d) if p.degree == d]
            image = [act_place(s, p) for p in layer]
            assert all(q.degree == d for q in image)
            assert sorted(image) == layer


def test_fingerprint(ctx5, R):
    fp1 = fingerprint(ctx5, R[1], 7).as_dict()
    fp2 = fingerprint(ctx5, R[2], 7).as_dict()
    assert fp1[place("T^7+T^3+1")] == SplittingType(1, 1, 5)
    assert fp2[place("T^7+T^4+1")] == SplittingType(1, 1, 5)
    fp = fingerprint(ctx5, R[3], 1)
    assert fp.entries[0][0] == INFINITY
    assert [p for p, _ in fingerprint(ctx5, R[1], 7).entries] == places_up_to(7)


def test_find_isomorphism(ctx5, R):
    assert find_isomorphism(ctx5, R[1], R[1], 7) == IDENTITY
    assert find_isomorphism(ctx5, R[1], R[3], 7) is None
    # the only non-trivial map fixing the conductor T^4+T+1 is T -> T+1
    assert find_isomorphism(ctx5, R[1], R[2], 7) == SHIFT
    assert find_isomorphism(ctx5, R[3], R[4], 7) == SHIFT


def test_inverse_map_certifies_reverse(ctx5):
    subs = subgroups_of_index(ctx5, 5)
    for Ua in subs:
        for Ub in subs:
            sigma = find_isomorphism(ctx5, Ua, Ub, 7)
            if sigma is not None:
                assert certifies(ctx5, sigma.inverse(), Ub, Ua, 7)


def test_equal_subgroups_match(ctx5):
    for U in subgroups_of_index(ctx5, 5) + subgroups_of_index(ctx5, 3):
        assert certifies(ctx5, IDENTITY, U, U, 7)


def test_inversion_moves_the_conductor(ctx5, R, M):
    # T -> 1/T cannot certify R1 ~ R2 inside one conductor: it moves M
    fp1 = fingerprint(ctx5, R[1], 7).as_dict()
    fp2 = fingerprint(ctx5, R[2], 7).as_dict()
    assert act_place(INV, Place(M)) == place("T^4+T^3+1")
    assert fp1[Place(M)] == SplittingType(5, 1, 1)
    assert fp2[place("T^4+T^3+1")] == SplittingType(1, 5, 1)
    assert not certifies(ctx5, INV, R[1], R[2], 7)


def test_str():
    assert str(INV) == "T -> (0T+1)/(1T+0)"

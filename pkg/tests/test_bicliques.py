import pytest
from hypothesis import given, settings

from bicover.bicliques import (
    Biclique,
    CoverMultiset,
    all_bicliques,
    enumerate_maximal_bicliques,
    is_biclique,
    is_good_cover,
    is_maximal,
    max_biclique_edges,
    trivial_lower_bound,
    verify_cover,
)
from bicover.graphs import GraphError, SizeGuardExceeded, complete, cycle, empty, hypercube, path, petersen
from conftest import graphs
from oracles import all_biclique_pairs, exhaustive_good, max_biclique_size, maximal_biclique_pairs


def as_pairs(bicliques):
    return {frozenset((frozenset(b.x), frozenset(b.y))) for b in bicliques}


def test_biclique_normalises_and_validates():
    b = Biclique((3, 1), (2,))
    assert b.x == (1, 3) and b.n_edges == 2
    assert Biclique((2,), (1, 3)).canonical() == Biclique((1, 3), (2,))
    with pytest.raises(GraphError):
        Biclique((), (1,))
    with pytest.raises(GraphError):
        Biclique((1, 2), (2,))


def test_is_biclique_examples():
    assert is_biclique(complete(4), {0}, {1, 2, 3})
    assert is_biclique(cycle(5), {0, 2}, {1})
    assert not is_biclique(cycle(5), {0}, {2})
    assert not is_biclique(cycle(5), set(), {1})
    # edges inside a side are allowed
    assert is_biclique(complete(4), {0, 1}, {2, 3})


def test_maximal_bicliques_of_triangle():
    found = enumerate_maximal_bicliques(complete(3))
    assert found == [Biclique((0,), (1, 2)), Biclique((0, 1), (2,)), Biclique((0, 2), (1,))]
    assert as_pairs(found) == {frozenset(p) for p in map(frozenset, maximal_biclique_pairs(complete(3)))}


def test_maximal_bicliques_of_c4():
    assert enumerate_maximal_bicliques(cycle(4)) == [Biclique((0, 2), (1, 3))]


def test_maximal_bicliques_of_q5():
    found = enumerate_maximal_bicliques(hypercube(5))
    shapes = sorted((len(b.x), len(b.y)) for b in found)
    stars = [b for b in found if sorted((len(b.x), len(b.y))) == [1, 5]]
    squares = [b for b in found if (len(b.x), len(b.y)) == (2, 2)]
    assert len(stars) == 32 and len(squares) == 80 and len(shapes) == 112


@settings(max_examples=60)
@given(graphs(max_n=7, min_edges=1))
def test_enumeration_matches_brute_force(G):
    found = enumerate_maximal_bicliques(G)
    assert found == sorted(found) and len(set(found)) == len(found)
    assert all(is_maximal(G, b) and b == b.canonical() for b in found)
    assert as_pairs(found) == {frozenset(p) for p in map(frozenset, maximal_biclique_pairs(G))}
    # every biclique sits inside a listed maximal one
    for X, Y in all_biclique_pairs(G):
        assert any((X <= set(b.x) and Y <= set(b.y)) or (X <= set(b.y) and Y <= set(b.x)) for b in found)


@settings(max_examples=30)
@given(graphs(max_n=6))
def test_all_bicliques_matches_oracle(G):
    assert as_pairs(all_bicliques(G)) == {frozenset(p) for p in map(frozenset, all_biclique_pairs(G))}


def test_enumeration_guard():
    with pytest.raises(SizeGuardExceeded):
        enumerate_maximal_bicliques(empty(33))


@pytest.mark.parametrize("G, B", [(complete(5), 6), (complete(8), 16), (hypercube(5), 5), (cycle(5), 2),
                                  (petersen(), 3), (hypercube(3), 4)])
def test_max_biclique_edges(G, B):
    value, witness = max_biclique_edges(G)
    assert value == B == witness.n_edges
    assert is_biclique(G, witness.x, witness.y)


@settings(max_examples=40)
@given(graphs(max_n=6, min_edges=1))
def test_max_biclique_edges_matches_oracle(G):
    assert max_biclique_edges(G)[0] == max_biclique_size(G)


def test_max_biclique_edges_needs_edges():
    with pytest.raises(GraphError):
        max_biclique_edges(empty(3))
    with pytest.raises(GraphError):
        trivial_lower_bound(empty(3), 1)


def test_verify_cover_c4():
    for d in (1, 2, 3):
        cover = CoverMultiset(((Biclique((0, 2), (1, 3)), d),), d)
        check = verify_cover(cycle(4), cover)
        assert check.ok and set(check.profile.values()) == {d}


def test_verify_cover_detects_gap():
    check = verify_cover(complete(3), CoverMultiset(((Biclique((0,), (1, 2)), 1),), 1))
    assert not check.ok and check.deficient_edges == [(1, 2)]


def test_verify_cover_vacuous_and_invalid():
    assert verify_cover(cycle(5), CoverMultiset((), 0)).ok
    bad = CoverMultiset(((Biclique((0,), (2,)), 1),), 0)
    check = verify_cover(cycle(5), bad)
    assert not check.ok and check.invalid_entries == [0]
    with pytest.raises(GraphError):
        verify_cover(cycle(5), CoverMultiset(((Biclique((0,), (7,)), 1),), 1))


@settings(max_examples=40)
@given(graphs(max_n=6, min_edges=1))
def test_verify_iff_min_coverage(G):
    found = enumerate_maximal_bicliques(G)
    for d in (1, 2):
        cover = CoverMultiset(tuple((b, 1) for b in found[::2]), d)
        check = verify_cover(G, cover)
        assert check.ok == (check.min_coverage >= d)


@pytest.mark.parametrize("G, d, bound", [(hypercube(5), 1, 16), (cycle(5), 1, 3), (complete(4), 2, 3)])
def test_trivial_lower_bound(G, d, bound):
    assert trivial_lower_bound(G, d) == bound


@given(graphs(max_n=6, min_edges=1))
def test_trivial_bound_ceiling_slack(G):
    for d1 in (1, 2, 3):
        for d2 in (1, 2):
            assert trivial_lower_bound(G, d1 + d2) <= trivial_lower_bound(G, d1) + trivial_lower_bound(G, d2) + 1


def star(c, leaves):
    return Biclique((c,), tuple(leaves))


def test_good_cover_c6_all_stars():
    G = cycle(6)
    cover = CoverMultiset(tuple((star(c, ((c - 1) % 6, (c + 1) % 6)), 1) for c in range(6)), 2)
    assert verify_cover(G, cover).ok
    witness = is_good_cover(G, cover)
    assert witness is not None
    assert exhaustive_good(G, cover)


def test_good_cover_c6_alternate_stars():
    G = cycle(6)
    cover = CoverMultiset(tuple((star(c, ((c - 1) % 6, (c + 1) % 6)), 1) for c in (0, 2, 4)), 1)
    assert verify_cover(G, cover).ok
    assert is_good_cover(G, cover) is None
    assert not exhaustive_good(G, cover)


def test_good_cover_single_edge():
    assert is_good_cover(complete(2), CoverMultiset(((Biclique((0,), (1,)), 1),), 1)) is None


def test_good_cover_guard():
    cover = CoverMultiset(((Biclique((0,), (1,)), 25),), 25)
    with pytest.raises(SizeGuardExceeded):
        is_good_cover(complete(2), cover)


@settings(max_examples=40)
@given(graphs(max_n=5, min_edges=1))
def test_good_search_matches_exhaustive(G):
    found = enumerate_maximal_bicliques(G)
    for d in (1, 2):
        cover = CoverMultiset(tuple((b, d) for b in found[:4]), d)
        if cover.size > 12:
            continue
        assert (is_good_cover(G, cover) is not None) == exhaustive_good(G, cover)


def test_cover_multiset_helpers():
    b = Biclique((0,), (1,))
    c = CoverMultiset(((b, 2), (b.swapped(), 1)), 3)
    assert c.size == 3
    assert c.canonical().entries == ((b, 3),)
    assert c.repeated(2).size == 6 and c.repeated(2).d == 6
    assert list(c.copies()) == [b, b, b.swapped()]
    with pytest.raises(GraphError):
        CoverMultiset(((b, 0),), 1)
    assert path(2).m == 1

import random

import pytest
from hypothesis import given, settings, strategies as st

from bicover.bicliques import Biclique, CoverMultiset, is_good_cover, trivial_lower_bound, verify_cover
from bicover.constructions import (
    ConstructionError,
    cover_complete_katona,
    cover_cycle,
    cover_hypercube,
    cover_join,
    cover_lexicographic,
    cover_mycielski,
    cover_stars,
    cycle_formula,
    good_cover_cycle,
    mycielski_lower_extract,
)
from bicover.graphs import (
    Coloring,
    chromatic_number,
    complement,
    complete,
    complete_multipartite,
    cycle,
    empty,
    hypercube,
    join,
    lexicographic_product,
    min_vertex_cover,
    mycielski,
    path,
)
from bicover.optimize import bc_exact
from bicover.reports import random_graph
from conftest import graphs
from oracles import exhaustive_good


def _opt(G, d):
    if G.m == 0:
        return CoverMultiset((), d)
    return bc_exact(G, d).witness


@pytest.mark.parametrize("n, d, size", [(4, 3, 3), (5, 1, 3), (7, 3, 11)])
def test_cover_cycle_examples(n, d, size):
    cover = cover_cycle(n, d)
    assert cover.size == size == cycle_formula(n, d)
    assert verify_cover(cycle(n), cover).ok


@pytest.mark.parametrize("n", range(3, 13))
@pytest.mark.parametrize("d", range(1, 6))
def test_cover_cycle_sweep(n, d):
    cover = cover_cycle(n, d)
    assert cover.d == d and cover.size == cycle_formula(n, d)
    assert verify_cover(cycle(n), cover).ok


def test_cycle_formula_cases():
    assert [cycle_formula(4, d) for d in (1, 2, 5)] == [1, 2, 5]
    assert cycle_formula(8, 3) == 12
    assert cycle_formula(9, 2) == 9
    assert cycle_formula(9, 1) == 5
    with pytest.raises(ConstructionError):
        cycle_formula(2, 1)
    with pytest.raises(ConstructionError):
        cover_cycle(5, 0)


def test_cover_hypercube():
    for d in (1, 2, 3):
        cover = cover_hypercube(5, d)
        assert cover.size == 16 * d == trivial_lower_bound(hypercube(5), d)
        assert verify_cover(hypercube(5), cover).ok
    assert all(len(b.y) == 5 for b, _ in cover_hypercube(5, 1).entries)
    assert cover_hypercube(3, 2).size == 8 and verify_cover(hypercube(3), cover_hypercube(3, 2)).ok
    q1 = cover_hypercube(1, 4)
    assert q1.entries == ((Biclique((0,), (1,)), 4),)


@pytest.mark.parametrize("k", range(1, 7))
@pytest.mark.parametrize("d", (1, 2))
def test_cover_hypercube_sweep(k, d):
    cover = cover_hypercube(k, d)
    assert cover.size == d * 2 ** (k - 1) and verify_cover(hypercube(k), cover).ok


@pytest.mark.parametrize("n", range(2, 18))
def test_katona(n):
    cover = cover_complete_katona(n)
    assert cover.size == (n - 1).bit_length() and verify_cover(complete(n), cover).ok
    if n == 2:
        assert cover.entries == ((Biclique((0,), (1,)), 1),)


def test_lexicographic_examples():
    # K2[K2] = K4
    c = cover_lexicographic(complete(2), _opt(complete(2), 1), complete(2), _opt(complete(2), 1),
                            Coloring((1, 1), 1))
    assert c.size == 2 and verify_cover(complete(4), c).ok
    # K3[empty 2] = K_{2,2,2}
    P, _ = lexicographic_product(complete(3), empty(2))
    c = cover_lexicographic(complete(3), _opt(complete(3), 1), empty(2), CoverMultiset((), 1),
                            Coloring((1, 1, 1), 1))
    assert c.size == 2 and verify_cover(P, c).ok
    # empty(2)[C4] = two disjoint C4s
    P, _ = lexicographic_product(empty(2), cycle(4))
    c = cover_lexicographic(empty(2), CoverMultiset((), 2), cycle(4), cover_cycle(4, 2), Coloring((1, 2), 2))
    assert c.size == 4 and verify_cover(P, c).ok


def test_lexicographic_errors():
    with pytest.raises(ConstructionError):
        cover_lexicographic(complete(2), cover_cycle(5, 1), complete(2), _opt(complete(2), 1),
                            Coloring((1, 1), 1))
    with pytest.raises(ConstructionError):
        cover_lexicographic(complete(2), _opt(complete(2), 1), complete(2), _opt(complete(2), 2),
                            Coloring((1, 1), 1))
    with pytest.raises(ConstructionError):
        # the two vertices of empty(2) are adjacent in its complement
        cover_lexicographic(empty(2), CoverMultiset((), 1), complete(2), _opt(complete(2), 1),
                            Coloring((1, 1), 1))


@settings(max_examples=25)
@given(graphs(min_n=2, max_n=4, min_edges=1), graphs(min_n=1, max_n=3), st.sampled_from((1, 2)))
def test_lexicographic_bound_property(G, H, d):
    cg, ch = _opt(G, d), _opt(H, d)
    chi, coloring = chromatic_number(complement(G))
    P, _ = lexicographic_product(G, H)
    c = cover_lexicographic(G, cg, H, ch, coloring)
    assert verify_cover(P, c).ok
    assert c.size <= cg.size + ch.size * chi


@pytest.mark.parametrize("n", (2, 3, 4))
def test_complete_square_sandwich(n):
    # K_{n^2} = K_n[K_n], and the complement of K_n is 1-colourable
    opt = _opt(complete(n), 1)
    c = cover_lexicographic(complete(n), opt, complete(n), opt, Coloring((1,) * n, 1))
    P, _ = lexicographic_product(complete(n), complete(n))
    assert verify_cover(P, c).ok
    big = bc_exact(complete(n * n), 1).value if n < 3 else (n * n - 1).bit_length()
    assert opt.size <= big <= c.size <= 2 * opt.size


def test_join_examples():
    parts = [empty(2)] * 3
    J, _ = join(parts)
    c = cover_join(parts, [CoverMultiset((), 1)] * 3, cover_complete_katona(3))
    assert c.size == 2 and verify_cover(J, c).ok
    assert J == complete_multipartite([2, 2, 2]).named(J.name)

    k2 = _opt(complete(2), 1)
    J, _ = join([complete(2), complete(2)])
    c = cover_join([complete(2), complete(2)], [k2, k2], cover_complete_katona(2))
    assert c.size == 2 and verify_cover(J, c).ok

    c5 = cover_cycle(5, 1)
    J, _ = join([cycle(5), cycle(5)])
    c = cover_join([cycle(5), cycle(5)], [c5, c5], cover_complete_katona(2))
    assert c.size == 4 and verify_cover(J, c).ok


def test_join_errors():
    with pytest.raises(ConstructionError):
        cover_join([complete(2), complete(2)], [_opt(complete(2), 2)] * 2, cover_complete_katona(2))
    with pytest.raises(ConstructionError):
        cover_join([complete(2)], [], cover_complete_katona(2))


def test_join_random_lists():
    rng = random.Random(7)
    for _ in range(10):
        d = rng.choice((1, 2))
        parts = [random_graph(rng, rng.randint(1, 4), 0.5) for _ in range(rng.randint(2, 4))]
        covers = [_opt(G, d) for G in parts]
        kk = _opt(complete(len(parts)), d)
        J, _ = join(parts)
        c = cover_join(parts, covers, kk)
        assert verify_cover(J, c).ok
        assert c.size <= max(cv.size for cv in covers) + kk.size


def test_mycielski_examples():
    cover, orient = good_cover_cycle(5, 2)
    M, labels = mycielski(cycle(5))
    good = cover_mycielski(cycle(5), cover, orient)
    assert good.size == 10 and verify_cover(M, good).ok

    M, _ = mycielski(complete(2))
    plain = cover_mycielski(complete(2), _opt(complete(2), 1))
    assert plain.size == 3 and verify_cover(M, plain).ok

    M, _ = mycielski(path(4))
    base = _opt(path(4), 1)
    assert base.size == 2
    plain = cover_mycielski(path(4), base)
    assert plain.size == 5 and verify_cover(M, plain).ok


def test_mycielski_rejects_bad_orientation():
    cover = cover_cycle(5, 2)
    with pytest.raises(ConstructionError):
        cover_mycielski(cycle(5), cover, tuple(1 for _ in cover.entries))
    with pytest.raises(ConstructionError):
        cover_mycielski(cycle(5), cover, (0,))


@settings(max_examples=25)
@given(graphs(min_n=2, max_n=5, min_edges=1), st.sampled_from((1, 2)))
def test_mycielski_plain_and_extract_roundtrip(G, d):
    base = _opt(G, d)
    M, labels = mycielski(G)
    plain = cover_mycielski(G, base)
    assert plain.size == 2 * base.size + d and verify_cover(M, plain).ok
    back = mycielski_lower_extract(M, labels, plain)
    assert back.d == 2 * d and back.size <= plain.size and verify_cover(G, back).ok
    orient = is_good_cover(G, base)
    if orient is not None:
        good = cover_mycielski(G, base, orient)
        assert good.size == 2 * base.size and verify_cover(M, good).ok


def test_lower_extract_from_optimal():
    M, labels = mycielski(cycle(5))
    res = bc_exact(M, 2)
    back = mycielski_lower_extract(M, labels, res.witness)
    assert back.d == 4 and back.size <= 10 and verify_cover(cycle(5), back).ok
    assert back.size == cycle_formula(5, 4) == 10

    M, labels = mycielski(complete(2))
    back = mycielski_lower_extract(M, labels, bc_exact(M, 1).witness)
    assert back.d == 2 and back.size <= 3 and verify_cover(complete(2), back).ok


def test_lower_extract_rejects_invalid_cover():
    M, labels = mycielski(cycle(5))
    with pytest.raises(ConstructionError):
        mycielski_lower_extract(M, labels, CoverMultiset((), 1))


@pytest.mark.parametrize("n, d, size", [(6, 2, 6), (5, 2, 5), (5, 4, 10), (7, 2, 7)])
def test_good_cover_cycle(n, d, size):
    cover, orient = good_cover_cycle(n, d)
    assert cover.size == size == cycle_formula(n, d)
    assert verify_cover(cycle(n), cover).ok
    assert is_good_cover(cycle(n), cover) is not None
    assert exhaustive_good(cycle(n), cover)
    with pytest.raises(ConstructionError):
        good_cover_cycle(n, 3)


def test_cover_stars():
    beta, centres = min_vertex_cover(path(5))
    c = cover_stars(path(5), centres, 3)
    assert c.size == 3 * beta and verify_cover(path(5), c).ok
    with pytest.raises(ConstructionError):
        cover_stars(path(5), [0], 1)

"""Explicit d-biclique covers for graph families and graph operations.

Each builder returns a ``CoverMultiset`` whose size meets the matching bound;
callers should still run ``verify_cover`` on anything they keep, and the
builders that take covers as input check their preconditions first.
"""

from __future__ import annotations

from typing import Sequence

from .bicliques import Biclique, CoverMultiset, verify_cover, x_side_counts
from .graphs import ORIGINAL, ROOT, TWIN, Coloring, Graph, GraphError, complement, complete


class ConstructionError(ValueError):
    pass


def cycle_formula(n: int, d: int) -> int:
    """bc_d(C_n) in closed form."""
    if n < 3 or d < 1:
        raise ConstructionError("need n >= 3 and d >= 1")
    if n == 4:
        return d
    if n % 2 == 0:
        return n // 2 * d
    if d % 2 == 0:
        return d // 2 * n
    return (d - 1) // 2 * n + n // 2 + 1


def _star(center: int, leaves: Sequence[int]) -> Biclique:
    return Biclique((center,), tuple(leaves))


def cover_cycle(n: int, d: int) -> CoverMultiset:
    """Minimum d-cover of C_n built from 2-edge stars (one C4 when n = 4)."""
    if n < 3 or d < 1:
        raise ConstructionError("need n >= 3 and d >= 1")
    if n == 4:
        return CoverMultiset(((Biclique((0, 2), (1, 3)), d),), d)
    stars = [_star(c, ((c - 1) % n, (c + 1) % n)) for c in range(n)]
    if n % 2 == 0:
        return CoverMultiset(tuple((stars[c], d) for c in range(0, n, 2)), d)
    if d % 2 == 0:
        return CoverMultiset(tuple((s, d // 2) for s in stars), d)
    # odd cycle, odd depth: one extra layer of stars at 1, 3, ..., n-2 and the edge {n-1, 0}
    entries = []
    for c, s in enumerate(stars):
        m = d // 2 + (1 if c % 2 == 1 and c < n - 1 else 0)
        if m:
            entries.append((s, m))
    entries.append((Biclique((0,), (n - 1,)), 1))
    return CoverMultiset(tuple(entries), d)


def good_cover_cycle(n: int, d: int) -> tuple[CoverMultiset, tuple[int, ...]]:
    """All n stars, each d/2 times, oriented with the leaf pair as X.

    Every vertex is a leaf of exactly two stars, so it shows up d times on
    the X-sides.
    """
    if n < 3:
        raise ConstructionError("need n >= 3")
    if d < 2 or d % 2:
        raise ConstructionError("a good cycle cover needs an even depth")
    entries = tuple((_star(c, ((c - 1) % n, (c + 1) % n)), d // 2) for c in range(n))
    # stored first side is the centre, so no copy uses it as X
    return CoverMultiset(entries, d), tuple(0 for _ in entries)


def cover_hypercube(k: int, d: int) -> CoverMultiset:
    """d copies of the full star at every even-weight vertex of Q_k."""
    if k < 1 or d < 1:
        raise ConstructionError("need k >= 1 and d >= 1")
    entries = []
    for v in range(1 << k):
        if bin(v).count("1") % 2 == 0:
            entries.append((_star(v, [v ^ (1 << i) for i in range(k)]), d))
    return CoverMultiset(tuple(entries), d)


def cover_complete_katona(n: int) -> CoverMultiset:
    """ceil(log2 n) bicliques splitting the vertices by one binary digit each."""
    if n < 2:
        raise ConstructionError("need n >= 2")
    width = (n - 1).bit_length()
    entries = []
    for i in range(width):
        zeros = [v for v in range(n) if not v >> i & 1]
        ones = [v for v in range(n) if v >> i & 1]
        entries.append((Biclique(tuple(zeros), tuple(ones)), 1))
    return CoverMultiset(tuple(entries), 1)


def _require_cover(G: Graph, cover: CoverMultiset, what: str):
    try:
        check = verify_cover(G, cover)
    except GraphError as exc:
        raise ConstructionError(f"{what}: {exc}") from None
    if not check.ok:
        raise ConstructionError(f"{what} is not a valid {cover.d}-cover")


def cover_lexicographic(G: Graph, cover_g: CoverMultiset, H: Graph, cover_h: CoverMultiset,
                        coloring: Coloring) -> CoverMultiset:
    """d-cover of G[H] from d-covers of G and H and a coloring of the complement of G.

    Each biclique (A, B) of G becomes (A x V(H), B x V(H)).  Each biclique
    (A, B) of H is copied once per colour class S as (S x A, S x B); two
    vertices of S are non-adjacent in the complement, hence adjacent in G.
    Vertex (x, y) is numbered x |V(H)| + y.
    """
    if cover_g.d != cover_h.d:
        raise ConstructionError("the two covers need the same depth")
    if not coloring.is_proper(complement(G)):
        raise ConstructionError("coloring is not proper on the complement of G")
    _require_cover(G, cover_g, "cover of G")
    _require_cover(H, cover_h, "cover of H")
    h = H.n

    def lift(xs, ys):
        return tuple(x * h + y for x in xs for y in ys)

    entries = []
    everything = range(h)
    for b, m in cover_g.entries:
        entries.append((Biclique(lift(b.x, everything), lift(b.y, everything)), m))
    for cls in coloring.classes():
        if not cls:
            continue
        for b, m in cover_h.entries:
            entries.append((Biclique(lift(cls, b.x), lift(cls, b.y)), m))
    return CoverMultiset(tuple(entries), cover_g.d)


def cover_join(parts: Sequence[Graph], part_covers: Sequence[CoverMultiset],
               kk_cover: CoverMultiset) -> CoverMultiset:
    """d-cover of the join of ``parts``.

    The j-th copy of every part's cover is merged into one biclique (missing
    copies add nothing), which handles all edges inside parts; each biclique
    (S, T) of K_k then becomes the union of the parts in S against the union
    of the parts in T, handling every cross edge.  Vertex numbering follows
    ``graphs.join``.
    """
    k = len(parts)
    if len(part_covers) != k:
        raise ConstructionError("one cover per part is required")
    d = kk_cover.d
    if any(c.d != d for c in part_covers):
        raise ConstructionError("all covers need the same depth")
    if k >= 2:
        _require_cover(complete(k), kk_cover, "cover of K_k")
    for G, c in zip(parts, part_covers):
        _require_cover(G, c, "part cover")
    offsets = []
    acc = 0
    for G in parts:
        offsets.append(acc)
        acc += G.n
    flat = [list(c.copies()) for c in part_covers]
    longest = max((len(f) for f in flat), default=0)
    merged = []
    for j in range(longest):
        xs, ys = [], []
        for i, copies in enumerate(flat):
            if j < len(copies):
                xs += [offsets[i] + v for v in copies[j].x]
                ys += [offsets[i] + v for v in copies[j].y]
        merged.append(Biclique(tuple(xs), tuple(ys)))
    entries = _runs(merged)
    for b, m in kk_cover.entries:
        xs = [offsets[i] + v for i in b.x for v in range(parts[i].n)]
        ys = [offsets[i] + v for i in b.y for v in range(parts[i].n)]
        if xs and ys:
            entries.append((Biclique(tuple(xs), tuple(ys)), m))
    return CoverMultiset(tuple(entries), d)


def _runs(seq: list[Biclique]) -> list[tuple[Biclique, int]]:
    """Collapse consecutive equal bicliques into (biclique, multiplicity)."""
    out: list[tuple[Biclique, int]] = []
    for b in seq:
        if out and out[-1][0] == b:
            out[-1] = (b, out[-1][1] + 1)
        else:
            out.append((b, 1))
    return out


def cover_mycielski(G: Graph, cover_g: CoverMultiset,
                    orientation: Sequence[int] | None = None) -> CoverMultiset:
    """d-cover of M(G) from a d-cover of G.

    Without an orientation every (X, Y) yields (X + X', Y) and (X, Y + Y'),
    plus d copies of the star at the root: size 2|cover| + d.  With a good
    orientation the root star is folded into the first family, (X', Y + u),
    and the size drops to 2|cover|.  Twins are numbered n + v and the root 2n
    as in ``graphs.mycielski``.
    """
    _require_cover(G, cover_g, "cover of G")
    n = G.n
    d = cover_g.d
    root = 2 * n

    def twins(vs):
        return tuple(n + v for v in vs)

    entries = []
    if orientation is None:
        for b, m in cover_g.entries:
            entries.append((Biclique(b.x + twins(b.x), b.y), m))
            entries.append((Biclique(b.x, b.y + twins(b.y)), m))
        if d:
            entries.append((Biclique((root,), twins(range(n))), d))
        return CoverMultiset(tuple(entries), d)

    if len(orientation) != len(cover_g.entries):
        raise ConstructionError("orientation length does not match the cover")
    counts = x_side_counts(G, cover_g, orientation)
    if any(c < d for c in counts):
        raise ConstructionError("orientation is not good")
    for (b, m), k in zip(cover_g.entries, orientation):
        for X, Y, mult in ((b.x, b.y, k), (b.y, b.x, m - k)):
            if mult:
                entries.append((Biclique(twins(X), Y + (root,)), mult))
                entries.append((Biclique(X, Y + twins(Y)), mult))
    return CoverMultiset(tuple(entries), d)


def mycielski_lower_extract(MG: Graph, labels: Sequence[tuple[str, int]],
                            cover_m: CoverMultiset) -> CoverMultiset:
    """2d-cover of G read off a d-cover of M(G).

    Twins are merged into their originals and the root is dropped; entries
    that lose a whole side disappear.
    """
    _require_cover(MG, cover_m, "cover of M(G)")
    n = sum(1 for role, _ in labels if role == ORIGINAL)

    def project(vs):
        out = set()
        for v in vs:
            role, base = labels[v]
            if role in (ORIGINAL, TWIN):
                out.add(base)
            elif role != ROOT:
                raise ConstructionError(f"unknown vertex role {role!r}")
        return out

    entries = []
    for b, m in cover_m.entries:
        V, W = project(b.x), project(b.y)
        if V & W:
            raise ConstructionError("projected sides overlap; the input cover is not valid")
        if V and W:
            entries.append((Biclique(tuple(V), tuple(W)), m))
    return CoverMultiset(tuple(entries), 2 * cover_m.d)


def cover_stars(G: Graph, centers: Sequence[int], d: int) -> CoverMultiset:
    """d copies of the star at every vertex of a vertex cover.

    A shared edge between two centres is covered twice; that only helps.
    """
    center_set = set(centers)
    if any(u not in center_set and v not in center_set for u, v in G.edges):
        raise ConstructionError("centres do not form a vertex cover")
    entries = [(_star(c, G.neighbors(c)), d) for c in centers if G.degree(c)]
    return CoverMultiset(tuple(entries), d)

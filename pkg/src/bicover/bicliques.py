"""Bicliques, d-biclique covers and the checks around them.

A biclique here is a pair of disjoint nonempty vertex sets with every cross
pair adjacent in the host graph; edges inside either side are allowed.  A
cover is a multiset of bicliques together with its target depth ``d``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .graphs import Graph, GraphError, SizeGuardExceeded, bits, mask_of

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, order=True)
class Biclique:
    """Ordered bipartition ``(x, y)``; both sides are kept sorted."""

    x: tuple[int, ...]
    y: tuple[int, ...]

    def __post_init__(self):
        x, y = tuple(sorted(set(self.x))), tuple(sorted(set(self.y)))
        if not x or not y:
            raise GraphError("biclique sides must be nonempty")
        if set(x) & set(y):
            raise GraphError("biclique sides must be disjoint")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_masks(cls, xmask: int, ymask: int) -> "Biclique":
        return cls(tuple(bits(xmask)), tuple(bits(ymask)))

    @property
    def xmask(self) -> int:
        return mask_of(self.x)

    @property
    def ymask(self) -> int:
        return mask_of(self.y)

    @property
    def n_edges(self) -> int:
        return len(self.x) * len(self.y)

    def swapped(self) -> "Biclique":
        return Biclique(self.y, self.x)

    def canonical(self) -> "Biclique":
        """Orientation with the lexicographically smaller side first."""
        return self if self.x <= self.y else self.swapped()

    def edges(self) -> set[Edge]:
        return {_edge(a, b) for a in self.x for b in self.y}

    def vertices(self) -> set[int]:
        return set(self.x) | set(self.y)

    def __str__(self):
        return "{%s | %s}" % (" ".join(map(str, self.x)), " ".join(map(str, self.y)))


def is_biclique(G: Graph, X: Iterable[int], Y: Iterable[int]) -> bool:
    X, Y = set(X), set(Y)
    if not X or not Y or X & Y:
        return False
    if any(not 0 <= v < G.n for v in X | Y):
        return False
    ymask = mask_of(Y)
    return all(G.adj[x] & ymask == ymask for x in X)


@dataclass(frozen=True)
class CoverMultiset:
    """A multiset of bicliques aimed at covering every edge ``d`` times.

    ``entries`` keeps the order it was built in; ``canonical()`` merges equal
    bicliques and sorts them.
    """

    entries: tuple[tuple[Biclique, int], ...]
    d: int

    def __post_init__(self):
        entries = tuple((b, int(m)) for b, m in self.entries)
        if any(m < 1 for _, m in entries):
            raise GraphError("multiplicities must be at least 1")
        if self.d < 0:
            raise GraphError("depth must be non-negative")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_list(cls, bicliques: Iterable[Biclique], d: int) -> "CoverMultiset":
        """One entry per element; consecutive repeats are not merged."""
        return cls(tuple((b, 1) for b in bicliques), d)

    @property
    def size(self) -> int:
        return sum(m for _, m in self.entries)

    def __len__(self):
        return self.size

    def copies(self) -> Iterator[Biclique]:
        """Every biclique as many times as its multiplicity."""
        for b, m in self.entries:
            for _ in range(m):
                yield b

    def canonical(self) -> "CoverMultiset":
        counts: dict[Biclique, int] = {}
        for b, m in self.entries:
            c = b.canonical()
            counts[c] = counts.get(c, 0) + m
        return CoverMultiset(tuple(sorted(counts.items())), self.d)

    def with_depth(self, d: int) -> "CoverMultiset":
        return CoverMultiset(self.entries, d)

    def repeated(self, t: int) -> "CoverMultiset":
        """t copies of every entry; a d-cover becomes a (t d)-cover."""
        return CoverMultiset(tuple((b, m * t) for b, m in self.entries), self.d * t)

    def __add__(self, other: "CoverMultiset") -> "CoverMultiset":
        return CoverMultiset(self.entries + other.entries, self.d + other.d)


@dataclass
class CoverCheck:
    ok: bool
    profile: dict[Edge, int]
    invalid_entries: list[int] = field(default_factory=list)
    deficient_edges: list[Edge] = field(default_factory=list)

    @property
    def min_coverage(self) -> int | None:
        return min(self.profile.values()) if self.profile else None

    def __bool__(self):
        return self.ok


def coverage_profile(G: Graph, cover: CoverMultiset) -> dict[Edge, int]:
    """Edge -> number of cover members containing it (with multiplicity).

    Only members that are valid bicliques of G contribute.
    """
    return verify_cover(G, cover).profile


def verify_cover(G: Graph, cover: CoverMultiset) -> CoverCheck:
    profile = {e: 0 for e in G.edges}
    invalid = []
    for i, (b, m) in enumerate(cover.entries):
        if any(not 0 <= v < G.n for v in b.x + b.y):
            raise GraphError(f"cover entry {i} uses a vertex outside 0..{G.n - 1}")
        if not is_biclique(G, b.x, b.y):
            invalid.append(i)
            continue
        for e in b.edges():
            profile[e] += m
    deficient = [e for e, c in profile.items() if c < cover.d]
    return CoverCheck(not invalid and not deficient, profile, invalid, deficient)


# ---------------------------------------------------------------------------
# maximal bicliques

def enumerate_maximal_bicliques(G: Graph, guard: int = 32) -> list[Biclique]:
    """All maximal bicliques of G, canonically oriented and sorted.

    A biclique (X, Y) is maximal exactly when Y = N(X) and X = N(Y), where
    N(S) is the common neighbourhood of S.  Every such Y is an intersection
    of vertex neighbourhoods and conversely, so the list is read off from
    the intersection-closed family generated by the neighbourhoods.
    """
    if G.n > guard:
        raise SizeGuardExceeded(f"maximal biclique enumeration: {G.n} vertices exceeds guard {guard}")
    closed: set[int] = set()
    for v in range(G.n):
        nb = G.adj[v]
        if not nb:
            continue
        fresh = {s & nb for s in closed}
        fresh.add(nb)
        fresh.discard(0)
        closed |= fresh
    found = set()
    for ymask in closed:
        xmask = common_neighbors(G, ymask)
        found.add(Biclique.from_masks(xmask, ymask).canonical())
    return sorted(found)


def common_neighbors(G: Graph, mask: int) -> int:
    out = (1 << G.n) - 1
    for v in bits(mask):
        out &= G.adj[v]
    return out


def is_maximal(G: Graph, b: Biclique) -> bool:
    return common_neighbors(G, b.xmask) == b.ymask and common_neighbors(G, b.ymask) == b.xmask


def all_bicliques(G: Graph, guard: int = 10) -> list[Biclique]:
    """Every biclique of G (not just maximal ones), canonically oriented.

    Exhaustive over assignments of each vertex to X, Y or neither; meant for
    small oracle checks.
    """
    if G.n > guard:
        raise SizeGuardExceeded(f"all_bicliques: {G.n} vertices exceeds guard {guard}")
    out = set()
    for xmask in range(1, 1 << G.n):
        cand = common_neighbors(G, xmask)
        sub = cand
        while sub:
            out.add(Biclique.from_masks(xmask, sub).canonical())
            sub = (sub - 1) & cand
    return sorted(out)


def max_biclique_edges(G: Graph, bicliques: Sequence[Biclique] | None = None) -> tuple[int, Biclique]:
    """B(G) and the first maximal biclique (canonical order) attaining it."""
    if G.m == 0:
        raise GraphError("B(G) is undefined for an empty edge set")
    if bicliques is None:
        bicliques = enumerate_maximal_bicliques(G)
    top = max(b.n_edges for b in bicliques)
    return top, min(b for b in bicliques if b.n_edges == top)


def trivial_lower_bound(G: Graph, d: int, B: int | None = None) -> int:
    """ceil(d |E| / B(G)): no biclique covers more than B(G) edges."""
    if G.m == 0:
        raise GraphError("the edge-count bound needs at least one edge")
    if B is None:
        B, _ = max_biclique_edges(G)
    return -(-d * G.m // B)


# ---------------------------------------------------------------------------
# good covers

def is_good_cover(G: Graph, cover: CoverMultiset, guard: int = 24) -> tuple[int, ...] | None:
    """Look for an orientation making every vertex appear ``d`` times on X-sides.

    The witness gives, per entry, how many of its copies use the stored
    first side as X (the remaining copies use the second side).  Returns
    None when no orientation works.
    """
    if cover.size > guard:
        raise SizeGuardExceeded(f"good-cover search: cover size {cover.size} exceeds guard {guard}")
    d = cover.d
    n = G.n
    if d == 0:
        return tuple(m for _, m in cover.entries)
    entries = cover.entries
    # potential[i][v]: most that entries i.. can still add to vertex v
    potential = [[0] * n for _ in range(len(entries) + 1)]
    for i in range(len(entries) - 1, -1, -1):
        b, m = entries[i]
        row = list(potential[i + 1])
        for v in b.x + b.y:
            row[v] += m
        potential[i] = row
    if any(p < d for p in potential[0]):
        return None
    counts = [0] * n
    choice = [0] * len(entries)

    def search(i: int) -> bool:
        if any(counts[v] + potential[i][v] < d for v in range(n)):
            return False
        if i == len(entries):
            return True
        b, m = entries[i]
        # prefer the split that helps the more deficient side first
        need_x = sum(max(0, d - counts[v]) for v in b.x)
        need_y = sum(max(0, d - counts[v]) for v in b.y)
        order = range(m, -1, -1) if need_x >= need_y else range(m + 1)
        for k in order:
            for v in b.x:
                counts[v] += k
            for v in b.y:
                counts[v] += m - k
            choice[i] = k
            if search(i + 1):
                return True
            for v in b.x:
                counts[v] -= k
            for v in b.y:
                counts[v] -= m - k
        return False

    return tuple(choice) if search(0) else None


def x_side_counts(G: Graph, cover: CoverMultiset, orientation: Sequence[int]) -> list[int]:
    """How often each vertex lies on an X-side under ``orientation``."""
    counts = [0] * G.n
    for (b, m), k in zip(cover.entries, orientation):
        for v in b.x:
            counts[v] += k
        for v in b.y:
            counts[v] += m - k
    return counts

"""Finite simple graphs on vertices ``0..n-1``.

Adjacency is held as one integer bitmask per vertex, which keeps neighbourhood
intersections (the workhorse of biclique search) cheap.  Graphs are immutable.

Besides the family generators and graph operators, this module carries the
exact invariants the cover machinery leans on: chromatic number, vertex cover
number, matching number, C4-freeness and edge-transitivity.  The exact ones
are plain backtracking searches guarded by a vertex-count limit.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph input or parameter."""


class SizeGuardExceeded(RuntimeError):
    """An exact search was asked to run on a graph above its size guard."""


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            for w in bits(row):
                if not self.adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, w) for u in range(self.n) for w in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def named(self, name: str) -> "Graph":
        return Graph(self.n, self.adj, name)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


@dataclass(frozen=True)
class Coloring:
    """Proper coloring; ``colors[v]`` lies in ``1..k``."""

    colors: tuple[int, ...]
    k: int

    def classes(self) -> list[list[int]]:
        """Color classes in color order; class ``i`` holds the vertices of color ``i + 1``."""
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c - 1].append(v)
        return out

    def is_proper(self, G: Graph) -> bool:
        if len(self.colors) != G.n or any(not 1 <= c <= self.k for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in G.edges)


# Vertex roles for Mycielski graphs; products label vertices with (x, y) pairs.
ORIGINAL = "original"
TWIN = "twin"
ROOT = "root"


def graph_from_edges(n: int, edges: Iterable[Sequence[int]], name: str = "") -> Graph:
    if n < 0:
        raise GraphError("vertex count must be non-negative")
    adj = [0] * n
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj), name)


# ---------------------------------------------------------------------------
# families

def empty(n: int) -> Graph:
    if n < 0:
        raise GraphError("empty graph needs n >= 0")
    return Graph(n, (0,) * n, f"empty({n})")


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)), f"K{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"C{n}")


def path(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise GraphError("path needs n >= 1")
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)], f"P{n}")


def hypercube(k: int) -> Graph:
    """The k-cube; vertex ``v`` is the k-bit string of ``v``."""
    if k < 1:
        raise GraphError("hypercube needs k >= 1")
    n = 1 << k
    adj = tuple(mask_of(v ^ (1 << i) for i in range(k)) for v in range(n))
    return Graph(n, adj, f"Q{k}")


def complete_multipartite(parts: Sequence[int]) -> Graph:
    if not parts or any(p < 1 for p in parts):
        raise GraphError("part sizes must be positive")
    G, _ = join([empty(p) for p in parts])
    return G.named("K" + ",".join(str(p) for p in parts))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return graph_from_edges(10, outer + spokes + inner, "Petersen")


_FAMILIES = {
    "cycle": cycle,
    "complete": complete,
    "path": path,
    "hypercube": hypercube,
    "empty": empty,
    "petersen": petersen,
    "complete_multipartite": complete_multipartite,
}


def family(kind: str, *params) -> Graph:
    """Build a named family member, e.g. ``family("cycle", 5)``.

    ``complete_multipartite`` takes the part sizes, either as one sequence or
    as separate arguments; ``petersen`` takes none.
    """
    try:
        build = _FAMILIES[kind]
    except KeyError:
        raise GraphError(f"unknown graph family {kind!r}") from None
    if kind == "petersen":
        if params:
            raise GraphError("petersen takes no parameters")
        return build()
    if kind == "complete_multipartite":
        sizes = params[0] if len(params) == 1 and not isinstance(params[0], int) else params
        return build([int(p) for p in sizes])
    if len(params) != 1:
        raise GraphError(f"{kind} takes exactly one parameter")
    return build(int(params[0]))


# ---------------------------------------------------------------------------
# operators

def complement(G: Graph) -> Graph:
    full = (1 << G.n) - 1
    return Graph(G.n, tuple(full ^ row ^ (1 << v) for v, row in enumerate(G.adj)))


def disjoint_union(graphs: Sequence[Graph]) -> tuple[Graph, list[range]]:
    adj: list[int] = []
    parts = []
    offset = 0
    for H in graphs:
        adj.extend(row << offset for row in H.adj)
        parts.append(range(offset, offset + H.n))
        offset += H.n
    return Graph(offset, tuple(adj)), parts


def join(graphs: Sequence[Graph]) -> tuple[Graph, list[range]]:
    """Join of the operands; also returns each operand's vertex range."""
    if not graphs:
        raise GraphError("join needs at least one graph")
    union, parts = disjoint_union(graphs)
    full = (1 << union.n) - 1
    adj = list(union.adj)
    for part in parts:
        own = mask_of(part)
        for v in part:
            adj[v] |= full & ~own
    return Graph(union.n, tuple(adj)), parts


def lexicographic_product(G: Graph, H: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """G[H]; vertex ``(x, y)`` gets index ``x * H.n + y``.

    The labeling returned maps each index back to its ``(x, y)`` pair.
    """
    if G.n < 1 or H.n < 1:
        raise GraphError("lexicographic product needs nonempty vertex sets")
    h = H.n
    block = (1 << h) - 1
    adj = []
    for x in range(G.n):
        spread = 0
        for x2 in bits(G.adj[x]):
            spread |= block << (x2 * h)
        for y in range(h):
            adj.append(spread | (H.adj[y] << (x * h)))
    labels = [(x, y) for x in range(G.n) for y in range(h)]
    name = f"{G.name}[{H.name}]" if G.name and H.name else ""
    return Graph(G.n * h, tuple(adj), name), labels


def mycielski(G: Graph) -> tuple[Graph, list[tuple[str, int]]]:
    """Mycielski graph M(G).

    Originals keep indices ``0..n-1``, the twin of ``y`` is ``n + y`` and the
    root is ``2n``.  Labels are ``(role, original vertex)`` with the root
    labelled ``(ROOT, -1)``.
    """
    n = G.n
    edges = list(G.edges)
    for x, y in G.edges:
        edges.append((x, n + y))
        edges.append((y, n + x))
    edges.extend((n + y, 2 * n) for y in range(n))
    labels = [(ORIGINAL, v) for v in range(n)] + [(TWIN, v) for v in range(n)] + [(ROOT, -1)]
    name = f"M({G.name})" if G.name else ""
    return graph_from_edges(2 * n + 1, edges, name), labels


def induced_subgraph(G: Graph, vertices: Sequence[int]) -> Graph:
    index = {v: i for i, v in enumerate(vertices)}
    edges = [(index[u], index[v]) for u, v in G.edges if u in index and v in index]
    return graph_from_edges(len(vertices), edges)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Image of G under the vertex map ``v -> perm[v]``."""
    return graph_from_edges(G.n, [(perm[u], perm[v]) for u, v in G.edges])


# ---------------------------------------------------------------------------
# exact invariants

def _guard(G: Graph, limit: int, what: str):
    if G.n > limit:
        raise SizeGuardExceeded(f"{what}: {G.n} vertices exceeds size guard {limit}")


def chromatic_number(G: Graph, guard: int = 16) -> tuple[int, Coloring]:
    """Exact chromatic number with a witness coloring.

    Tries k = clique-free lower bound upwards; each attempt is a backtracking
    search over vertices in decreasing-degree order with colour symmetry
    broken by only ever opening one new colour at a time.
    """
    _guard(G, guard, "chromatic_number")
    if G.n == 0:
        return 0, Coloring((), 0)
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    k = 1 if G.m == 0 else 2
    while True:
        colors = _k_coloring(G, k, order)
        if colors is not None:
            witness = Coloring(tuple(colors), k)
            assert witness.is_proper(G)
            return k, witness
        k += 1


def _k_coloring(G: Graph, k: int, order: list[int]) -> list[int] | None:
    colors = [0] * G.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {colors[w] for w in bits(G.adj[v])}
        for c in range(1, min(used + 1, k) + 1):
            if c in taken:
                continue
            colors[v] = c
            if place(i + 1, max(used, c)):
                return True
        colors[v] = 0
        return False

    return colors if place(0, 0) else None


def min_vertex_cover(G: Graph, guard: int = 24) -> tuple[int, list[int]]:
    """Minimum vertex cover by branching on a maximum-degree vertex.

    Either that vertex joins the cover or all of its neighbours do.
    """
    _guard(G, guard, "min_vertex_cover")
    best = [G.n + 1, 0]

    def search(alive: int, chosen: int, size: int):
        if size >= best[0]:
            return
        pick, pick_deg = -1, 0
        for v in bits(alive):
            d = (G.adj[v] & alive).bit_count()
            if d > pick_deg:
                pick, pick_deg = v, d
        if pick < 0:
            best[0], best[1] = size, chosen
            return
        # any matching forces at least one cover vertex per edge
        if size + _greedy_matching_size(G, alive) >= best[0]:
            return
        search(alive & ~(1 << pick), chosen | 1 << pick, size + 1)
        nbrs = G.adj[pick] & alive
        search(alive & ~nbrs & ~(1 << pick), chosen | nbrs, size + nbrs.bit_count())

    search((1 << G.n) - 1, 0, 0)
    cover = bits(best[1])
    assert all(u in cover or v in cover for u, v in G.edges)
    return best[0], cover


def _greedy_matching_size(G: Graph, alive: int) -> int:
    count = 0
    while alive:
        v = (alive & -alive).bit_length() - 1
        alive &= ~(1 << v)
        nb = G.adj[v] & alive
        if nb:
            w = (nb & -nb).bit_length() - 1
            alive &= ~(1 << w)
            count += 1
    return count


def max_matching(G: Graph, guard: int = 24) -> tuple[int, list[tuple[int, int]]]:
    """Maximum matching by exhaustive branching on the lowest live vertex."""
    _guard(G, guard, "max_matching")
    best: list = [-1, []]

    def search(alive: int, matched: list[tuple[int, int]]):
        # drop vertices without live neighbours; they cannot be matched
        while alive:
            v = (alive & -alive).bit_length() - 1
            if G.adj[v] & alive:
                break
            alive &= ~(1 << v)
        if len(matched) + alive.bit_count() // 2 <= best[0]:
            return
        if not alive:
            best[0], best[1] = len(matched), list(matched)
            return
        v = (alive & -alive).bit_length() - 1
        rest = alive & ~(1 << v)
        for w in bits(G.adj[v] & rest):
            matched.append((v, w))
            search(rest & ~(1 << w), matched)
            matched.pop()
        search(rest, matched)

    search((1 << G.n) - 1, [])
    matching = best[1]
    used = [v for e in matching for v in e]
    assert len(used) == len(set(used)) and all(G.has_edge(u, v) for u, v in matching)
    return best[0], matching


def is_c4_free(G: Graph) -> bool:
    """No two distinct vertices share two or more neighbours."""
    return all((G.adj[u] & G.adj[v]).bit_count() < 2 for u, v in itertools.combinations(range(G.n), 2))


def is_bipartite(G: Graph) -> tuple[list[int], list[int]] | None:
    side = [-1] * G.n
    for s in range(G.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in bits(G.adj[v]):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    return [v for v in range(G.n) if side[v] == 0], [v for v in range(G.n) if side[v] == 1]


# ---------------------------------------------------------------------------
# isomorphism and automorphisms

def _extend_map(G: Graph, H: Graph, fixed: dict[int, int]) -> list[int] | None:
    """Find an isomorphism G -> H extending ``fixed`` by backtracking.

    Candidates must match degree and adjacency to every already-mapped vertex.
    """
    n = G.n
    if n != H.n:
        return None
    dg, dh = G.degrees(), H.degrees()
    image = [-1] * n
    used = 0
    for a, b in fixed.items():
        if dg[a] != dh[b] or used >> b & 1:
            return None
        image[a] = b
        used |= 1 << b
    for a in fixed:
        for c in fixed:
            if G.has_edge(a, c) != H.has_edge(fixed[a], fixed[c]):
                return None
    # map vertices adjacent to already-mapped ones early
    order = []
    placed = mask_of(fixed)
    remaining = [v for v in range(n) if v not in fixed]
    while remaining:
        remaining.sort(key=lambda v: (-(G.adj[v] & placed).bit_count(), -dg[v], v))
        v = remaining.pop(0)
        order.append(v)
        placed |= 1 << v

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        a = order[i]
        mapped_nb = [c for c in bits(G.adj[a]) if image[c] >= 0]
        mapped_non = [c for c in range(n) if image[c] >= 0 and c != a and not G.has_edge(a, c)]
        for b in range(n):
            if used >> b & 1 or dh[b] != dg[a]:
                continue
            if any(not H.has_edge(b, image[c]) for c in mapped_nb):
                continue
            if any(H.has_edge(b, image[c]) for c in mapped_non):
                continue
            image[a] = b
            if place(i + 1, used | 1 << b):
                return True
            image[a] = -1
        return False

    return list(image) if place(0, used) else None


def find_isomorphism(G: Graph, H: Graph) -> list[int] | None:
    """A vertex map ``perm`` with ``relabel(G, perm) == H``, or None."""
    if G.n != H.n or G.m != H.m or sorted(G.degrees()) != sorted(H.degrees()):
        return None
    return _extend_map(G, H, {})


def are_isomorphic(G: Graph, H: Graph) -> bool:
    return find_isomorphism(G, H) is not None


def edge_orbits(G: Graph, guard: int = 12) -> list[list[tuple[int, int]]]:
    """Orbits of Aut(G) on the edge set.

    Orbits are grown with union-find: for each edge not yet known to share an
    orbit with a representative, look for an automorphism carrying the
    representative onto it; every automorphism found merges all the edge
    pairs it relates.
    """
    _guard(G, guard, "edge_orbits")
    edges = G.edges
    index = {e: i for i, e in enumerate(edges)}
    parent = list(range(len(edges)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def absorb(perm):
        for i, (u, v) in enumerate(edges):
            a, b = perm[u], perm[v]
            j = index[(a, b) if a < b else (b, a)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)

    tried: set[tuple[int, int]] = set()
    for i, (a, b) in enumerate(edges):
        for j, (u, v) in enumerate(edges):
            if j <= i or find(i) == find(j) or (find(i), j) in tried:
                continue
            tried.add((find(i), j))
            perm = _extend_map(G, G, {a: u, b: v}) or _extend_map(G, G, {a: v, b: u})
            if perm is not None:
                absorb(perm)
    groups: dict[int, list[tuple[int, int]]] = {}
    for i, e in enumerate(edges):
        groups.setdefault(find(i), []).append(e)
    return list(groups.values())


def is_edge_transitive(G: Graph, guard: int = 12) -> bool:
    if G.m == 0:
        raise GraphError("edge-transitivity is undefined for an empty edge set")
    return len(edge_orbits(G, guard)) == 1

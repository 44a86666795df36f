"""On C4-free graphs whose vertex cover number equals the matching number, stars are optimal."""

import random

from bicover import bc_exact, bc_via_beta
from bicover.graphs import cycle, graph_from_edges, min_vertex_cover, petersen

rng = random.Random(3)
for trial in range(5):
    n = rng.randint(4, 10)
    tree = graph_from_edges(n, [(rng.randrange(v), v) for v in range(1, n)])
    beta, centres = min_vertex_cover(tree)
    row = [f"d={d}: {bc_via_beta(tree, d)}={bc_exact(tree, d).value}" for d in (1, 2, 3)]
    print(f"tree on {n} vertices, beta {beta} (centres {centres}): " + "  ".join(row))

for G in (cycle(5), cycle(4), petersen()):
    print(f"{G.name}: shortcut {'applies' if bc_via_beta(G, 1) is not None else 'does not apply'}, "
          f"exact bc = {bc_exact(G, 1).value}, beta = {min_vertex_cover(G)[0]}")

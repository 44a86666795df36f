"""Covers of lexicographic products and joins assembled from covers of the pieces."""

from bicover import bc_exact, verify_cover
from bicover.bicliques import CoverMultiset
from bicover.constructions import cover_join, cover_lexicographic
from bicover.graphs import (
    chromatic_number,
    complement,
    complete,
    complete_multipartite,
    cycle,
    empty,
    join,
    lexicographic_product,
    path,
)

G, H, d = cycle(5), path(3), 2
cg, ch = bc_exact(G, d).witness, bc_exact(H, d).witness
chi, coloring = chromatic_number(complement(G))
P, _ = lexicographic_product(G, H)
cover = cover_lexicographic(G, cg, H, ch, coloring)
print(f"C5[P3] at d={d}: {cg.size} + {ch.size} * {chi} = {cg.size + ch.size * chi} allowed, "
      f"built {cover.size}, valid {verify_cover(P, cover).ok}, exact {bc_exact(P, d).value}")

# the square of K_n is K_n[K_n], and the complement of K_n needs one colour
for n in (2, 3, 4):
    opt = bc_exact(complete(n), 1).witness
    c = cover_lexicographic(complete(n), opt, complete(n), opt, chromatic_number(empty(n))[1])
    print(f"K{n * n} from K{n}[K{n}]: {opt.size} <= bc <= {c.size}")

parts = [cycle(5), path(4), empty(2)]
J, _ = join(parts)
# an edgeless part needs no bicliques at all
covers = [bc_exact(part, 1).witness if part.m else CoverMultiset((), 1) for part in parts]
kk = bc_exact(complete(3), 1).witness
cover = cover_join(parts, covers, kk)
print(f"C5 v P4 v 2K1: {max(c.size for c in covers)} + {kk.size} allowed, built {cover.size}, "
      f"valid {verify_cover(J, cover).ok}")
print("K2,2,2 exact:", bc_exact(complete_multipartite([2, 2, 2]), 1).value, " K3 exact:", bc_exact(complete(3), 1).value)

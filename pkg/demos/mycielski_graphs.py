"""Mycielski graphs: covers lift up, and covers of M(G) project back down."""

from bicover import bc_exact, is_good_cover, verify_cover
from bicover.constructions import cover_mycielski, good_cover_cycle, mycielski_lower_extract
from bicover.graphs import cycle, mycielski, path

for n in (5, 7):
    G = cycle(n)
    MG, labels = mycielski(G)
    base, orientation = good_cover_cycle(n, 2)
    lifted = cover_mycielski(G, base, orientation)
    print(f"M(C{n}) at d=2: good lift has {lifted.size} bicliques, valid {verify_cover(MG, lifted).ok}")

MG, labels = mycielski(cycle(5))
res = bc_exact(MG, 2)
down = mycielski_lower_extract(MG, labels, res.witness)
print(f"bc_2(M(C5)) = {res.value}; projecting its witness gives a {down.d}-cover of C5 "
      f"of size {down.size}, valid {verify_cover(cycle(5), down).ok}")

# without an orientation the root needs its own d stars
G = path(4)
base = bc_exact(G, 1).witness
plain = cover_mycielski(G, base)
print(f"M(P4) at d=1: plain lift {plain.size} = 2*{base.size}+1; exact {bc_exact(mycielski(G)[0], 1).value}; "
      f"good orientation of the base cover: {is_good_cover(G, base)}")

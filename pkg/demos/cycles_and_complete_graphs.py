"""Exact covering numbers of cycles and complete graphs next to explicit covers."""

from bicover import bc_exact, verify_cover
from bicover.constructions import cover_complete_katona, cover_cycle, cycle_formula
from bicover.graphs import complete, cycle

print("cycles: exact value, closed form, star construction")
for n in range(3, 10):
    cells = []
    for d in range(1, 5):
        exact = bc_exact(cycle(n), d).value
        cover = cover_cycle(n, d)
        assert verify_cover(cycle(n), cover).ok
        cells.append(f"d={d}: {exact}/{cycle_formula(n, d)}/{cover.size}")
    print(f"  C{n}  " + "   ".join(cells))

# one bit of the vertex label per biclique
print("\ncomplete graphs: binary-digit cover against the solver")
for n in range(2, 9):
    cover = cover_complete_katona(n)
    res = bc_exact(complete(n), 1)
    print(f"  K{n}  construction {cover.size}  exact {res.value}  ({res.nodes_explored} nodes)")

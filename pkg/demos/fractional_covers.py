"""Fractional covers: exact rationals, dual certificates, and tight depths."""

from fractions import Fraction

from bicover import bc_fractional, find_tight_d, max_biclique_edges
from bicover.graphs import complete, cycle, hypercube, petersen

for n in range(3, 8):
    res = bc_fractional(complete(n))
    dual = sum(res.dual.values())
    print(f"K{n}: bc* = {res.value}, dual total = {dual}, support = {len(res.weights)} bicliques")

# On edge-transitive graphs uniform edge weights give a matching dual, so bc* = |E| / B.
print()
for G in (cycle(5), cycle(6), complete(4), complete(5), hypercube(3), petersen()):
    B, witness = max_biclique_edges(G)
    star = bc_fractional(G).value
    tight = find_tight_d(G, 6)
    where = f"d={tight.d} (bc_d = {tight.result.value})" if tight else "none up to d=6"
    print(f"{G.name:9s} |E|/B = {Fraction(G.m, B)}  bc* = {star}  largest biclique {witness}  tight at {where}")

"""Exact d-biclique covering numbers.

The integer problem is a multicover over the maximal bicliques: pick
multiplicities ``0 <= x_i <= d`` with every edge covered ``d`` times.  Both
reductions are safe: any biclique sits inside a maximal one that covers a
superset of its edges, and no single variable can usefully contribute more
than ``d`` to any edge.  It is solved by depth-first branch and bound over
exact LP relaxations.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import lp
from .bicliques import (
    Biclique,
    CoverMultiset,
    enumerate_maximal_bicliques,
    max_biclique_edges,
    verify_cover,
)
from .graphs import Graph, GraphError, is_c4_free, is_edge_transitive, max_matching, min_vertex_cover

OPTIMAL = "optimal"
GUARD_EXCEEDED = "guard_exceeded"

LOG_TOLERANCE = 1e-9


@dataclass
class IlpResult:
    value: int
    witness: CoverMultiset
    nodes_explored: int
    status: str
    # ceil of the root relaxation; a proven lower bound even when the guard trips
    lower_bound: int = 0
    seconds: float = 0.0

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


@dataclass
class LpResult:
    value: Fraction
    weights: dict[int, Fraction]
    bicliques: list[Biclique]
    # edge -> dual weight; each biclique collects at most 1, total equals value
    dual: dict[tuple[int, int], Fraction] = field(default_factory=dict)


class _Instance:
    """Edge/biclique incidence shared by the LP and the search."""

    def __init__(self, G: Graph, bicliques: Sequence[Biclique] | None = None):
        if G.m == 0:
            raise GraphError("covering problems need at least one edge")
        self.G = G
        self.bicliques = list(bicliques) if bicliques is not None else enumerate_maximal_bicliques(G)
        self.edges = G.edges
        index = {e: k for k, e in enumerate(self.edges)}
        self.covers: list[list[int]] = []
        for b in self.bicliques:
            self.covers.append(sorted(index[e] for e in b.edges()))
        self.covered_by: list[list[int]] = [[] for _ in self.edges]
        for i, es in enumerate(self.covers):
            for k in es:
                self.covered_by[k].append(i)
        if any(not cs for cs in self.covered_by):
            raise GraphError("some edge lies in no supplied biclique")

    def cover_from(self, x: Sequence[int], d: int) -> CoverMultiset:
        return CoverMultiset(tuple((self.bicliques[i], v) for i, v in enumerate(x) if v > 0), d)

    def node_lp(self, d: int, lower: Sequence[int], upper: Sequence[int]):
        """Relaxation of the subproblem with ``lower <= x <= upper``.

        Returns ``(offset, solution, columns)`` where the node value is
        ``offset + solution.value`` and ``columns`` maps LP columns back to
        biclique indices; solution is None if nothing is left to cover.
        """
        offset = sum(lower)
        residual = [d] * len(self.edges)
        for i, l in enumerate(lower):
            if l:
                for k in self.covers[i]:
                    residual[k] -= l
        rows = [k for k, r in enumerate(residual) if r > 0]
        if not rows:
            return offset, None, []
        live = set(rows)
        columns = [i for i in range(len(self.bicliques))
                   if upper[i] > lower[i] and any(k in live for k in self.covers[i])]
        col_of = {i: j for j, i in enumerate(columns)}
        A = [[0] * len(columns) for _ in rows]
        for r, k in enumerate(rows):
            for i in self.covered_by[k]:
                j = col_of.get(i)
                if j is not None:
                    A[r][j] = 1
        b = [residual[k] for k in rows]
        # an upper bound matters only below the largest residual demand it meets
        for i in columns:
            cap = upper[i] - lower[i]
            if cap < max(residual[k] for k in self.covers[i]):
                row = [0] * len(columns)
                row[col_of[i]] = -1
                A.append(row)
                b.append(-cap)
        sol = lp.solve_min_ge(A, b, [1] * len(columns))
        return offset, sol, columns


def _greedy_one_cover(inst: _Instance) -> list[int]:
    """Repeatedly take the biclique covering the most uncovered edges."""
    uncovered = set(range(len(inst.edges)))
    x = [0] * len(inst.bicliques)
    while uncovered:
        best, gain = -1, 0
        for i, es in enumerate(inst.covers):
            g = sum(1 for k in es if k in uncovered)
            if g > gain:
                best, gain = i, g
        x[best] += 1
        uncovered.difference_update(inst.covers[best])
    return x


def _ceil(q: Fraction) -> int:
    return -(-q.numerator // q.denominator)


def bc_exact(G: Graph, d: int = 1, max_nodes: int | None = 200_000,
             max_seconds: float | None = None,
             bicliques: Sequence[Biclique] | None = None) -> IlpResult:
    """Minimum size of a d-biclique cover of G, with a witness.

    If a node or time guard trips, the best cover found so far is returned
    with status ``guard_exceeded``.
    """
    if d < 1:
        raise ValueError("depth must be at least 1")
    start = time.monotonic()
    inst = _Instance(G, bicliques)
    nvar = len(inst.bicliques)
    best_x = [d * v for v in _greedy_one_cover(inst)]
    best = sum(best_x)

    root_lower = 0
    nodes = 0
    status = OPTIMAL
    stack = [([0] * nvar, [d] * nvar)]
    while stack:
        if max_nodes is not None and nodes >= max_nodes:
            status = GUARD_EXCEEDED
            break
        if max_seconds is not None and time.monotonic() - start > max_seconds:
            status = GUARD_EXCEEDED
            break
        lower, upper = stack.pop()
        nodes += 1
        offset, sol, columns = inst.node_lp(d, lower, upper)
        if sol is None:
            # lower bounds alone cover everything
            if offset < best:
                best, best_x = offset, list(lower)
            if nodes == 1:
                root_lower = offset
            continue
        if sol.status == lp.INFEASIBLE:
            continue
        z = offset + sol.value
        bound = _ceil(z)
        if nodes == 1:
            root_lower = bound
            if bound >= best:
                break
        if bound >= best:
            continue
        # rounding every variable up keeps a covering feasible
        rounded = list(lower)
        for j, i in enumerate(columns):
            rounded[i] += _ceil(sol.x[j])
        total = sum(rounded)
        if total < best:
            best, best_x = total, rounded
            if best <= root_lower:
                break
        fractional = [(abs(v - v.numerator // v.denominator - Fraction(1, 2)), columns[j], v)
                      for j, v in enumerate(sol.x) if v.denominator != 1]
        if not fractional:
            continue
        _, i, v = min(fractional)
        full = lower[i] + v
        down_upper = list(upper)
        down_upper[i] = math.floor(full)
        up_lower = list(lower)
        up_lower[i] = math.ceil(full)
        stack.append((lower, down_upper))
        stack.append((up_lower, upper))

    witness = inst.cover_from(best_x, d)
    check = verify_cover(G, witness)
    assert check.ok, "branch and bound produced an invalid cover"
    assert witness.size == best
    return IlpResult(best, witness, nodes, status, root_lower, time.monotonic() - start)


def covering_lp(G: Graph, d: int = 1, bicliques: Sequence[Biclique] | None = None):
    """Matrix form ``(A, b, c, bicliques)`` of the d-fold covering relaxation."""
    inst = _Instance(G, bicliques)
    A = [[0] * len(inst.bicliques) for _ in inst.edges]
    for k, cs in enumerate(inst.covered_by):
        for i in cs:
            A[k][i] = 1
    return A, [d] * len(inst.edges), [1] * len(inst.bicliques), inst


def bc_fractional(G: Graph, bicliques: Sequence[Biclique] | None = None) -> LpResult:
    """Exact fractional biclique cover number with a dual certificate."""
    A, b, c, inst = covering_lp(G, 1, bicliques)
    sol = lp.solve_min_ge(A, b, c)
    errs = lp.certificate_errors(A, b, c, sol)
    if errs:
        raise AssertionError("LP certificate failed: " + "; ".join(errs))
    weights = {i: w for i, w in enumerate(sol.x) if w}
    dual = {e: y for e, y in zip(inst.edges, sol.y)}
    return LpResult(sol.value, weights, inst.bicliques, dual)


def check_lp_result(G: Graph, res: LpResult) -> list[str]:
    """Re-verify an LpResult from scratch against G."""
    errs = []
    cov = {e: Fraction(0) for e in G.edges}
    for i, w in res.weights.items():
        if w < 0:
            errs.append(f"negative weight on biclique {i}")
        for e in res.bicliques[i].edges():
            cov[e] += w
    errs += [f"edge {e} weight {c} < 1" for e, c in cov.items() if c < 1]
    for i, b in enumerate(res.bicliques):
        load = sum(res.dual.get(e, 0) for e in b.edges())
        if load > 1:
            errs.append(f"dual overloads biclique {i}: {load}")
    if any(y < 0 for y in res.dual.values()):
        errs.append("negative dual weight")
    if sum(res.weights.values()) != res.value or sum(res.dual.values()) != res.value:
        errs.append("primal/dual totals differ from reported value")
    return errs


def lp_dump(G: Graph, d: int = 1, integer: bool = True) -> str:
    """The covering program in CPLEX-LP text, for external cross-checks."""
    A, b, c, inst = covering_lp(G, d)
    names = [f"x{i}" for i in range(len(c))]
    rows = [f"e{u}_{v}" for u, v in inst.edges]
    header = "\\ " + "; ".join(f"x{i} = {bq}" for i, bq in enumerate(inst.bicliques))
    return header + "\n" + lp.format_lp(A, b, c, names, rows, upper=[d] * len(c), integer=integer)


@dataclass
class LogBound:
    bc: int
    B: int
    bc_star: Fraction
    bound: float
    holds: bool
    tolerance: float = LOG_TOLERANCE
    d: int | None = None
    bc_d: int | None = None
    derived_holds: bool | None = None


def log_bound(G: Graph, d: int | None = None, bc: int | None = None,
              bc_star: Fraction | None = None, bc_d: int | None = None) -> LogBound:
    """Compare bc*(G) against bc(G) / (1 + ln B(G)).

    With ``d`` given, also checks d bc(G) / (1 + ln B(G)) <= bc_d(G).
    Missing exact values are computed.
    """
    bicliques = enumerate_maximal_bicliques(G)
    B, _ = max_biclique_edges(G, bicliques)
    if bc is None:
        bc = bc_exact(G, 1, bicliques=bicliques).value
    if bc_star is None:
        bc_star = bc_fractional(G, bicliques).value
    bound = bc / (1 + math.log(B))
    rec = LogBound(bc, B, bc_star, bound, float(bc_star) >= bound - LOG_TOLERANCE)
    if d is not None:
        if bc_d is None:
            bc_d = bc_exact(G, d, bicliques=bicliques).value
        rec.d, rec.bc_d = d, bc_d
        rec.derived_holds = d * bound <= bc_d + LOG_TOLERANCE
    return rec


@dataclass
class TightDepth:
    d: int
    result: IlpResult
    bc_star: Fraction
    # bc_{2d} == 2 d bc*, when 2d fits in the budget
    doubled_ok: bool | None = None


def find_tight_d(G: Graph, d_max: int, max_seconds: float | None = None) -> TightDepth | None:
    """Smallest d <= d_max with bc_d(G) = d bc*(G), or None if not found.

    None means "unknown within budget"; only depths where d bc* is an
    integer can be tight, so only those are solved.
    """
    if not is_edge_transitive(G):
        raise GraphError("find_tight_d needs an edge-transitive graph")
    bicliques = enumerate_maximal_bicliques(G)
    star = bc_fractional(G, bicliques).value
    for d in range(1, d_max + 1):
        target = d * star
        if target.denominator != 1:
            continue
        res = bc_exact(G, d, max_seconds=max_seconds, bicliques=bicliques)
        if res.optimal and res.value == target:
            tight = TightDepth(d, res, star)
            if 2 * d <= d_max:
                twice = bc_exact(G, 2 * d, max_seconds=max_seconds, bicliques=bicliques)
                tight.doubled_ok = twice.optimal and twice.value == 2 * target
            return tight
    return None


def bc_via_beta(G: Graph, d: int) -> int | None:
    """d * beta(G) when G is C4-free with beta = alpha', else None."""
    if not is_c4_free(G):
        return None
    beta, _ = min_vertex_cover(G)
    matching, _ = max_matching(G)
    if beta != matching:
        return None
    return d * beta

"""Exact covering-type linear programs.

Solves ``min c.x  s.t.  A x >= b, x >= 0`` for integer data with ``c >= 0``.
The slack basis of such a problem is dual feasible, so a dual simplex from
that basis needs no phase one.  Arithmetic is fraction-free integer pivoting:
the tableau is kept as integers over one shared positive denominator, which
is much cheaper in Python than a tableau of ``Fraction`` objects and still
exact.  The leaving row is the most infeasible one until a run of degenerate
pivots appears; from then on Bland's smallest-index rule takes over, so the
method cannot cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"


@dataclass
class LPSolution:
    status: str
    value: Fraction | None = None
    x: list[Fraction] | None = None
    # one multiplier per constraint row; a feasible dual certificate
    y: list[Fraction] | None = None
    pivots: int = 0


def solve_min_ge(A: Sequence[Sequence[int]], b: Sequence[int], c: Sequence[int],
                 max_pivots: int = 100_000, degenerate_limit: int = 50) -> LPSolution:
    m = len(A)
    n = len(c)
    if any(ci < 0 for ci in c):
        raise ValueError("objective coefficients must be non-negative")
    width = n + m + 1
    rhs = width - 1
    rows = []
    for i, Ai in enumerate(A):
        if len(Ai) != n:
            raise ValueError("constraint row has the wrong length")
        row = [-a for a in Ai] + [0] * m + [-b[i]]
        row[n + i] = 1
        rows.append(row)
    obj = list(c) + [0] * m + [0]
    basis = [n + i for i in range(m)]
    D = 1
    pivots = 0
    stalled = 0
    bland = False
    while True:
        leave = None
        for i in range(m):
            t = rows[i][rhs]
            if t < 0:
                if leave is None:
                    leave = i
                elif bland:
                    if basis[i] < basis[leave]:
                        leave = i
                elif t < rows[leave][rhs]:
                    leave = i
        if leave is None:
            break
        if pivots >= max_pivots:
            raise RuntimeError("simplex pivot limit reached")
        prow = rows[leave]
        enter = None
        # minimise obj[j] / -prow[j] over prow[j] < 0; ties go to the smaller j
        for j in range(rhs):
            a = prow[j]
            if a < 0:
                if enter is None or obj[j] * -prow[enter] < obj[enter] * -a:
                    enter = j
        if enter is None:
            return LPSolution(INFEASIBLE, pivots=pivots)
        p = prow[enter]
        if obj[enter] == 0:
            stalled += 1
            # degenerate run: fall back to Bland's rule, which cannot cycle
            if stalled > degenerate_limit:
                bland = True
        else:
            stalled = 0
        # p < 0 always here; negate so the new shared denominator -p is positive
        for i in range(m):
            if i == leave:
                continue
            r = rows[i]
            f = r[enter]
            if f:
                rows[i] = [(f * pb - a * p) // D for a, pb in zip(r, prow)]
            else:
                rows[i] = [(-a * p) // D for a in r]
        f = obj[enter]
        if f:
            obj = [(f * pb - a * p) // D for a, pb in zip(obj, prow)]
        else:
            obj = [(-a * p) // D for a in obj]
        rows[leave] = [-a for a in prow]
        D = -p
        basis[leave] = enter
        pivots += 1

    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = Fraction(rows[i][rhs], D)
    y = [Fraction(obj[n + i], D) for i in range(m)]
    value = Fraction(-obj[rhs], D)
    return LPSolution(OPTIMAL, value, x, y, pivots)


def certificate_errors(A, b, c, sol: LPSolution) -> list[str]:
    """Check primal feasibility, dual feasibility and equal objectives exactly."""
    errs = []
    x, y = sol.x, sol.y
    if any(v < 0 for v in x):
        errs.append("negative primal variable")
    if any(v < 0 for v in y):
        errs.append("negative dual variable")
    for i, Ai in enumerate(A):
        if sum(a * v for a, v in zip(Ai, x)) < b[i]:
            errs.append(f"primal row {i} violated")
    for j in range(len(c)):
        if sum(A[i][j] * y[i] for i in range(len(A))) > c[j]:
            errs.append(f"dual column {j} violated")
    primal = sum(cj * v for cj, v in zip(c, x))
    dual = sum(bi * v for bi, v in zip(b, y))
    if primal != sol.value or dual != sol.value:
        errs.append(f"objective mismatch: primal {primal}, dual {dual}, reported {sol.value}")
    return errs


def format_lp(A, b, c, names: Sequence[str] | None = None,
              row_names: Sequence[str] | None = None,
              upper: Sequence[int] | None = None, integer: bool = False) -> str:
    """CPLEX-LP text for ``min c.x, A x >= b, 0 <= x <= upper``."""
    n = len(c)
    names = list(names) if names else [f"x{j}" for j in range(n)]
    row_names = list(row_names) if row_names else [f"r{i}" for i in range(len(A))]

    def linear(coefs):
        terms = []
        for a, nm in zip(coefs, names):
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = "" if abs(a) == 1 else f"{abs(a)} "
            terms.append(f"{sign} {mag}{nm}")
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else text

    lines = ["Minimize", f" obj: {linear(c)}", "Subject To"]
    for nm, Ai, bi in zip(row_names, A, b):
        lines.append(f" {nm}: {linear(Ai)} >= {bi}")
    lines.append("Bounds")
    for j, nm in enumerate(names):
        if upper is not None:
            lines.append(f" 0 <= {nm} <= {upper[j]}")
        else:
            lines.append(f" {nm} >= 0")
    if integer:
        lines.append("General")
        lines.append(" " + " ".join(names))
    lines.append("End")
    return "\n".join(lines) + "\n"

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from bicover import lp


def oracle_value(A, b, c):
    res = linprog(c, A_ub=-np.array(A, dtype=float), b_ub=-np.array(b, dtype=float),
                  bounds=[(0, None)] * len(c), method="highs")
    return res.fun if res.status == 0 else None


def test_small_cover():
    # three sets covering three elements pairwise: optimum 3/2
    A = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    sol = lp.solve_min_ge(A, [1, 1, 1], [1, 1, 1])
    assert sol.status == lp.OPTIMAL and sol.value == Fraction(3, 2)
    assert sol.x == [Fraction(1, 2)] * 3
    assert lp.certificate_errors(A, [1, 1, 1], [1, 1, 1], sol) == []


def test_infeasible_row():
    sol = lp.solve_min_ge([[0, 0]], [1], [1, 1])
    assert sol.status == lp.INFEASIBLE


def test_upper_bound_rows():
    # x0 + x1 >= 3 with x0 <= 1 costs 3 and forces x1 = 2 when x1 is dearer
    A = [[1, 1], [-1, 0]]
    sol = lp.solve_min_ge(A, [3, -1], [1, 2])
    assert sol.value == 5 and sol.x == [1, 2]
    assert lp.certificate_errors(A, [3, -1], [1, 2], sol) == []


def test_negative_costs_rejected():
    with pytest.raises(ValueError):
        lp.solve_min_ge([[1]], [1], [-1])


@settings(max_examples=80)
@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_random_covering_lps_against_highs(m, n, data):
    A = [[data.draw(st.integers(0, 2)) for _ in range(n)] for _ in range(m)]
    b = [data.draw(st.integers(0, 4)) for _ in range(m)]
    c = [data.draw(st.integers(0, 3)) for _ in range(n)]
    sol = lp.solve_min_ge(A, b, c)
    ref = oracle_value(A, b, c)
    if ref is None:
        assert sol.status == lp.INFEASIBLE
        return
    assert sol.status == lp.OPTIMAL
    assert float(sol.value) == pytest.approx(ref, abs=1e-7)
    assert lp.certificate_errors(A, b, c, sol) == []


def test_format_lp():
    text = lp.format_lp([[1, 2], [0, -1]], [1, -3], [1, 1], upper=[2, 2], integer=True)
    assert text.splitlines() == [
        "Minimize", " obj: x0 + x1", "Subject To", " r0: x0 + 2 x1 >= 1", " r1: - x1 >= -3",
        "Bounds", " 0 <= x0 <= 2", " 0 <= x1 <= 2", "General", " x0 x1", "End",
    ]

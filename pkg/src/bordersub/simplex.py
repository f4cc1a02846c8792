"""Exact rational linear feasibility via a phase-1 simplex with integer
pivoting.

Decides whether {x in Q^d : a_r . x >= b_r for all r} is nonempty and, when
it is, returns one rational solution.  Free variables are split into
differences of nonnegatives, surplus variables turn inequalities into
equations, and a full set of artificial variables provides the starting
basis; feasibility holds iff the artificial objective minimizes to zero.

The tableau is kept as an integer matrix over a common positive denominator
(Edmonds-style integer pivoting): a pivot on entry p rescales every other
row by p/den with the Bareiss cross-multiplication, whose divisions are
exact because all entries are minors of the original integer system.  This
avoids per-operation gcd work entirely while staying exact.

Bland's pivoting rule (least eligible index, both entering and leaving)
guarantees termination and makes the answer deterministic.  The systems
solved here are tiny (at most 2n free variables and ~n^3 constraints), so
no effort is spent on sparsity.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm


def feasible_point(num_vars, constraints):
    """One rational solution of {coeffs . x >= rhs}, or None when
    infeasible.  Constraint entries may be ints or rationals."""
    d = num_vars
    cons = []
    for row, b in constraints:
        row = [Fraction(c) for c in row]
        b = Fraction(b)
        den = lcm(b.denominator, *(c.denominator for c in row)) if row else b.denominator
        cons.append(([int(c * den) for c in row], int(b * den)))
    if not cons:
        return [Fraction(0)] * d
    m = len(cons)

    # columns: u_0..u_{d-1}, v_0..v_{d-1} (x = u - v), surplus, artificials
    N = 2 * d + 2 * m
    T = [[0] * N for _ in range(m)]
    rhs = [0] * m
    for r, (row, b) in enumerate(cons):
        tr = T[r]
        for j, c in enumerate(row):
            tr[j] = c
            tr[d + j] = -c
        tr[2 * d + r] = -1
        if b < 0:
            for j in range(N):
                tr[j] = -tr[j]
            b = -b
        tr[2 * d + m + r] = 1
        rhs[r] = b

    den = 1
    basis = [2 * d + m + r for r in range(m)]
    z = [0] * N
    for j in range(2 * d + m):
        z[j] = -sum(T[i][j] for i in range(m))
    obj = -sum(rhs)

    while True:
        enter = next((j for j in range(N) if z[j] < 0), None)
        if enter is None:
            break
        leave = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                if leave is None:
                    leave = i
                else:
                    lhs = rhs[i] * T[leave][enter]
                    rhsv = rhs[leave] * a
                    if lhs < rhsv or (lhs == rhsv and basis[i] < basis[leave]):
                        leave = i
        if leave is None:
            # the phase-1 objective is bounded below by zero
            raise AssertionError("phase-1 simplex unbounded")
        piv = T[leave][enter]
        prow = T[leave]
        prhs = rhs[leave]
        for i in range(m):
            if i == leave:
                continue
            row = T[i]
            f = row[enter]
            if f:
                for j in range(N):
                    row[j] = (row[j] * piv - f * prow[j]) // den
                rhs[i] = (rhs[i] * piv - f * prhs) // den
            else:
                for j in range(N):
                    row[j] = (row[j] * piv) // den
                rhs[i] = (rhs[i] * piv) // den
        f = z[enter]
        if f:
            z = [(zj * piv - f * pj) // den for zj, pj in zip(z, prow)]
            obj = (obj * piv - f * prhs) // den
        else:
            z = [(zj * piv) // den for zj in z]
            obj = (obj * piv) // den
        basis[leave] = enter
        den = piv

    if obj != 0:
        return None
    x = [Fraction(0)] * d
    for i, var in enumerate(basis):
        if var < d:
            x[var] += Fraction(rhs[i], den)
        elif var < 2 * d:
            x[var - d] -= Fraction(rhs[i], den)
    for row, b in cons:
        if sum(c * xi for c, xi in zip(row, x)) < b:
            raise AssertionError("simplex returned an infeasible point")
    return x

"""Exact two-phase simplex over Q with Bland's rule.

Solves  maximize c.x  subject to  A x = b,  x >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list | None = None
    value: Fraction | None = None


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.T = rows  # list of lists, constraint rows
        self.b = rhs
        self.basis = basis  # basic variable per row

    def pivot(self, r, c):
        T, b = self.T, self.b
        inv = 1 / T[r][c]
        T[r] = [v * inv for v in T[r]]
        b[r] *= inv
        for i in range(len(T)):
            if i != r and T[i][c] != 0:
                f = T[i][c]
                T[i] = [u - f * v for u, v in zip(T[i], T[r])]
                b[i] -= f * b[r]
        self.basis[r] = c

    def optimize(self, cost, allowed):
        """Maximize cost.x over the current basis; Bland's rule."""
        while True:
            cb = [cost[j] for j in self.basis]
            entering = None
            for j in allowed:
                if j in self.basis:
                    continue
                reduced = cost[j] - sum(cb[i] * self.T[i][j] for i in range(len(self.T)))
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return "optimal"
            best = None
            for i in range(len(self.T)):
                a = self.T[i][entering]
                if a > 0:
                    ratio = self.b[i] / a
                    cand = (ratio, self.basis[i], i)
                    if best is None or cand < best:
                        best = cand
            if best is None:
                return "unbounded"
            self.pivot(best[2], entering)


def simplex(A, b, c) -> LPResult:
    m = len(A)
    n = len(c)
    A = [[Fraction(v) for v in row] for row in A]
    b = [Fraction(v) for v in b]
    c = [Fraction(v) for v in c]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-v for v in A[i]]
            b[i] = -b[i]
    # phase 1: artificials n..n+m-1
    rows = [A[i] + [Fraction(int(i == k)) for k in range(m)] for i in range(m)]
    tab = _Tableau(rows, b[:], list(range(n, n + m)))
    phase1_cost = [Fraction(0)] * n + [Fraction(-1)] * m
    tab.optimize(phase1_cost, range(n + m))
    if sum(tab.b[i] for i in range(m) if tab.basis[i] >= n) != 0:
        return LPResult("infeasible")
    # drive remaining artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(tab.T):
        if tab.basis[i] >= n:
            col = next((j for j in range(n) if tab.T[i][j] != 0), None)
            if col is None:
                del tab.T[i], tab.b[i], tab.basis[i]
                continue
            tab.pivot(i, col)
        i += 1
    tab.T = [row[:n] for row in tab.T]
    status = tab.optimize(c, range(n))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * n
    for i, j in enumerate(tab.basis):
        x[j] = tab.b[i]
    return LPResult("optimal", x, sum(ci * xi for ci, xi in zip(c, x)))

"""Independent reference implementations used only by the test-suite.

Nothing here imports the package's LP, linear algebra or enumeration code.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def monomial_count(weights, d):
    """Coefficient of t^d in prod 1/(1 - t^a), by truncated series products."""
    series = [1] + [0] * d
    for a in weights:
        for k in range(a, d + 1):
            series[k] += series[k - a]
    return series[d]


def _solve_unique(cols, rhs):
    """Solve sum lam_k cols[k] = rhs exactly. Returns lam if the columns are
    linearly independent and the system is consistent, otherwise None."""
    m, k = len(rhs), len(cols)
    rows = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(rhs[i])] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(k):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            return None  # dependent columns
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[i][k] != 0 for i in range(r, m)):
        return None
    return [rows[i][k] for i in range(k)]


def origin_in_hull(S):
    """Caratheodory: 0 in conv(S) iff some affinely independent subset of at
    most D+1 points has 0 as a convex combination."""
    D = len(S[0])
    for size in range(1, min(len(S), D + 1) + 1):
        for sub in itertools.combinations(S, size):
            cols = [tuple(p) + (1,) for p in sub]
            lam = _solve_unique(cols, (0,) * D + (1,))
            if lam is not None and all(x >= 0 for x in lam):
                return True
    return False


def _affine_rank(S):
    base = S[0]
    diffs = [[Fraction(q[i]) - Fraction(base[i]) for i in range(len(base))] for q in S[1:]]
    rank = 0
    rows = diffs
    ncols = len(base)
    for c in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c] != 0:
                f = rows[i][c] / rows[rank][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _normal(points):
    """Normal of the hyperplane through D points in Q^D (D <= 3), or None."""
    D = len(points[0])
    if D == 1:
        return (Fraction(1),)
    v = [[Fraction(q[i]) - Fraction(points[0][i]) for i in range(D)] for q in points[1:]]
    if D == 2:
        n = (-v[0][1], v[0][0])
    else:
        a, b = v
        n = (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
    return n if any(n) else None


def facets(S):
    """Supporting hyperplanes (normal, offset) spanned by D points of S, for
    a full-dimensional point set in dimension <= 3."""
    D = len(S[0])
    out = []
    for sub in itertools.combinations(S, D):
        n = _normal(sub)
        if n is None:
            continue
        c = sum(a * Fraction(b) for a, b in zip(n, sub[0]))
        vals = [sum(a * Fraction(b) for a, b in zip(n, q)) - c for q in S]
        if all(v <= 0 for v in vals):
            out.append((n, c))
        elif all(v >= 0 for v in vals):
            out.append((tuple(-a for a in n), -c))
    return out


def brute_membership(S):
    """'Outside', 'Boundary' or 'Interior' for the origin relative to conv(S)."""
    S = [tuple(Fraction(x) for x in p) for p in dict.fromkeys(tuple(p) for p in S)]
    if not origin_in_hull(S):
        return "Outside"
    D = len(S[0])
    if _affine_rank(S) < D:
        return "Boundary"
    # 0 lies in the hull; it is interior iff it is on no facet hyperplane
    if any(c == 0 for _, c in facets(S)):
        return "Boundary"
    return "Interior"


def evaluate(terms, point):
    """Evaluate a {exponent: coefficient} polynomial at a rational point."""
    total = Fraction(0)
    for e, c in terms.items():
        v = Fraction(c)
        for x, k in zip(point, e):
            v *= Fraction(x) ** k
        total += v
    return total

"""Exact Gaussian elimination over Q."""

from fractions import Fraction


def rref(rows, ncols=None):
    """Reduced row echelon form. Returns (matrix, pivot columns)."""
    M = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows, ncols=None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows, ncols):
    """Basis of {v : rows @ v = 0} as lists of Fractions."""
    R, pivots = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for row, pc in zip(R, pivots):
            v[pc] = -row[fcol]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """One solution of rows @ x = rhs, or None if inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    R, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(R, pivots):
        x[pc] = row[ncols]
    return x

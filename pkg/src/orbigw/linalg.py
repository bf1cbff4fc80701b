"""Exact Gaussian elimination over mpq for the small systems the engine meets."""

from .rational import ONE, ZERO, mpq

__all__ = ["solve", "rank", "inverse"]


def _rref(rows, ncols):
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = ONE / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix):
    if not matrix:
        return 0
    _, piv = _rref([[mpq(v) for v in row] for row in matrix], len(matrix[0]))
    return len(piv)


def solve(matrix, rhs):
    """The unique x with matrix @ x = rhs; ZeroDivisionError if singular."""
    n = len(matrix)
    aug = [[mpq(v) for v in row] + [mpq(b)] for row, b in zip(matrix, rhs)]
    rows, piv = _rref(aug, n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [rows[i][n] for i in range(n)]


def inverse(matrix):
    n = len(matrix)
    aug = [[mpq(v) for v in row] + [ONE if i == j else ZERO for j in range(n)]
           for i, row in enumerate(matrix)]
    rows, piv = _rref(aug, n)
    if piv != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rows]

"""Exact integer linear algebra on small dense matrices.

Matrices are nested sequences of Python ints and results are plain
lists of lists. Nothing here touches floating point, so every value
stays exact no matter how large intermediate entries grow.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


class SingularMatrixError(ValueError):
    """Raised when a nonsingular square matrix is required."""


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    inner = len(B)
    cols = len(B[0])
    return [
        [sum(row[t] * B[t][j] for t in range(inner)) for j in range(cols)]
        for row in A
    ]


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def _egcd(a, b):
    """Extended Euclid: (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _check_square(A):
    n = len(A)
    if n == 0 or any(len(row) != n for row in A):
        raise ValueError("square matrix required")
    return n


def hnf_lower(A):
    """Lower-triangular Hermite normal form by unimodular column operations.

    Returns (H, T) with A @ T == H, |det T| == 1, H lower triangular with
    positive diagonal and 0 <= H[i][j] < H[i][i] for j < i. The canonical
    form makes both H and T unique for nonsingular A.

    Raises SingularMatrixError when A is singular.
    """
    n = _check_square(A)
    H = [list(map(int, row)) for row in A]
    T = identity(n)
    for i in range(n):
        for j in range(i + 1, n):
            if H[i][j] == 0:
                continue
            a, b = H[i][i], H[i][j]
            g, x, y = _egcd(a, b)
            p, q = a // g, b // g
            # right-multiply columns i, j by [[x, -q], [y, p]], det = 1
            for M in (H, T):
                for r in range(n):
                    ci, cj = M[r][i], M[r][j]
                    M[r][i] = x * ci + y * cj
                    M[r][j] = p * cj - q * ci
        if H[i][i] == 0:
            raise SingularMatrixError("matrix is singular")
        if H[i][i] < 0:
            for M in (H, T):
                for r in range(n):
                    M[r][i] = -M[r][i]
        for j in range(i):
            f = H[i][j] // H[i][i]
            if f:
                for M in (H, T):
                    for r in range(n):
                        M[r][j] -= f * M[r][i]
    return H, T


def determinant(A):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("square matrix required")
    if n == 0:
        return 1
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if M[i][k]), None)
            if piv is None:
                return 0
            M[k], M[piv] = M[piv], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[-1][-1]


def rank(A):
    """Rank over the rationals, by integer cross-multiplication echelon."""
    M = [list(map(int, row)) for row in A]
    if not M:
        return 0
    rows, cols = len(M), len(M[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            if M[i][c]:
                f1, f2 = M[r][c], M[i][c]
                M[i] = [f1 * M[i][j] - f2 * M[r][j] for j in range(cols)]
        r += 1
        if r == rows:
            break
    return r


def snf_invariant_factors(A):
    """Invariant factors d_1 | d_2 | ... | d_n of an integer matrix.

    The input must have full column rank; raises ValueError otherwise.
    Returns one positive factor per column, in divisibility order.
    """
    M = [list(map(int, row)) for row in A]
    m = len(M)
    n = len(M[0]) if M else 0
    if n == 0 or any(len(row) != n for row in M):
        raise ValueError("nonempty rectangular matrix required")
    k = min(m, n)
    for t in range(k):
        piv = next(
            ((i, j) for i in range(t, m) for j in range(t, n) if M[i][j]), None
        )
        if piv is None:
            break
        pi, pj = piv
        M[t], M[pi] = M[pi], M[t]
        for row in M:
            row[t], row[pj] = row[pj], row[t]
        while True:
            clean = True
            for i in range(t + 1, m):
                if M[i][t]:
                    a, b = M[t][t], M[i][t]
                    if b % a == 0:
                        # plain elimination keeps the pivot row fixed,
                        # so it cannot reintroduce cleared entries
                        f = b // a
                        M[i] = [M[i][j] - f * M[t][j] for j in range(n)]
                        continue
                    g, x, y = _egcd(a, b)
                    p, q = a // g, b // g
                    rt = [x * M[t][j] + y * M[i][j] for j in range(n)]
                    ri = [p * M[i][j] - q * M[t][j] for j in range(n)]
                    M[t], M[i] = rt, ri
                    clean = False
            for j in range(t + 1, n):
                if M[t][j]:
                    a, b = M[t][t], M[t][j]
                    if b % a == 0:
                        f = b // a
                        for row in M:
                            row[j] -= f * row[t]
                        continue
                    g, x, y = _egcd(a, b)
                    p, q = a // g, b // g
                    for row in M:
                        ct, cj = row[t], row[j]
                        row[t] = x * ct + y * cj
                        row[j] = p * cj - q * ct
                    clean = False
            if clean:
                break
    diag = [abs(M[i][i]) for i in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            a, b = diag[i], diag[j]
            if a == 0 and b == 0:
                continue
            g = gcd(a, b)
            diag[i], diag[j] = g, (a * b // g if g else 0)
    if m < n or any(d == 0 for d in diag[:n]):
        raise ValueError("matrix does not have full column rank")
    return diag[:n]


def kernel_vector(rows, n):
    """Primitive integer kernel generator for n-1 independent rows in Z^n.

    Component j is the signed maximal minor omitting column j, reduced to
    primitive form. Raises ValueError when the rows have rank < n-1.
    """
    if len(rows) != n - 1:
        raise ValueError("exactly n-1 rows required")
    d = []
    for j in range(n):
        minor = [[row[t] for t in range(n) if t != j] for row in rows]
        d.append((-1) ** j * determinant(minor))
    g = 0
    for x in d:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("rows do not have rank n-1")
    return [x // g for x in d]


def unimodular_inverse(T):
    """Exact inverse of a unimodular integer matrix, as integer rows."""
    n = _check_square(T)
    if determinant(T) not in (1, -1):
        raise ValueError("matrix is not unimodular")
    M = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(T)
    ]
    for c in range(n):
        piv = next(i for i in range(c, n) if M[i][c])
        M[c], M[piv] = M[piv], M[c]
        M[c] = [x / M[c][c] for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    inv = [[int(x) for x in row[n:]] for row in M]
    return inv

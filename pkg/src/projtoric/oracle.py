"""Independent checks for the combinatorial claims.

Everything here recomputes a quantity by brute force or by a different
route than the main pipeline: matrix rank by Gaussian elimination,
minimum distance by enumerating codewords, class counts by union-find
on raw congruences, polygon areas by Pick's theorem. Nothing imports
from the code module.
"""

from __future__ import annotations

import random
from functools import cmp_to_key, lru_cache
from itertools import product
from math import gcd

import numpy as np

from .gf import GF


class BudgetExceededError(Exception):
    """Raised when an exhaustive search would enumerate too many words."""


def _as_field(field):
    return field if isinstance(field, GF) else GF(field)


@lru_cache(maxsize=None)
def _np_tables(q):
    # q x q lookup tables of element codes, uint8 so fancy indexing
    # stays cheap; only built for q <= 256
    f = GF(q)
    ADD = np.array([[f.add(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    MUL = np.array([[f.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.uint8)
    return ADD, MUL


def _row_basis_py(entries, field):
    rows = [list(r) for r in entries]
    basis = []
    col = 0
    ncols = len(rows[0]) if rows else 0
    pending = rows
    while pending and col < ncols:
        piv = next((i for i, r in enumerate(pending) if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        prow = pending.pop(piv)
        inv = field.inv(prow[col])
        rest = []
        for r in pending:
            if r[col] != 0:
                c = field.mul(r[col], inv)
                r = [field.sub(x, field.mul(c, y)) for x, y in zip(r, prow)]
            rest.append(r)
        basis.append(prow)
        pending = rest
        col += 1
    return basis


def _row_basis_np(entries, field):
    q = field.q
    ADD, MUL = _np_tables(q)
    pending = [np.array(r, dtype=np.uint8) for r in entries]
    basis = []
    col = 0
    ncols = len(entries[0])
    while pending and col < ncols:
        piv = next((i for i, r in enumerate(pending) if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        prow = pending.pop(piv)
        inv = field.inv(int(prow[col]))
        rest = []
        for r in pending:
            if r[col] != 0:
                c = field.neg(field.mul(int(r[col]), inv))
                r = ADD[r, MUL[c, prow]]
            rest.append(r)
        basis.append(prow)
        pending = rest
        col += 1
    return [r.tolist() for r in basis]


def _row_basis(entries, field):
    """Row echelon basis of the row space over GF(q)."""
    if not entries or not entries[0]:
        return []
    if field.q <= 256:
        return _row_basis_np(entries, field)
    return _row_basis_py(entries, field)


def rank_gf(entries, field):
    """Rank of a matrix of element codes over GF(q)."""
    return len(_row_basis(entries, _as_field(field)))


def _exhaustive_py(basis, field):
    q = field.q
    n = len(basis[0])
    best = n + 1
    for coeffs in product(range(q), repeat=len(basis)):
        if not any(coeffs):
            continue
        word = [0] * n
        for c, row in zip(coeffs, basis):
            if c == 0:
                continue
            word = [field.add(w, field.mul(c, x)) for w, x in zip(word, row)]
        wt = sum(1 for w in word if w != 0)
        if wt < best:
            best = wt
    return best


def _exhaustive_np(basis, field):
    # meet in the middle: materialize all combinations of a small head
    # block once, then walk the remaining coefficients depth first with
    # incremental partial sums
    q = field.q
    ADD, MUL = _np_tables(q)
    B = np.array(basis, dtype=np.uint8)
    r, n = B.shape
    s = 0
    while s < r and q ** (s + 1) <= 4096:
        s += 1
    block = np.zeros((1, n), dtype=np.uint8)
    for i in range(s):
        # c = 0 comes first so the zero combination stays at index 0
        block = np.concatenate([ADD[block, MUL[c, B[i]]] for c in range(q)], axis=0)
    rest = B[s:]
    t = r - s
    best = n + 1

    def leaf(partial, zero_tail):
        nonlocal best
        wts = np.count_nonzero(ADD[block, partial], axis=1)
        if zero_tail:
            if len(wts) == 1:
                return
            w = int(wts[1:].min())
        else:
            w = int(wts.min())
        if w < best:
            best = w

    def walk(i, partial, zero_tail):
        if i == t:
            leaf(partial, zero_tail)
            return
        walk(i + 1, partial, zero_tail)
        for c in range(1, q):
            walk(i + 1, ADD[partial, MUL[c, rest[i]]], False)

    walk(0, np.zeros(n, dtype=np.uint8), True)
    return best


def min_distance_exhaustive(entries, field, budget=1 << 24):
    """True minimum distance by enumerating every nonzero codeword.

    Refuses with BudgetExceededError when q^rank exceeds the budget;
    raises ValueError on a rank-zero matrix (no nonzero words exist).
    """
    field = _as_field(field)
    basis = _row_basis(entries, field)
    if not basis:
        raise ValueError("zero matrix spans no nonzero codewords")
    if field.q ** len(basis) > budget:
        raise BudgetExceededError(
            f"q^k = {field.q ** len(basis)} exceeds the budget of {budget} words"
        )
    if field.q <= 256:
        return _exhaustive_np(basis, field)
    return _exhaustive_py(basis, field)


def min_weight_random_upper(entries, field, iterations=200, seed=0):
    """Upper bound on the minimum distance from random codewords."""
    field = _as_field(field)
    basis = _row_basis(entries, field)
    if not basis:
        raise ValueError("zero matrix spans no nonzero codewords")
    rng = random.Random(seed)
    q = field.q
    n = len(basis[0])
    best = n
    for _ in range(iterations):
        coeffs = [rng.randrange(q) for _ in basis]
        if not any(coeffs):
            coeffs[rng.randrange(len(coeffs))] = 1 + rng.randrange(q - 1)
        word = [0] * n
        for c, row in zip(coeffs, basis):
            if c == 0:
                continue
            word = [field.add(w, field.mul(c, x)) for w, x in zip(word, row)]
        best = min(best, sum(1 for w in word if w != 0))
    return best


def reduction_class_count_unionfind(P, field):
    """Number of reduction classes by raw pairwise merging.

    Uses only tight facet sets and coordinate congruences mod q-1,
    bypassing the face lattice entirely.
    """
    q = field.q if isinstance(field, GF) else _as_field(field).q
    pts = list(P.lattice_points)
    tight = [P.tight_facets(m) for m in pts]
    parent = list(range(len(pts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if tight[i] != tight[j]:
                continue
            if all((a - b) % (q - 1) == 0 for a, b in zip(pts[i], pts[j])):
                pi, pj = find(i), find(j)
                if pi != pj:
                    parent[pi] = pj
    return sum(1 for i in range(len(pts)) if find(i) == i)


def _ccw_vertices(vertices):
    # exact angular sort around the centroid, scaled by the vertex
    # count to stay in integers
    r = len(vertices)
    sx = sum(v[0] for v in vertices)
    sy = sum(v[1] for v in vertices)

    def half(w):
        return 0 if w[1] > 0 or (w[1] == 0 and w[0] > 0) else 1

    def compare(a, b):
        wa = (r * a[0] - sx, r * a[1] - sy)
        wb = (r * b[0] - sx, r * b[1] - sy)
        if half(wa) != half(wb):
            return half(wa) - half(wb)
        cross = wa[0] * wb[1] - wa[1] * wb[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(vertices, key=cmp_to_key(compare))


def pick_check(P):
    """Pick's theorem audit for a polygon: 2A = 2I + B - 2.

    Area comes from the shoelace formula over the cyclically sorted
    vertices, boundary count from edge gcds, interior count from a box
    scan. Only defined in dimension 2.
    """
    if P.dim != 2:
        raise ValueError("Pick's theorem applies to polygons only")
    cyc = _ccw_vertices(P.vertices)
    r = len(cyc)
    area2 = sum(
        cyc[i][0] * cyc[(i + 1) % r][1] - cyc[(i + 1) % r][0] * cyc[i][1]
        for i in range(r)
    )
    boundary = sum(
        gcd(abs(cyc[(i + 1) % r][0] - cyc[i][0]), abs(cyc[(i + 1) % r][1] - cyc[i][1]))
        for i in range(r)
    )
    interior = sum(1 for m in P.lattice_points if not P.tight_facets(m))
    total_ok = len(P.lattice_points) == interior + boundary
    return total_ok and area2 == 2 * interior + boundary - 2

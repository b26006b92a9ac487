"""Variety-level data derived from a polytope.

The evaluation-code construction needs two hypotheses: the polytope
must be simple (every vertex on exactly dim facets) and the field
characteristic must divide none of the vertex determinants, the
determinants of the matrices of facet normals meeting at each vertex.
This module checks those, counts rational points face by face, builds
flags of faces together with the straightening maps that put each face
onto a coordinate subspace, and reports the Picard invariants of the
normal matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf import prime_power
from .intlat import (
    determinant,
    hnf_lower,
    mat_vec,
    snf_invariant_factors,
    unimodular_inverse,
)


class HypothesisError(Exception):
    """Raised when a construction requires hypotheses the input fails."""


def vertex_determinants(P):
    """|det| of the facet normals meeting at each vertex, in vertex order.

    Defined for simple polytopes only; raises HypothesisError otherwise.
    """
    out = []
    for v in P.vertices:
        tight = P.tight_facets(v)
        if len(tight) != P.dim:
            raise HypothesisError(
                f"vertex {v} lies on {len(tight)} facets; polytope is not simple"
            )
        out.append(abs(determinant([list(P.normals[i]) for i in tight])))
    return tuple(out)


@dataclass(frozen=True)
class HypothesisReport:
    """Outcome of the two construction hypotheses for a (P, q) pair.

    determinants is None when the polytope is not simple. offenders
    lists the vertices whose determinant the characteristic divides.
    """

    q: int
    characteristic: int
    simple: bool
    determinants: tuple
    offenders: tuple

    @property
    def h2_ok(self):
        return self.simple and not self.offenders

    @property
    def ok(self):
        return self.simple and self.h2_ok


def check_hypotheses(P, q):
    """Report whether the pair (P, q) supports the code construction.

    Never raises on a failing polytope; the report carries the failure.
    """
    p, _ = prime_power(q)
    if not P.is_simple():
        return HypothesisReport(q, p, False, None, ())
    dets = vertex_determinants(P)
    offenders = tuple(
        v for v, d in zip(P.vertices, dets) if d % p == 0
    )
    return HypothesisReport(q, p, True, dets, offenders)


def require_hypotheses(P, q):
    """check_hypotheses, raising HypothesisError on any failure."""
    report = check_hypotheses(P, q)
    if not report.simple:
        raise HypothesisError("polytope is not simple")
    if not report.h2_ok:
        raise HypothesisError(
            f"characteristic {report.characteristic} divides the vertex "
            f"determinant at {report.offenders[0]}"
        )
    return report


def count_rational_points(P, q):
    """Rational points of the variety of P over a q-element field.

    One torus orbit of size (q-1)^k per k-face, so the count is
    sum over faces of (q-1)^dim.
    """
    return sum((q - 1) ** f.dim for f in P.faces)


def picard_invariants(P):
    """(free rank, torsion factors) of the class group of the variety.

    Computed from the Smith invariant factors of the facet normal
    matrix: free rank is #facets - dim, torsion collects the invariant
    factors exceeding 1.
    """
    factors = snf_invariant_factors([list(u) for u in P.normals])
    return len(P.normals) - P.dim, tuple(d for d in factors if d > 1)


@dataclass(frozen=True)
class Flag:
    """A maximal chain of faces with its straightening data.

    chain holds one face of each dimension 0..dim, ending at the
    polytope itself. facet_order lists the facets through the base
    vertex, ordered so the first dim-j of them cut out the j-face.
    normal_matrix stacks their normals; transform is the column
    operation (Hermite transform with columns reversed) whose inverse
    sends m - base_vertex to straightened coordinates, and
    hnf_diagonal records the diagonal of the Hermite form.
    """

    polytope: object
    chain: tuple
    base_vertex: tuple
    facet_order: tuple
    normal_matrix: tuple
    transform: tuple
    inverse_transform: tuple
    hnf_diagonal: tuple

    def exponents(self, point):
        """Straightened coordinates of any lattice point, base at 0.

        For a point on the j-face of the chain, all but the first j
        coordinates are zero.
        """
        return tuple(
            mat_vec(
                [list(r) for r in self.inverse_transform],
                [a - b for a, b in zip(point, self.base_vertex)],
            )
        )


def flag_for_chain(P, chain):
    """Straightening data for a maximal chain of faces of P.

    chain must hold one face of each dimension 0..dim, each a subface
    of the next, ending at P itself.
    """
    chain = tuple(chain)
    if len(chain) != P.dim + 1 or any(f.dim != d for d, f in enumerate(chain)):
        raise ValueError("chain must hold one face of each dimension")
    for small, big in zip(chain, chain[1:]):
        if not set(small.vertex_indices) <= set(big.vertex_indices):
            raise ValueError("chain faces are not nested")
    if chain[-1].facet_indices != ():
        raise ValueError("chain must end at the polytope itself")
    n = P.dim
    sets = [set(f.facet_indices) for f in chain]
    order = []
    for i in range(1, n + 1):
        dropped = sets[n - i] - sets[n - i + 1]
        if len(dropped) != 1:
            raise HypothesisError("chain does not peel one facet per step")
        order.append(dropped.pop())
    A = [list(P.normals[f]) for f in order]
    H, T = hnf_lower(A)
    transform = [[row[n - 1 - j] for j in range(n)] for row in T]
    inverse = unimodular_inverse(transform)
    base = P.vertices[chain[0].anchor]
    return Flag(
        P,
        chain,
        base,
        tuple(order),
        tuple(tuple(r) for r in A),
        tuple(tuple(r) for r in transform),
        tuple(tuple(r) for r in inverse),
        tuple(H[i][i] for i in range(n)),
    )


def straighten(flag, point):
    """Straightened coordinates of a lattice point on one of the flag's
    faces: for a point of the j-face, the last dim - j entries are zero.

    Raises ValueError when the point lies outside the polytope.
    """
    P = flag.polytope
    if not P.contains(point):
        raise ValueError(f"{tuple(point)} lies outside the polytope")
    return flag.exponents(point)


def build_flags(P, reverse=False):
    """A deterministic list of flags whose chains cover every face.

    With reverse=True the sweep runs in the opposite canonical order,
    which generally yields a different cover; comparing the two checks
    that downstream results do not depend on the choice. Polygons get
    a boundary walk (one flag per vertex); other dimensions a greedy
    cover with a repair pass for faces the greedy sweep missed.
    """
    if not P.is_simple():
        raise HypothesisError("flags require a simple polytope")
    if P.dim == 2:
        return _polygon_flags(P, reverse)
    faces = P.faces
    by_dim = [list(P.faces_of_dim(d)) for d in range(P.dim + 1)]

    def ordered(fs):
        return sorted(fs, key=lambda f: f.vertex_indices, reverse=reverse)

    covered = set()

    def chain_through(face):
        chain = [face]
        cur = face
        for d in range(face.dim - 1, -1, -1):
            cands = ordered(
                g
                for g in by_dim[d]
                if set(g.vertex_indices) <= set(cur.vertex_indices)
            )
            cur = next((g for g in cands if g not in covered), cands[0])
            chain.insert(0, cur)
        cur = face
        for d in range(face.dim + 1, P.dim + 1):
            cands = ordered(
                g
                for g in by_dim[d]
                if set(cur.vertex_indices) <= set(g.vertex_indices)
            )
            cur = next((g for g in cands if g not in covered), cands[0])
            chain.append(cur)
        return chain

    flags = []

    def emit(face):
        chain = chain_through(face)
        flags.append(flag_for_chain(P, chain))
        covered.update(chain)

    for v in ordered(by_dim[0]):
        emit(v)
    for f in ordered(faces):
        if f not in covered:
            emit(f)
    return flags


def _polygon_flags(P, reverse):
    # walk the boundary cycle so r flags cover all r vertices and r edges
    verts = P.faces_of_dim(0)
    edges = P.faces_of_dim(1)
    nbr = {}
    for e in edges:
        i, j = e.vertex_indices
        nbr.setdefault(i, []).append(j)
        nbr.setdefault(j, []).append(i)
    pick = max if reverse else min
    start = verts[-1].vertex_indices[0] if reverse else verts[0].vertex_indices[0]
    cycle = [start]
    cur, nxt = start, pick(nbr[start])
    while nxt != start:
        cycle.append(nxt)
        cur, nxt = nxt, next(k for k in nbr[nxt] if k != cur)
    by_vertex = {f.vertex_indices[0]: f for f in verts}
    by_edge = {f.vertex_indices: f for f in edges}
    top = P.faces[0]
    flags = []
    r = len(cycle)
    for t in range(r):
        a, b = cycle[t], cycle[(t + 1) % r]
        edge = by_edge[tuple(sorted((a, b)))]
        flags.append(flag_for_chain(P, (by_vertex[a], edge, top)))
    return flags


def flag_assignment(P, flags):
    """Map each face of P to the first flag whose chain contains it."""
    assign = {}
    for f in P.faces:
        flag = next((fl for fl in flags if f in fl.chain), None)
        if flag is None:
            raise ValueError(f"no flag covers the face {f.vertex_indices}")
        assign[f] = flag
    return assign

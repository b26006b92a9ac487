"""Full-dimensional lattice polytopes with exact facet descriptions.

A polytope lives in Z^N and is stored by its lexicographically sorted
vertex tuple together with facet inequalities <m, u> >= -a, one per
facet, where u is the primitive inner normal and a the offset. Both
representations are validated against each other on construction, so
downstream code can trust vertices, facets, and the face lattice to
be mutually consistent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import gcd

from .intlat import kernel_vector, rank


class PolytopeError(ValueError):
    """Raised when input data does not describe a valid lattice polytope."""


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _affine_rank(points):
    base = points[0]
    diffs = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    return rank(diffs)


def _as_lattice_point(p, n=None):
    t = tuple(p)
    if not t or any(not isinstance(x, int) for x in t):
        raise PolytopeError(f"{p!r} is not a nonempty tuple of ints")
    if n is not None and len(t) != n:
        raise PolytopeError(f"point {p!r} does not have {n} coordinates")
    return t


def _solve_square(rows, rhs):
    # exact Gaussian elimination; None when the system is singular
    n = len(rows)
    M = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return None
        M[c], M[piv] = M[piv], M[c]
        M[c] = [x / M[c][c] for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [M[i][n] for i in range(n)]


@dataclass(frozen=True)
class Face:
    """One face of a polytope, identified by its vertex index set."""

    vertex_indices: tuple
    facet_indices: tuple
    dim: int

    @property
    def anchor(self):
        """Distinguished vertex index, used to base straightening maps."""
        return self.vertex_indices[0]


@dataclass(frozen=True)
class HalfspaceRegion:
    """Intersection of halfspaces <m, u_i> >= -a_i, possibly unbounded."""

    normals: tuple
    offsets: tuple

    def contains(self, point):
        return all(
            _dot(point, u) >= -a for u, a in zip(self.normals, self.offsets)
        )


@dataclass(frozen=True)
class Polytope:
    """A full-dimensional lattice polytope in Z^dim.

    Build instances through from_vertices or from_vrep_hrep; the bare
    constructor performs no validation. normals[i]/offsets[i] describe
    facet i, and facets are sorted by normal tuple, vertices
    lexicographically.
    """

    dim: int
    vertices: tuple
    normals: tuple
    offsets: tuple

    @classmethod
    def from_vertices(cls, points):
        """Convex hull of the given lattice points, for dimension <= 3.

        Points that are not vertices of the hull are dropped. The hull
        must be full-dimensional in the ambient space; in dimension 4
        and up, supply facets explicitly through from_vrep_hrep.
        """
        pts = sorted({_as_lattice_point(p) for p in points})
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise PolytopeError("points have mixed dimensions")
        if n > 3:
            raise PolytopeError(
                "facet enumeration from vertices is supported up to dimension 3"
            )
        if _affine_rank(pts) != n:
            raise PolytopeError("hull is not full-dimensional")
        facets = {}
        for combo in combinations(pts, n):
            diffs = [[x - b for x, b in zip(p, combo[0])] for p in combo[1:]]
            if rank(diffs) != n - 1:
                continue
            u = kernel_vector(diffs, n)
            vals = [_dot(p, u) for p in pts]
            c = _dot(combo[0], u)
            if c == min(vals):
                facets[tuple(u)] = -c
            if c == max(vals):
                facets[tuple(-x for x in u)] = c
        normals = sorted(facets)
        offsets = [facets[u] for u in normals]
        verts = []
        for p in pts:
            tight = [u for u, a in zip(normals, offsets) if _dot(p, u) == -a]
            if rank(tight) == n:
                verts.append(p)
        return cls(n, tuple(verts), tuple(normals), tuple(offsets))

    @classmethod
    def from_vrep_hrep(cls, vertices, normals, offsets):
        """Build from an explicit vertex list and facet inequalities.

        normals[i]/offsets[i] describe the inequality <m, u> >= -a of
        facet i. The two descriptions are cross-validated: every
        inequality must define a genuine facet, every listed point must
        be a vertex, the polyhedron must be bounded, and no vertex of
        the inequality system may be missing from the list.
        """
        verts = [_as_lattice_point(v) for v in vertices]
        if len(set(verts)) != len(verts):
            raise PolytopeError("duplicate vertices")
        n = len(verts[0])
        for v in verts:
            _as_lattice_point(v, n)
        if _affine_rank(verts) != n:
            raise PolytopeError("vertices do not span the ambient space")
        if len(normals) != len(offsets):
            raise PolytopeError("normals and offsets differ in length")
        clean_normals = []
        clean_offsets = []
        for normal, offset in zip(normals, offsets):
            u = _as_lattice_point(normal, n)
            g = 0
            for x in u:
                g = gcd(g, x)
            if g != 1:
                raise PolytopeError(f"facet normal {u} is not primitive")
            if not isinstance(offset, int):
                raise PolytopeError(f"facet offset {offset!r} is not an int")
            clean_normals.append(u)
            clean_offsets.append(offset)
        normals, offsets = clean_normals, clean_offsets
        if len(set(normals)) != len(normals):
            raise PolytopeError("duplicate facet normals")
        if rank(normals) != n:
            raise PolytopeError("facet normals do not span the ambient space")
        for v in verts:
            for u, a in zip(normals, offsets):
                if _dot(v, u) < -a:
                    raise PolytopeError(f"vertex {v} violates facet {u}")
        for u, a in zip(normals, offsets):
            tight = [v for v in verts if _dot(v, u) == -a]
            if not tight or _affine_rank(tight) != n - 1:
                raise PolytopeError(f"inequality {u} >= {-a} is not a facet")
        for v in verts:
            tight = [u for u, a in zip(normals, offsets) if _dot(v, u) == -a]
            if rank(tight) != n:
                raise PolytopeError(f"listed point {v} is not a vertex")
        r = len(normals)
        for combo in combinations(range(r), n - 1):
            rows = [normals[i] for i in combo]
            try:
                d = kernel_vector(rows, n)
            except ValueError:
                continue
            for s in (d, [-x for x in d]):
                if all(_dot(s, u) >= 0 for u in normals):
                    raise PolytopeError("inequalities describe an unbounded set")
        vert_set = set(verts)
        for combo in combinations(range(r), n):
            rows = [normals[i] for i in combo]
            sol = _solve_square(rows, [-offsets[i] for i in combo])
            if sol is None:
                continue
            if any(
                sum(Fraction(x) * s for x, s in zip(u, sol)) < -a
                for u, a in zip(normals, offsets)
            ):
                continue
            if any(s.denominator != 1 for s in sol):
                raise PolytopeError(f"inequality system has non-lattice vertex {sol}")
            if tuple(int(s) for s in sol) not in vert_set:
                raise PolytopeError(f"vertex {sol} missing from the vertex list")
        order = sorted(range(r), key=lambda i: normals[i])
        return cls(
            n,
            tuple(sorted(verts)),
            tuple(normals[i] for i in order),
            tuple(offsets[i] for i in order),
        )

    def contains(self, point):
        return all(
            _dot(point, u) >= -a for u, a in zip(self.normals, self.offsets)
        )

    def tight_facets(self, point):
        """Indices of facets whose inequality is tight at the point."""
        return tuple(
            i
            for i, (u, a) in enumerate(zip(self.normals, self.offsets))
            if _dot(point, u) == -a
        )

    @cached_property
    def lattice_points(self):
        """All lattice points of the polytope, in lexicographic order."""
        lo = [min(v[i] for v in self.vertices) for i in range(self.dim)]
        hi = [max(v[i] for v in self.vertices) for i in range(self.dim)]
        ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
        return tuple(p for p in product(*ranges) if self.contains(p))

    @cached_property
    def faces(self):
        """Every face of the polytope, the polytope itself included.

        Faces are computed as the intersection closure of the facet
        tight-vertex sets and ordered by decreasing dimension, then by
        vertex index tuple.
        """
        tight_sets = [
            frozenset(
                i for i, v in enumerate(self.vertices) if _dot(v, u) == -a
            )
            for u, a in zip(self.normals, self.offsets)
        ]
        full = frozenset(range(len(self.vertices)))
        found = {full}
        frontier = [full]
        while frontier:
            s = frontier.pop()
            for t in tight_sets:
                x = s & t
                if x and x not in found:
                    found.add(x)
                    frontier.append(x)
        faces = []
        for s in found:
            idx = tuple(sorted(s))
            fdim = _affine_rank([self.vertices[i] for i in idx])
            fidx = tuple(f for f, t in enumerate(tight_sets) if s <= t)
            faces.append(Face(idx, fidx, fdim))
        faces.sort(key=lambda f: (-f.dim, f.vertex_indices))
        return tuple(faces)

    def faces_of_dim(self, d):
        return tuple(f for f in self.faces if f.dim == d)

    def face_lattice(self):
        """Faces grouped by dimension: entry d holds the d-faces."""
        return tuple(self.faces_of_dim(d) for d in range(self.dim + 1))

    def is_simple(self):
        """Whether every vertex lies on exactly dim facets."""
        return all(
            len(self.tight_facets(v)) == self.dim for v in self.vertices
        )

    def face_contains(self, face, point):
        """Whether a lattice point of P lies on the given face."""
        return set(self.tight_facets(point)) >= set(face.facet_indices)

    def interior_lattice_points(self, face):
        """Lattice points whose minimal containing face is the given one,
        i.e. the relative interior of the face. Pass the top face for the
        interior of the polytope itself."""
        return tuple(
            m
            for m in self.lattice_points
            if self.tight_facets(m) == face.facet_indices
        )

    def dilate(self, factor):
        """The scaled polytope factor * P, for a positive integer factor."""
        if not isinstance(factor, int) or factor < 1:
            raise PolytopeError(f"dilation factor must be a positive int, got {factor!r}")
        return Polytope(
            self.dim,
            tuple(tuple(factor * x for x in v) for v in self.vertices),
            self.normals,
            tuple(factor * a for a in self.offsets),
        )


def same_normal_fan(P, Q):
    """Whether two polytopes have identical normal fans.

    Equivalent to having the same facet normal set and the same
    collection of vertex cones (sets of facet normals tight at a
    vertex).
    """
    if P.dim != Q.dim or set(P.normals) != set(Q.normals):
        return False

    def cones(R):
        return sorted(
            tuple(sorted(R.normals[f] for f in R.tight_facets(v)))
            for v in R.vertices
        )

    return cones(P) == cones(Q)


def offset_difference(outer, inner):
    """Halfspace region with outer's normals and offsets a_out - a_in.

    Both polytopes must share the same facet normal set; offsets are
    matched facet by facet through the normal.
    """
    if set(outer.normals) != set(inner.normals):
        raise PolytopeError("polytopes do not share facet normals")
    by_normal = dict(zip(inner.normals, inner.offsets))
    return HalfspaceRegion(
        outer.normals,
        tuple(a - by_normal[u] for u, a in zip(outer.normals, outer.offsets)),
    )

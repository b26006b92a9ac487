"""Evaluation codes of lattice polytopes over finite fields.

The generator matrix has one row per lattice point of P (a monomial)
and one column per rational point of the variety, columns grouped into
blocks, one block per face. Straightening coordinates turn each
diagonal block into a Vandermonde-type matrix, and the whole matrix is
block lower triangular: an entry is nonzero exactly when the row's
point lies on the column's face. Dimension comes from counting
congruence classes mod q-1 face by face, and the distance bound from
counting reduced points of a surjective enlargement inside a
translated offset-difference region.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .gf import GF
from .polytope import offset_difference, same_normal_fan
from .variety import build_flags, flag_assignment, require_hypotheses, count_rational_points


class SurjectivityError(ValueError):
    """Raised when a distance bound is asked from a non-surjective pair."""


def _as_field(field):
    return field if isinstance(field, GF) else GF(field)


@dataclass(frozen=True)
class OrderSpec:
    """An addition-compatible total order on Z^N, usable as a sort key.

    kinds: lex, grlex (total degree then lex), permlex (lex after a
    coordinate permutation), wlex (weight vector then lex).
    """

    kind: str
    perm: tuple = ()
    weights: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "permlex", "wlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == "permlex" and sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm!r} is not a permutation")
        if self.kind == "wlex" and not self.weights:
            raise ValueError("wlex requires a weight vector")

    @classmethod
    def lex(cls):
        return cls("lex")

    @classmethod
    def grlex(cls):
        return cls("grlex")

    @classmethod
    def permlex(cls, perm):
        return cls("permlex", perm=tuple(perm))

    @classmethod
    def wlex(cls, weights):
        return cls("wlex", weights=tuple(weights))

    @property
    def name(self):
        if self.kind == "permlex":
            return "permlex:" + ",".join(map(str, self.perm))
        if self.kind == "wlex":
            return "wlex:" + ",".join(map(str, self.weights))
        return self.kind

    def key(self, point):
        if self.kind == "lex":
            return tuple(point)
        if self.kind == "grlex":
            return (sum(point), tuple(point))
        if self.kind == "permlex":
            return tuple(point[i] for i in self.perm)
        return (sum(w * x for w, x in zip(self.weights, point)), tuple(point))


def stock_orders(dim):
    """Default order set: lex, grlex, and reversed-coordinate lex."""
    orders = [OrderSpec.lex(), OrderSpec.grlex()]
    if dim >= 2:
        orders.append(OrderSpec.permlex(reversed(range(dim))))
    return orders


def ordered_lattice_points(P):
    """Lattice points of P in row order: interior of P first, then
    interiors of faces by decreasing dimension, vertices last."""
    return tuple(m for f in P.faces for m in P.interior_lattice_points(f))


def block_matrix(P, Q, flag, field):
    """The columns of the evaluation matrix belonging to one face.

    Rows run over all lattice points of P in row order; columns over
    the (q-1)^dim(Q) unit tuples of the face's torus orbit. A row is
    zero when its point misses Q, and otherwise holds the products of
    unit powers given by the flag's straightening (negative exponents
    are evaluated through field inversion).
    """
    field = _as_field(field)
    if Q not in flag.chain:
        raise ValueError("flag does not contain the face")
    k = Q.dim
    cols = list(product(field.units, repeat=k))
    rows = []
    for m in ordered_lattice_points(P):
        if not P.face_contains(Q, m):
            rows.append((0,) * len(cols))
            continue
        e = flag.exponents(m)[:k]
        row = []
        for x in cols:
            val = 1
            for base, exp in zip(x, e):
                val = field.mul(val, field.pow(base, exp))
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class EvaluationMatrix:
    """Generator matrix of the code of P with its index bookkeeping.

    entries holds element codes of GF(q). Row i evaluates the monomial
    of row_points[i], which lies in the interior of
    faces[row_face_index[i]]. Column j belongs to the orbit block of
    faces[col_face_index[j]]; blocks appear in decreasing face
    dimension and have widths block_widths.
    """

    field: GF
    polytope: object
    entries: tuple
    row_points: tuple
    row_face_index: tuple
    faces: tuple
    block_widths: tuple
    col_face_index: tuple

    @property
    def q(self):
        return self.field.q

    @property
    def shape(self):
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    def torus_columns(self):
        """Indices of the columns of the dense torus block."""
        return tuple(
            j
            for j, fi in enumerate(self.col_face_index)
            if self.faces[fi].dim == self.polytope.dim
        )

    def structural_violations(self):
        """Entries breaking the zero pattern: nonzero off the column's
        face, or zero on it. Empty on a correctly assembled matrix."""
        P = self.polytope
        bad = []
        for i, m in enumerate(self.row_points):
            tight = set(P.tight_facets(m))
            for j, fi in enumerate(self.col_face_index):
                member = tight >= set(self.faces[fi].facet_indices)
                if (self.entries[i][j] != 0) != member:
                    bad.append((i, j))
        return bad


def generator_matrix(P, field, flags=None):
    """Evaluation matrix of all monomials of P at all rational points.

    Deterministic given the canonical face and point orderings; a
    custom flag cover may be supplied, any cover yields an equivalent
    code.
    """
    field = _as_field(field)
    require_hypotheses(P, field.q)
    if flags is None:
        flags = build_flags(P)
    assign = flag_assignment(P, flags)
    faces = P.faces
    blocks = [block_matrix(P, Q, assign[Q], field) for Q in faces]
    rows = []
    fi_of_row = []
    for fi, f in enumerate(faces):
        for m in P.interior_lattice_points(f):
            rows.append(m)
            fi_of_row.append(fi)
    entries = tuple(
        tuple(x for block in blocks for x in block[i]) for i in range(len(rows))
    )
    widths = tuple((field.q - 1) ** f.dim for f in faces)
    col_face_index = tuple(
        fi for fi, w in enumerate(widths) for _ in range(w)
    )
    return EvaluationMatrix(
        field,
        P,
        entries,
        tuple(rows),
        tuple(fi_of_row),
        faces,
        widths,
        col_face_index,
    )


def toric_generator_matrix(P, field):
    """Generator matrix of the classical toric code: the same monomials
    evaluated only on the dense torus, entry t^m for t in units^dim."""
    field = _as_field(field)
    require_hypotheses(P, field.q)
    cols = list(product(field.units, repeat=P.dim))
    rows = []
    for m in ordered_lattice_points(P):
        row = []
        for t in cols:
            val = 1
            for base, exp in zip(t, m):
                val = field.mul(val, field.pow(base, exp))
            row.append(val)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class ReductionSet:
    """Face-by-face reduction of the lattice points of P mod q-1.

    mapping sends every lattice point to the representative of its
    class (same face interior, congruent coordinates); representatives
    lists one order-minimal point per class.
    """

    order: OrderSpec
    mapping: dict
    representatives: tuple


def _points_by_face(P):
    # one pass over the lattice points: the tight facet set of a point
    # names the minimal face containing it
    index = {f.facet_indices: i for i, f in enumerate(P.faces)}
    buckets = [[] for _ in P.faces]
    for m in P.lattice_points:
        buckets[index[P.tight_facets(m)]].append(m)
    return buckets


def _face_class_groups(P, q):
    groups = []
    for bucket in _points_by_face(P):
        per = {}
        for m in bucket:
            per.setdefault(tuple(x % (q - 1) for x in m), []).append(m)
        groups.extend(per.values())
    return groups


def _reduction_count(P, q):
    total = 0
    for bucket in _points_by_face(P):
        total += len({tuple(x % (q - 1) for x in m) for m in bucket})
    return total


def projective_reduction(P, field, order=None):
    """Reduce the lattice points of P face interior by face interior.

    Two points merge when they lie in the same face's relative interior
    and differ by a multiple of q-1 in every coordinate; each class is
    represented by its order-minimal member.
    """
    q = field.q if isinstance(field, GF) else _as_field(field).q
    if order is None:
        order = OrderSpec.lex()
    mapping = {}
    reps = []
    for bucket in _points_by_face(P):
        per = {}
        for m in bucket:
            per.setdefault(tuple(x % (q - 1) for x in m), []).append(m)
        face_reps = []
        for group in per.values():
            rep = min(group, key=order.key)
            face_reps.append(rep)
            for m in group:
                mapping[m] = rep
        reps.extend(sorted(face_reps, key=order.key))
    return ReductionSet(order, mapping, tuple(reps))


def toric_reduction(points, field, order=None):
    """Plain reduction mod q-1 of a set of lattice points, faces ignored.

    Returns one order-minimal representative per congruence class.
    """
    q = field.q if isinstance(field, GF) else _as_field(field).q
    if order is None:
        order = OrderSpec.lex()
    per = {}
    for m in points:
        m = tuple(m)
        per.setdefault(tuple(x % (q - 1) for x in m), []).append(m)
    return tuple(
        sorted((min(g, key=order.key) for g in per.values()), key=order.key)
    )


def dimension(P, field):
    """Dimension of the code: the number of reduced points of P."""
    field = _as_field(field)
    require_hypotheses(P, field.q)
    return len(projective_reduction(P, field).representatives)


def is_surjective(Pbig, P, field):
    """Whether Pbig evaluates onto the full space of the points of P.

    Requires the same normal fan, facet offsets dominating those of P,
    and as many reduced points as rational points: each k-face interior
    of Pbig must then carry all (q-1)^k congruence classes.
    """
    q = field.q if isinstance(field, GF) else _as_field(field).q
    if not same_normal_fan(Pbig, P):
        return False
    base = dict(zip(P.normals, P.offsets))
    if any(a < base[u] for u, a in zip(Pbig.normals, Pbig.offsets)):
        return False
    return _reduction_count(Pbig, q) == count_rational_points(P, q)


def find_surjective_dilate(P, field, lambda_max=16):
    """Smallest factor lam <= lambda_max with lam*P surjective over P,
    or None when no such factor exists in range."""
    for lam in range(1, lambda_max + 1):
        if is_surjective(P.dilate(lam), P, field):
            return lam
    return None


@dataclass(frozen=True)
class BoundDetails:
    """Distance bound with the per-representative survivor counts."""

    bound: int
    order: OrderSpec
    reduced: tuple
    counts: tuple

    def attained_at(self):
        return tuple(
            m for m, c in zip(self.reduced, self.counts) if c == self.bound
        )


def distance_lower_bound_details(P, Pbig, field, order=None):
    """Distance bound together with the count behind each reduced point.

    For each reduced point m of P, counts the reduced points of Pbig
    whose difference from m satisfies every offset-difference
    inequality; the minimum count bounds the minimum distance from
    below. Raises SurjectivityError unless Pbig is surjective over P.
    """
    if order is None:
        order = OrderSpec.lex()
    if not is_surjective(Pbig, P, field):
        raise SurjectivityError("enlarged polytope is not surjective over the base")
    region = offset_difference(Pbig, P)
    small = projective_reduction(P, field, order).representatives
    large = projective_reduction(Pbig, field, order).representatives
    counts = tuple(
        sum(
            1
            for m2 in large
            if region.contains(tuple(a - b for a, b in zip(m2, m)))
        )
        for m in small
    )
    return BoundDetails(min(counts), order, small, counts)


def distance_lower_bound(P, Pbig, field, order=None):
    """Lower bound on the minimum distance of the code of P."""
    return distance_lower_bound_details(P, Pbig, field, order).bound


def best_bound_over_orders(P, Pbig, field, orders=None):
    """(best bound, achieving order) over a set of monomial orders.

    The congruence classes are computed once; only the representative
    choice varies with the order. Ties keep the earliest order.
    """
    q = field.q if isinstance(field, GF) else _as_field(field).q
    if orders is None:
        orders = stock_orders(P.dim)
    orders = list(orders)
    if not orders:
        raise ValueError("empty order list")
    if not is_surjective(Pbig, P, field):
        raise SurjectivityError("enlarged polytope is not surjective over the base")
    region = offset_difference(Pbig, P)
    small_groups = _face_class_groups(P, q)
    large_groups = _face_class_groups(Pbig, q)
    best = None
    best_order = None
    for order in orders:
        small = [min(g, key=order.key) for g in small_groups]
        large = [min(g, key=order.key) for g in large_groups]
        bound = min(
            sum(
                1
                for m2 in large
                if region.contains(tuple(a - b for a, b in zip(m2, m)))
            )
            for m in small
        )
        if best is None or bound > best:
            best, best_order = bound, order
    return best, best_order


def subcode_matrix(M, rows=None, cols=None):
    """Submatrix of an evaluation matrix, orderings preserved.

    rows selects lattice points (all when None); cols selects column
    indices (all when None). Raises ValueError on an empty selection or
    an unknown row point.
    """
    if rows is None:
        ridx = list(range(len(M.row_points)))
    else:
        index = {m: i for i, m in enumerate(M.row_points)}
        ridx = []
        for m in rows:
            m = tuple(m)
            if m not in index:
                raise ValueError(f"{m} is not a row of the matrix")
            ridx.append(index[m])
    width = M.shape[1]
    if cols is None:
        cidx = list(range(width))
    else:
        cidx = list(cols)
        if any(not (0 <= j < width) for j in cidx):
            raise ValueError("column index out of range")
    if not ridx or not cidx:
        raise ValueError("empty selection")
    return tuple(tuple(M.entries[i][j] for j in cidx) for i in ridx)

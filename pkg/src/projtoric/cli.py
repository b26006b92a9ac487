"""Command-line front end.

Reads polytope documents (JSON), runs the constructions, and emits
matrices and parameter reports. Exit codes: 0 success, 1 verification
failure, 2 validation error, 3 hypothesis failure, 4 budget refusal.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .code import (
    OrderSpec,
    best_bound_over_orders,
    dimension,
    distance_lower_bound,
    find_surjective_dilate,
    generator_matrix,
    projective_reduction,
    stock_orders,
    subcode_matrix,
)
from .gf import GF, FieldError
from .oracle import (
    BudgetExceededError,
    min_distance_exhaustive,
    min_weight_random_upper,
    pick_check,
    rank_gf,
    reduction_class_count_unionfind,
)
from .polytope import Polytope, PolytopeError
from .variety import HypothesisError, check_hypotheses, count_rational_points, picard_invariants


def load_document(path):
    with open(path) as fh:
        doc = json.load(fh)
    if "vertices" not in doc:
        raise ValueError("polytope document has no vertices")
    vertices = [tuple(int(x) for x in v) for v in doc["vertices"]]
    if doc.get("facets"):
        normals = [tuple(int(x) for x in f["normal"]) for f in doc["facets"]]
        offsets = [int(f["offset"]) for f in doc["facets"]]
        P = Polytope.from_vrep_hrep(vertices, normals, offsets)
    else:
        P = Polytope.from_vertices(vertices)
    if "dim" in doc and int(doc["dim"]) != P.dim:
        raise ValueError(f"document says dim {doc['dim']}, polytope has dim {P.dim}")
    return P, doc


def parse_order(text):
    if text == "lex":
        return OrderSpec.lex()
    if text == "grlex":
        return OrderSpec.grlex()
    if text.startswith("permlex:"):
        return OrderSpec.permlex(int(x) for x in text.split(":", 1)[1].split(","))
    if text.startswith("wlex:"):
        return OrderSpec.wlex(int(x) for x in text.split(":", 1)[1].split(","))
    raise ValueError(f"unknown order {text!r}")


def parse_point_list(text):
    points = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            points.append(tuple(int(x) for x in chunk.split(",")))
    return points


def _field_from(args, doc):
    q = args.q if args.q is not None else doc.get("q")
    if q is None:
        raise ValueError("no field size: pass --q or put q in the document")
    return GF(int(q))


def _order_from(args, doc):
    if args.order is not None:
        return parse_order(args.order)
    if doc.get("order"):
        return parse_order(doc["order"])
    return OrderSpec.lex()


def _lambda_max_from(args, doc):
    if args.lambda_max is not None:
        return args.lambda_max
    if doc.get("lambda_max"):
        return int(doc["lambda_max"])
    return 16


def _emit_matrix(entries, meta, fmt):
    if fmt == "csv":
        for row in entries:
            print(",".join(str(x) for x in row))
    else:
        payload = dict(meta)
        payload["entries"] = [list(row) for row in entries]
        print(json.dumps(payload, indent=2))


def cmd_info(args):
    P, doc = load_document(args.polytope)
    field = _field_from(args, doc)
    report = check_hypotheses(P, field.q)
    by_dim = {}
    for f in P.faces:
        by_dim[f.dim] = by_dim.get(f.dim, 0) + 1
    print(f"polytope: dimension {P.dim}, {len(P.vertices)} vertices, {len(P.faces)} faces")
    print("facets:")
    for u, a in zip(P.normals, P.offsets):
        print(f"  u={u} a={a}")
    print("faces by dimension: " + " ".join(f"{d}:{by_dim[d]}" for d in sorted(by_dim)))
    rank, torsion = picard_invariants(P)
    print(f"picard rank {rank}, torsion " + (",".join(map(str, torsion)) if torsion else "none"))
    print(f"q = {field.q} (characteristic {report.characteristic})")
    print("H1 (simple): " + ("pass" if report.simple else "FAIL"))
    if report.simple:
        dets = ",".join(str(d) for d in report.determinants)
        print(f"vertex |det|: {dets}")
        if report.h2_ok:
            print("H2 (determinants prime to q): pass")
        else:
            bad = ", ".join(
                f"|det|={d} at vertex {v}"
                for v, d in zip(P.vertices, report.determinants)
                if d % report.characteristic == 0
            )
            print(f"H2 (determinants prime to q): FAIL {bad}")
    else:
        off = ", ".join(str(v) for v in report.offenders)
        print(f"offending vertices: {off}")
    print(f"n = {count_rational_points(P, field.q)}")
    if report.ok:
        print(f"k = {dimension(P, field)}")
    else:
        print("k = unavailable (hypotheses fail)")
    return 0


def cmd_matrix(args):
    P, doc = load_document(args.polytope)
    field = _field_from(args, doc)
    M = generator_matrix(P, field)
    meta = {
        "q": field.q,
        "shape": list(M.shape),
        "row_points": [list(m) for m in M.row_points],
        "block_widths": list(M.block_widths),
    }
    _emit_matrix(M.entries, meta, args.format)
    return 0


def cmd_dim(args):
    P, doc = load_document(args.polytope)
    field = _field_from(args, doc)
    print(dimension(P, field))
    return 0


def cmd_bound(args):
    P, doc = load_document(args.polytope)
    field = _field_from(args, doc)
    lam_max = _lambda_max_from(args, doc)
    lam = find_surjective_dilate(P, field, lam_max)
    if lam is None:
        print(f"lambda = none (no surjective dilate up to {lam_max})")
        return 0
    print(f"lambda = {lam}")
    Pbig = P.dilate(lam)
    if args.order is not None:
        orders = [parse_order(args.order)]
    else:
        orders = stock_orders(P.dim)
    for order in orders:
        print(f"bound[{order.name}] = {distance_lower_bound(P, Pbig, field, order)}")
    best, best_order = best_bound_over_orders(P, Pbig, field, orders)
    print(f"best = {best} ({best_order.name})")
    return 0


def cmd_verify(args):
    P, doc = load_document(args.polytope)
    field = _field_from(args, doc)
    order = _order_from(args, doc)
    M = generator_matrix(P, field)
    if args.inject_corruption:
        flat = next(
            ((i, j) for i, row in enumerate(M.entries) for j, x in enumerate(row) if x == 0),
            None,
        )
        if flat is None:
            raise ValueError("matrix has no structural zero to corrupt")
        i, j = flat
        rows = [list(r) for r in M.entries]
        rows[i][j] = 1
        M = dataclasses.replace(M, entries=tuple(tuple(r) for r in rows))
    failures = 0

    def check(label, ok, detail=""):
        nonlocal failures
        if ok:
            print(f"ok   {label}")
        else:
            failures += 1
            print(f"FAIL {label}" + (f" ({detail})" if detail else ""))

    k = len(projective_reduction(P, field, order).representatives)
    rk = rank_gf(M.entries, field)
    uf = reduction_class_count_unionfind(P, field)
    n = count_rational_points(P, field.q)
    check("block triangularity", not M.structural_violations())
    check("rank equals reduction count", rk == k, f"rank {rk} vs {k}")
    check("union-find agrees", uf == k, f"{uf} vs {k}")
    check("length equals point count", M.shape[1] == n, f"{M.shape[1]} vs {n}")
    if P.dim == 2:
        check("Pick's theorem", pick_check(P))
    lam = find_surjective_dilate(P, field, _lambda_max_from(args, doc))
    if lam is None:
        print("skip distance bound (no surjective dilate in range)")
    else:
        bound = distance_lower_bound(P, P.dilate(lam), field, order)
        upper = min_weight_random_upper(M.entries, field, seed=args.seed)
        check("bound below random upper", bound <= upper, f"{bound} vs {upper}")
        within = field.q ** rk <= args.budget
        if args.require_distance or within:
            d = min_distance_exhaustive(M.entries, field, budget=args.budget)
            check("bound below true distance", bound <= d, f"{bound} vs {d}")
            check("true distance below upper", d <= upper, f"{d} vs {upper}")
        else:
            print("skip exhaustive distance (over budget)")
    return 1 if failures else 0


def cmd_subcode(args):
    P, doc = load_document(args.polytope)
    field = _field_from(args, doc)
    M = generator_matrix(P, field)
    rows = parse_point_list(args.rows) if args.rows else None
    if args.cols is None or args.cols == "all":
        cols = None
    elif args.cols == "torus":
        cols = M.torus_columns()
    else:
        cols = [int(x) for x in args.cols.split(",")]
    sub = subcode_matrix(M, rows, cols)
    meta = {
        "q": field.q,
        "shape": [len(sub), len(sub[0])],
        "rows": [list(m) for m in (rows if rows is not None else M.row_points)],
    }
    _emit_matrix(sub, meta, args.format)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="projtoric",
        description="evaluation codes of lattice polytopes over finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=False):
        p.add_argument("--polytope", required=True, help="polytope document (JSON)")
        p.add_argument("--q", type=int, default=None, help="field size, overrides the document")
        p.add_argument("--order", default=None, help="lex | grlex | permlex:P | wlex:W")
        p.add_argument("--lambda-max", dest="lambda_max", type=int, default=None)
        if fmt:
            p.add_argument("--format", choices=("csv", "json"), default="csv")

    common(sub.add_parser("info", help="facets, faces, hypotheses, parameters"))
    common(sub.add_parser("matrix", help="emit the generator matrix"), fmt=True)
    common(sub.add_parser("dim", help="dimension of the code"))
    common(sub.add_parser("bound", help="distance lower bound per order"))
    p = sub.add_parser("verify", help="run the oracle ledger")
    common(p)
    p.add_argument("--budget", type=int, default=1 << 24)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--require-distance", action="store_true")
    p.add_argument("--inject-corruption", action="store_true")
    p = sub.add_parser("subcode", help="emit a submatrix")
    common(p, fmt=True)
    p.add_argument("--rows", default=None, help="lattice points, e.g. '0,0;1,0'")
    p.add_argument("--cols", default=None, help="all | torus | comma-separated indices")
    return parser


def entry(argv=None):
    args = build_parser().parse_args(argv)
    handlers = {
        "info": cmd_info,
        "matrix": cmd_matrix,
        "dim": cmd_dim,
        "bound": cmd_bound,
        "verify": cmd_verify,
        "subcode": cmd_subcode,
    }
    try:
        return handlers[args.command](args)
    except HypothesisError as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return 3
    except BudgetExceededError as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return 4
    except (PolytopeError, FieldError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(entry())


if __name__ == "__main__":
    main()

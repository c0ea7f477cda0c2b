"""Command-line front end.  Every subcommand prints one JSON document.

Exit codes: 0 success, 2 usage or parse error, 3 domain error (reported as
{"error": code, "detail": text}).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import cluster, coalgebra, galleries, hall, paths, polytopes
from .weights import NotInRootLattice, format_root, format_weight

MAX_RANK = 8
MAX_FIXTURE_RANK = 4
THREADS_ENV = "SKELETON_MV_THREADS"


class UsageError(Exception):
    """Raised for arguments that parse but violate a guardrail (exit 2)."""


def dumps(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _rank(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"rank must be an integer, got {text!r}")
    if not 1 <= n <= MAX_RANK:
        raise argparse.ArgumentTypeError(f"rank must lie in 1..{MAX_RANK}, got {n}")
    return n


def thread_cap(environ=os.environ) -> int:
    """Validated SKELETON_MV_THREADS; computations currently run on one thread."""
    raw = environ.get(THREADS_ENV)
    if raw is None or raw == "":
        return 1
    try:
        k = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    if k < 1:
        raise UsageError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return k


def _path(n: int, text: str) -> paths.SkeletonPath:
    try:
        return paths.parse_path(n, text)
    except paths.PathSyntaxError as exc:
        raise UsageError(str(exc))


def _vertex_json(v: paths.FundamentalPath) -> dict:
    return {"label": format_weight(v.weight), "coords": list(v.weight.coords)}


def chain_json(c: paths.Chain) -> dict:
    index = {v: k for k, v in enumerate(c.vertices)}
    return {
        "level": c.level,
        "vertices": [_vertex_json(v) for v in c.vertices],
        "arrows": [{"from": index[s], "color": i, "to": index[t]} for s, i, t in c.arrows],
    }


def cmd_chains(args) -> dict:
    return {"n": args.n, "chains": [chain_json(paths.chain(args.n, j)) for j in range(1, args.n + 1)]}


def cmd_pol(args) -> dict:
    p = _path(args.n, args.path)
    P = polytopes.pol(p)
    return {"path": paths.format_path(p), **P.to_json()}


def cmd_minkowski(args) -> dict:
    p, q = _path(args.n, args.p), _path(args.n, args.q)
    msum = polytopes.minkowski(polytopes.pol(p), polytopes.pol(q))
    conc = polytopes.pol(p * q)
    return {
        "n": args.n,
        "minkowski": msum.to_json()["vertices"],
        "concatenation": conc.to_json()["vertices"],
        "agree": msum == conc,
    }


def cmd_comult(args) -> dict:
    try:
        m = coalgebra.parse_monomial(args.n, args.monomial)
    except SyntaxError as exc:
        raise UsageError(str(exc))
    return {"n": args.n, "monomial": str(m), "terms": coalgebra.delta(m).to_json()}


def _hall_obj(n: int, text: str) -> hall.HallObject:
    try:
        return hall.parse_object(n, text)
    except SyntaxError as exc:
        raise UsageError(str(exc))


def cmd_hall(args) -> dict:
    n = args.n
    if args.action == "product":
        a, b = _hall_obj(n, args.a), _hall_obj(n, args.b)
        return {"n": n, "sub": [list(p) for p in a.parts], "quotient": [list(p) for p in b.parts],
                "product": hall.hall_product(a, b).to_json()}
    if args.action == "serre":
        return {"n": n, "serre": hall.serre_check(n)}
    try:
        iv = hall.parse_interval(n, args.interval)
    except SyntaxError as exc:
        raise UsageError(str(exc))
    d = hall.dual_delta(n, iv)
    terms = [
        {"left": list(l) if l else None, "right": list(r) if r else None, "coeff": c}
        for (l, r), c in sorted(d.items(), key=lambda t: (t[0][0] or (0, 0), t[0][1] or (0, 0)))
    ]
    return {"n": n, "interval": list(iv), "terms": terms,
            "coalgebra": hall.dual_to_coalgebra(n, d).to_json()}


def _gallery_doc(g: galleries.FoldedGallery, n: int) -> dict:
    return {"steps": g.to_json(), "quadruple": galleries.decode_gallery(g, n).to_json()}


def cmd_gallery(args) -> dict:
    X = galleries.standard_quadruple(args.n)
    g = galleries.encode_gallery(X)
    doc = {"n": args.n, **_gallery_doc(g, args.n)}
    if args.project is not None:
        try:
            J = {int(x) for x in args.project.split(",") if x.strip()}
        except ValueError:
            raise UsageError(f"malformed position list {args.project!r}")
        if not J <= X.face:
            raise galleries.NotAFlat(f"{sorted(J)} is not a subset of the face {sorted(X.face)}")
        F = galleries.flat_of(X, J)
        doc["projection"] = {"positions": sorted(F), **_gallery_doc(galleries.project(g, F), args.n)}
    return doc


def cmd_cluster(args) -> dict:
    n = args.n
    if n < 2:
        raise DomainError("rank_too_small", "the seed needs rank at least 2")
    es = cluster.edges(n)
    labels = cluster.seed_labels(n)
    index_of = {t: k for k, t in labels.items()}
    polys = cluster.seed_polytopes(n)
    return {
        "n": n,
        "edges": [
            {"label": str(t), "kind": t.kind, "frozen": t.frozen, "seed_index": index_of[t],
             "polytope": polys[t].to_json()["vertices"]}
            for t in es
        ],
        "exchangeable": sorted(cluster.exchangeable_set(n)),
        "matrix": cluster.exchange_matrix(n),
    }


def fixture_documents(n: int) -> dict[str, dict]:
    """The golden dataset for rank n, keyed by file name."""
    docs: dict[str, dict] = {}
    docs["chains.json"] = {"n": n, "chains": [chain_json(paths.chain(n, j)) for j in range(1, n + 1)]}
    docs["polytopes.json"] = {
        "n": n,
        "fundamental": [
            {"path": format_weight(p.weight), "vertices": P.to_json()["vertices"]}
            for p, P in polytopes.fundamental_polytopes(n).items()
        ],
        "prime_count": len(polytopes.prime_candidates(n)),
    }
    if n >= 2:
        docs["seed.json"] = cmd_cluster(argparse.Namespace(n=n))
    ivs = hall.indecomposables(n)
    docs["hall.json"] = {
        "n": n,
        "products": [
            {"sub": list(a), "quotient": list(b),
             "product": hall.hall_product(hall.HallObject(n, (a,)), hall.HallObject(n, (b,))).to_json()}
            for a in ivs for b in ivs
        ],
        "serre": hall.serre_check(n),
    }
    X = galleries.standard_quadruple(n)
    g = galleries.encode_gallery(X)
    docs["galleries.json"] = {
        "n": n,
        "standard": _gallery_doc(g, n),
        "roots": [format_root(r) for r in galleries.root_function(X)],
        "projections": [
            {"subset": sorted(J), "flat": sorted(galleries.flat_of(X, J)),
             **_gallery_doc(galleries.project(g, galleries.flat_of(X, J)), n)}
            for J in galleries.subsets(sorted(X.face)) if J
        ],
    }
    return docs


def cmd_fixtures(args) -> dict:
    if args.n > MAX_FIXTURE_RANK:
        raise UsageError(f"fixtures are generated for rank at most {MAX_FIXTURE_RANK}")
    out = Path(args.out) / f"rank{args.n}"
    out.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in fixture_documents(args.n).items():
        (out / name).write_text(dumps(doc))
        written.append(str(out / name))
    return {"n": args.n, "written": written}


class DomainError(Exception):
    def __init__(self, code: str, detail: str) -> None:
        super().__init__(detail)
        self.code = code
        self.detail = detail


DOMAIN_CODES: list[tuple[type, str]] = [
    (NotInRootLattice, "not_in_root_lattice"),
    (galleries.MalformedGallery, "malformed_gallery"),
    (galleries.NotAFlat, "not_a_flat"),
    (paths.NotFundamental, "not_fundamental"),
    (polytopes.AmbiguousMinimum, "ambiguous_minimum"),
    (ValueError, "domain_error"),
]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="skeleton-mv", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("n", type=_rank, help=f"rank (1..{MAX_RANK})")
        p.set_defaults(func=fn)
        return p

    add("chains", cmd_chains, "all j-chains of rank n")
    p = add("pol", cmd_pol, "polytope of a path")
    p.add_argument("path", help='comma-separated factors, e.g. "w1, w1-w2"')
    p = add("minkowski", cmd_minkowski, "Minkowski sum of pol(p) and pol(q), next to pol(p*q)")
    p.add_argument("p")
    p.add_argument("q")
    p = add("comult", cmd_comult, "comultiplication of a monomial in string generators")
    p.add_argument("monomial", help='e.g. "x[1,3]*x[1,3]"')
    p = add("hall", cmd_hall, "Hall algebra computations")
    hs = p.add_subparsers(dest="action", required=True)
    hp = hs.add_parser("product")
    hp.add_argument("a", help='sub object, e.g. "[[2,2]]"')
    hp.add_argument("b", help="quotient object")
    hs.add_parser("serre")
    hd = hs.add_parser("delta")
    hd.add_argument("interval", help='e.g. "[1,3]"')
    p = add("gallery", cmd_gallery, "folded gallery of the standard quadruple")
    p.add_argument("--project", default=None, help="face positions j1,j2,... spanning the flat")
    add("cluster", cmd_cluster, "initial seed: edges, beta and exchange matrix")
    p = add("fixtures", cmd_fixtures, "write the golden dataset")
    p.add_argument("--out", default="fixtures", help="output directory")
    return ap


def _error(code: str, detail: str) -> str:
    return dumps({"error": code, "detail": detail})


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        thread_cap()
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    except UsageError as exc:
        stderr.write(_error("usage", str(exc)))
        return 2
    try:
        doc = args.func(args)
    except UsageError as exc:
        stderr.write(_error("usage", str(exc)))
        return 2
    except DomainError as exc:
        stdout.write(_error(exc.code, exc.detail))
        return 3
    except (ValueError, IndexError) as exc:
        code = next((c for t, c in DOMAIN_CODES if isinstance(exc, t)), "domain_error")
        stdout.write(_error(code, str(exc)))
        return 3
    stdout.write(dumps(doc))
    return 0


def main() -> None:
    sys.exit(run())

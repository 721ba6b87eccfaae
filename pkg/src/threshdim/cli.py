"""Command-line front end.

Exit status: 0 when an answer was produced, 2 when the answer is a verified
negative (no embedding exists, an embedding fails verification), 1 on
errors and on cap refusals.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .embedding import (
    LatticeEmbedding,
    embedding_from_resolving_set,
    search_w_resolved_embedding,
    w_resolved_diagnostic,
)
from .families import FamilySpec, make, packaged_embedding
from .graph import Graph, GraphError, diameter, parse_edge_list, parse_graph6, write_edge_list, write_graph6
from .metric import ball_lower_bound, log_lower_bound, metric_dimension_exact, neighbourhood_lower_bound
from .reduction import reduce_dim4_to_2, reduce_once
from .threshold import (
    BOUND_SOURCES,
    DEFAULT_SUPERGRAPH_CAP,
    CapExceeded,
    g_function,
    hernando_tau_lower_bound,
    star_method,
    threshold_via_embeddings,
    threshold_via_supergraphs,
)
from .trees import tree_anatomy

EXIT_OK, EXIT_ERROR, EXIT_NEGATIVE = 0, 1, 2


def _add_input(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", "--graph", dest="family", metavar="SPEC", help="family spec, e.g. star:6")
    src.add_argument("--input", metavar="PATH", help="graph file, '-' for stdin")
    p.add_argument("--format", choices=("edge-list", "graph6"), default="edge-list")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="threshdim", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("dim", help="exact metric dimension with a basis")
    _add_input(p)

    p = sub.add_parser("threshold", help="exact threshold dimension with a witness")
    _add_input(p)
    p.add_argument("--oracle", action="store_true", help="use the supergraph sweep")
    p.add_argument("--full-sweep", action="store_true", help="with --oracle, do not stop at the lower bound")
    p.add_argument("--cap", type=int, default=DEFAULT_SUPERGRAPH_CAP, help="max complement edges for --oracle")
    p.add_argument("--max-k", type=int, help="refuse beyond this many landmarks")
    p.add_argument(
        "--bounds",
        default=",".join(BOUND_SOURCES),
        help="comma-separated lower bounds used to start the search",
    )
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--progress", action="store_true", help="trace each candidate on stderr")

    for verb, text in (
        ("reduce", "one edge lowering the dimension of a tree with dimension >= 3"),
        ("reduce4", "two edges taking a dimension-4 tree to dimension 2"),
        ("star-method", "edge additions giving at most g(n) landmarks for a tree"),
        ("bounds", "lower bounds on dimension and g(n)"),
        ("anatomy", "majors, terminal degrees, limbs and core of a tree"),
    ):
        _add_input(sub.add_parser(verb, help=text))

    p = sub.add_parser("embed", help="W-resolved embedding from landmarks or by search")
    _add_input(p)
    p.add_argument("--landmarks", help="comma-separated landmark list (default: a basis)")
    p.add_argument("--search", action="store_true", help="search for an embedding instead")
    p.add_argument("--side", type=int, help="grid side for --search (default diameter + 1)")

    p = sub.add_parser("verify-embed", help="check a JSON embedding against a graph")
    _add_input(p)
    p.add_argument("--embedding", required=True, help="JSON file, or 'packaged'")

    p = sub.add_parser("family", help="print a family member")
    p.add_argument("spec")
    p.add_argument("--format", choices=("edge-list", "graph6"), default="edge-list")
    p.add_argument("--embedding", action="store_true", help="include the packaged embedding")
    return ap


def _read_graph(args) -> Graph:
    if args.family is not None:
        return make(FamilySpec.parse(args.family))
    text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    return parse_graph6(text) if args.format == "graph6" else parse_edge_list(text)


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise GraphError(f"bad vertex list {text!r}") from None


class _Out:
    def __init__(self, out: TextIO, as_json: bool):
        self.out = out
        self.as_json = as_json

    def emit(self, obj: dict, text: str) -> None:
        if self.as_json:
            self.out.write(json.dumps(obj, sort_keys=True) + "\n")
        else:
            self.out.write(text.rstrip("\n") + "\n")


def _plan_text(plan) -> str:
    return (
        f"added edges = {[list(e) for e in plan.added_edges]}\n"
        f"resolving set = {list(plan.claimed_resolving_set)} (size {plan.claimed_dimension}, verified)"
    )


def _run(args, out: _Out, err: TextIO) -> int:
    if args.verb == "family":
        spec = FamilySpec.parse(args.spec)
        G = make(spec)
        emb = packaged_embedding(spec) if args.embedding else None
        body = write_graph6(G) if args.format == "graph6" else write_edge_list(G)
        obj = {"family": str(spec), "n": G.n, "edges": [list(e) for e in G.sorted_edges]}
        text = body
        if args.embedding:
            obj["embedding"] = emb.to_json() if emb else None
            text += "\n" + (emb.dumps() if emb else "no packaged embedding")
        out.emit(obj, text)
        return EXIT_OK

    G = _read_graph(args)

    if args.verb == "dim":
        md = metric_dimension_exact(G)
        out.emit(
            {"beta": md.beta, "basis": list(md.basis), "certificate": md.certificate.to_json()},
            f"beta = {md.beta}\nbasis = {list(md.basis)}",
        )
        return EXIT_OK

    if args.verb == "threshold":
        bounds = [b for b in args.bounds.split(",") if b]
        if args.oracle:
            cert = threshold_via_supergraphs(
                G, cap=args.cap, short_circuit=not args.full_sweep, bounds=bounds
            )
        else:
            trace = (lambda line: print(line, file=err, flush=True)) if args.progress else None
            cert = threshold_via_embeddings(
                G, bounds=bounds, jobs=args.jobs, progress=trace, max_k=args.max_k
            )
        out.emit(
            cert.to_json(),
            f"tau = {cert.tau} ({cert.method})\n"
            f"witness edges = {[list(e) for e in cert.witness_edges]}\n"
            f"basis = {list(cert.witness_basis)}\n"
            f"lower bound proof = {json.dumps(cert.lower_bound_proof, sort_keys=True)}",
        )
        return EXIT_OK

    if args.verb in ("reduce", "reduce4", "star-method"):
        fn = {"reduce": reduce_once, "reduce4": reduce_dim4_to_2, "star-method": star_method}[args.verb]
        plan = fn(G)
        out.emit(plan.to_json(), _plan_text(plan))
        return EXIT_OK

    if args.verb == "bounds":
        D = diameter(G)
        obj = {
            "n": G.n,
            "diameter": D,
            "log": log_lower_bound(G.n, D) if D else 0,
            "neighbourhood": neighbourhood_lower_bound(G),
            "ball": ball_lower_bound(G),
            "hernando": hernando_tau_lower_bound(G),
            "g": g_function(G.n),
        }
        out.emit(obj, "\n".join(f"{k} = {v}" for k, v in obj.items()))
        return EXIT_OK

    if args.verb == "anatomy":
        A = tree_anatomy(G)
        obj = A.to_json()
        out.emit(obj, "\n".join(f"{k}: {v}" for k, v in obj.items()))
        return EXIT_OK

    if args.verb == "embed":
        if args.search:
            if not args.landmarks:
                raise GraphError("--search needs --landmarks")
            res = search_w_resolved_embedding(G, _ints(args.landmarks), args.side)
            if res.embedding is None:
                out.emit(
                    {"embedding": None, "nodes": res.nodes},
                    f"no W-resolved embedding (search nodes: {res.nodes})",
                )
                return EXIT_NEGATIVE
            emb = res.embedding
        else:
            W = _ints(args.landmarks) if args.landmarks else list(metric_dimension_exact(G).basis)
            emb = embedding_from_resolving_set(G, W)
        out.emit(emb.to_json(), emb.dumps())
        return EXIT_OK

    if args.verb == "verify-embed":
        if args.embedding == "packaged":
            if args.family is None:
                raise GraphError("'packaged' needs a family input")
            emb = packaged_embedding(args.family)
            if emb is None:
                raise GraphError(f"no packaged embedding for {args.family}")
        else:
            with open(args.embedding, encoding="utf-8") as fh:
                emb = LatticeEmbedding.loads(fh.read())
        problem = w_resolved_diagnostic(G, emb)
        out.emit(
            {"verified": problem is None, "diagnostic": problem},
            "true" if problem is None else f"false: {problem}",
        )
        return EXIT_OK if problem is None else EXIT_NEGATIVE

    raise AssertionError(args.verb)


def main(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return _run(args, _Out(out, args.json), err)
    except CapExceeded as exc:
        msg = str(exc)
        print(msg if msg.startswith("refused: cap") else f"refused: cap ({msg})", file=err)
        return EXIT_ERROR
    except (GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())

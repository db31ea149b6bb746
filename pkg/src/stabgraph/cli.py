"""Command-line client for the analysis handlers.

Thin wrapper over api.py: reads edge-list files, renders reports as text or
JSON, and maps ApiError to exit codes (0 ok, 1 failed verification claim,
2 input error, 3 unsupported class / failed precondition).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .api import ApiError, analyze_text, decompose_text, generate_graph, run_verify
from .schemas import AnalyzeResponse, DecomposeResponse, VerifyResponse


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ApiError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabgraph",
        description="Stability-number robustness analysis of graphs under edge edits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="stability report for an edge-list file")
    p_analyze.add_argument("path")
    p_analyze.add_argument("--json", action="store_true")
    p_analyze.set_defaults(handler=_cmd_analyze)

    p_dec = sub.add_parser("decompose", help="bistable pieces, or ears with --ears")
    p_dec.add_argument("path")
    p_dec.add_argument("--ears", action="store_true")
    p_dec.add_argument("--json", action="store_true")
    p_dec.set_defaults(handler=_cmd_decompose)

    p_gen = sub.add_parser("generate", help="emit a generated edge list on stdout")
    p_gen.add_argument("family", help="cycle | complete-bipartite | path | tree | ear-growth | substitute | union")
    p_gen.add_argument("params", nargs="*", type=int, help="size, or p q for complete-bipartite")
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("--template", help="substitute template token, e.g. c4")
    p_gen.add_argument("--pieces", help="comma-separated piece tokens, e.g. c4,c4")
    p_gen.add_argument("--bridges", help="comma-separated u-v global pairs for union")
    p_gen.set_defaults(handler=_cmd_generate)

    p_ver = sub.add_parser("verify", help="run the theorem harness")
    p_ver.add_argument("--max-n", type=int, default=8)
    p_ver.add_argument("--claims", help="comma-separated claim names (default: all)")
    p_ver.add_argument("--seed", type=int, default=None)
    p_ver.add_argument("--sample", type=int, default=0)
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(handler=_cmd_verify)

    p_srv = sub.add_parser("serve", help="run the HTTP service")
    p_srv.add_argument("--host", default="127.0.0.1")
    p_srv.add_argument("--port", type=int, default=8000)
    p_srv.set_defaults(handler=_cmd_serve)
    return parser


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ApiError(f"cannot read {path}: {exc}", exit_code=2, http_status=400)


def _cmd_analyze(args: argparse.Namespace) -> int:
    response = analyze_text(_read_file(args.path), source=args.path)
    if args.json:
        print(response.model_dump_json(by_alias=True, indent=2))
    else:
        _print_analyze(response)
    return 0


def _print_analyze(r: AnalyzeResponse) -> None:
    print(f"input: {r.input}")
    print(f"class: {r.graph_class}   n={r.n}  |E|={r.edge_count}"
          + (f"  ({r.duplicate_edges} duplicate edges collapsed)" if r.duplicate_edges else ""))
    alpha = "?" if r.alpha is None else r.alpha
    mu = "?" if r.mu is None else r.mu
    konig = "" if r.konig_identity is None else f"   Koenig alpha+mu=n: {'ok' if r.konig_identity else 'VIOLATED'}"
    print(f"alpha={alpha}  mu={mu}{konig}")
    v = r.verdicts
    print(f"alpha-minus-stable: {_yn(v.alpha_minus)}{_cert(r, 'alpha_minus')}")
    print(f"alpha-plus-stable:  {_yn(v.alpha_plus)}{_cert(r, 'alpha_plus')}")
    print(f"alpha-stable:       {_yn(v.alpha_stable)}")
    print(f"bistable:           {_yn(v.bistable)}{_cert(r, 'bistable')}")
    if len(r.per_component) > 1:
        print("components:")
        for i, c in enumerate(r.per_component):
            print(
                f"  [{i}] n={len(c.vertices)} class={c.graph_class} "
                f"alpha={c.alpha} mu={c.mu} "
                f"a-={_yn(c.alpha_minus)} a+={_yn(c.alpha_plus)} "
                f"stable={_yn(c.alpha_stable)} bistable={_yn(c.bistable)}"
            )


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _cert(r: AnalyzeResponse, key: str) -> str:
    cert = r.certificates.get(key) or {}
    interesting = {
        "mandatory_edge", "under_dominated_vertex", "unmatched_pair",
        "forbidden_edge", "alpha_dropping_pair", "alpha_dropping_edge", "reason",
    }
    shown = {k: v for k, v in cert.items() if k in interesting}
    return f"   {shown}" if shown else ""


def _cmd_decompose(args: argparse.Namespace) -> int:
    response = decompose_text(_read_file(args.path), ears=args.ears, source=args.path)
    if args.json:
        print(response.model_dump_json(indent=2))
    else:
        _print_decompose(response)
    return 0


def _print_decompose(r: DecomposeResponse) -> None:
    if r.ears is not None:
        print(f"base edge: {tuple(r.ears.base_edge)}")
        for i, ear in enumerate(r.ears.ears, start=1):
            print(f"ear {i}: ({ear.start}, {list(ear.interior)}, {ear.end})")
        return
    if not r.pieces and not r.k2_pieces:
        print("empty decomposition")
    for i, piece in enumerate(r.pieces):
        print(f"piece {i}: vertices {piece.vertices}")
    if r.k2_pieces:
        print("k2 pieces:", [tuple(e) for e in r.k2_pieces])


def _cmd_generate(args: argparse.Namespace) -> int:
    size = p = q = None
    if args.family == "complete-bipartite":
        if len(args.params) != 2:
            raise ApiError("complete-bipartite needs p and q", exit_code=2, http_status=400)
        p, q = args.params
    elif args.params:
        if len(args.params) != 1:
            raise ApiError(f"{args.family} takes one size parameter", exit_code=2, http_status=400)
        size = args.params[0]
    response = generate_graph(
        family=args.family,
        size=size,
        p=p,
        q=q,
        seed=args.seed,
        template=args.template,
        pieces=args.pieces,
        bridges=args.bridges,
    )
    sys.stdout.write(response.edgelist)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    claims = args.claims.split(",") if args.claims else None
    response = run_verify(
        max_n=args.max_n, claims=claims, seed=args.seed, sample=args.sample
    )
    if args.json:
        print(response.model_dump_json(indent=2))
    else:
        _print_verify(response)
    return 0 if response.all_passed else 1


def _print_verify(r: VerifyResponse) -> None:
    for c in r.claims:
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name}  ({c.instances} instances)")
        if c.counterexample:
            print(f"      detail: {c.counterexample.get('detail')}")
            graph = c.counterexample.get("graph", "").strip().replace("\n", "; ")
            print(f"      graph:  {graph}")
    print(
        f"{sum(c.passed for c in r.claims)}/{len(r.claims)} claims passed "
        f"(max_n={r.max_n}, sample={r.sample}, seed={r.seed}, "
        f"{r.elapsed_seconds:.1f}s)"
    )


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("stabgraph.service:app", host=args.host, port=args.port)
    return 0


if __name__ == "__main__":
    sys.exit(main())

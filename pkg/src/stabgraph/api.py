"""Handler layer shared by the FastAPI service and the CLI.

Each handler takes plain request data, runs the core analysis, and returns
a pydantic response model. Failures raise ApiError carrying both the HTTP
status (service) and the process exit code (CLI).
"""

from __future__ import annotations

import time
from typing import Any

from . import generators as gen
from .graph import (
    Graph,
    NotBipartiteError,
    ParseError,
    bipartition,
    induced_subgraph,
    parse_graph,
    write_graph,
)
from .harness import CLAIMS, SELF_TEST_CLAIM, theorem_harness
from .schemas import (
    AnalyzeResponse,
    ClaimModel,
    ComponentModel,
    DecomposeResponse,
    EarDecompositionModel,
    EarModel,
    GenerateResponse,
    PieceModel,
    VerdictsModel,
    VerifyResponse,
)
from .stability import (
    NotAlphaPlusError,
    NotBistableError,
    UnsupportedClassError,
    bistable_decomposition,
    ear_decomposition,
    is_alpha_stable,
    is_bistable,
)


class ApiError(Exception):
    """Maps to an HTTP status in the service and an exit code in the CLI."""

    def __init__(self, message: str, exit_code: int, http_status: int):
        super().__init__(message)
        self.exit_code = exit_code
        self.http_status = http_status


def _parse_or_fail(text: str):
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise ApiError(str(exc), exit_code=2, http_status=400) from exc


def analyze_text(text: str, source: str = "<inline>") -> AnalyzeResponse:
    start = time.perf_counter()
    parsed = _parse_or_fail(text)
    g = parsed.graph
    try:
        report = is_alpha_stable(g)
    except UnsupportedClassError as exc:
        raise ApiError(str(exc), exit_code=3, http_status=422) from exc
    konig = None
    if report.graph_class == "bipartite":
        konig = report.alpha_value + report.mu_value == g.n
    certificates: dict[str, Any] = {
        "alpha_minus": report.alpha_minus.certificate,
        "alpha_plus": report.alpha_plus.certificate,
        "alpha_stable": report.alpha_stable_certificate,
        "bistable": report.bistable.certificate,
    }
    components = [
        ComponentModel(
            vertices=list(c.vertices),
            graph_class=c.graph_class,
            alpha=c.alpha,
            mu=c.mu,
            alpha_minus=c.alpha_minus.holds,
            alpha_plus=c.alpha_plus.holds,
            alpha_stable=c.alpha_stable,
            bistable=c.bistable,
        )
        for c in report.per_component
    ]
    return AnalyzeResponse(
        input=source,
        graph_class=report.graph_class,
        n=g.n,
        edge_count=len(g.edges),
        duplicate_edges=parsed.duplicate_count,
        alpha=report.alpha_value,
        mu=report.mu_value,
        konig_identity=konig,
        verdicts=VerdictsModel(
            alpha_minus=report.alpha_minus.holds,
            alpha_plus=report.alpha_plus.holds,
            alpha_stable=report.alpha_stable,
            bistable=report.bistable.holds,
        ),
        certificates=_jsonable(certificates),
        per_component=components,
        timing=time.perf_counter() - start,
    )


def decompose_text(text: str, ears: bool = False, source: str = "<inline>") -> DecomposeResponse:
    start = time.perf_counter()
    parsed = _parse_or_fail(text)
    g = parsed.graph
    if ears:
        try:
            dec = ear_decomposition(g)
        except (NotBistableError, NotBipartiteError) as exc:
            raise ApiError(f"not bistable: {exc}", exit_code=3, http_status=422) from exc
        ears_model = EarDecompositionModel(
            base_edge=list(dec.base_edge),
            ears=[
                EarModel(start=e.start, interior=list(e.interior), end=e.end)
                for e in dec.ears
            ],
        )
        return DecomposeResponse(
            input=source, pieces=[], k2_pieces=[], ears=ears_model,
            timing=time.perf_counter() - start,
        )
    try:
        dec = bistable_decomposition(g)
    except NotAlphaPlusError as exc:
        raise ApiError(f"not alpha-plus-stable: {exc}", exit_code=3, http_status=422) from exc
    pieces = []
    for piece in dec.pieces:
        sub, _ = induced_subgraph(g, piece)
        pieces.append(
            PieceModel(vertices=sorted(piece), edgelist=write_graph(sub))
        )
    return DecomposeResponse(
        input=source,
        pieces=pieces,
        k2_pieces=[list(e) for e in dec.k2_pieces],
        ears=None,
        timing=time.perf_counter() - start,
    )


FAMILIES = ("cycle", "complete-bipartite", "path", "tree", "ear-growth", "substitute", "union")


def _graph_from_token(token: str) -> Graph:
    """Family token: c<k> (even cycle), p<k> (path), k<p>x<q> (complete bipartite)."""
    token = token.strip().lower()
    try:
        if token.startswith("c"):
            return gen.even_cycle(int(token[1:]))
        if token.startswith("p"):
            return gen.path(int(token[1:]))
        if token.startswith("k") and "x" in token:
            p_str, q_str = token[1:].split("x", 1)
            return gen.complete_bipartite(int(p_str), int(q_str))
    except (ValueError, gen.GeneratorError) as exc:
        raise ApiError(f"bad family token {token!r}: {exc}", exit_code=2, http_status=400)
    raise ApiError(
        f"bad family token {token!r}; use c<k>, p<k> or k<p>x<q>",
        exit_code=2,
        http_status=400,
    )


def generate_graph(
    family: str,
    size: int | None = None,
    p: int | None = None,
    q: int | None = None,
    seed: int | None = None,
    template: str | None = None,
    pieces: str | None = None,
    bridges: str | None = None,
) -> GenerateResponse:
    params: dict[str, Any] = {}
    properties: dict[str, Any] = {}
    try:
        if family == "cycle":
            _need(size is not None, "cycle needs a size")
            g = gen.even_cycle(size)
            params = {"size": size}
            properties = {"alpha_stable": True, "bistable": True}
        elif family == "path":
            _need(size is not None, "path needs a size")
            g = gen.path(size)
            params = {"size": size}
            properties = {"alpha_plus": size % 2 == 0}
        elif family == "complete-bipartite":
            _need(p is not None and q is not None, "complete-bipartite needs p and q")
            g = gen.complete_bipartite(p, q)
            params = {"p": p, "q": q}
            properties = {"alpha_minus": True, "bistable": p == q and p >= 1}
        elif family == "tree":
            _need(size is not None, "tree needs a size")
            seed = 0 if seed is None else seed
            g = gen.random_tree(size, seed=seed)
            params = {"size": size}
        elif family == "ear-growth":
            _need(size is not None, "ear-growth needs a size")
            seed = 0 if seed is None else seed
            grown = gen.ear_growth(size, seed=seed)
            g = grown.graph
            params = {"size": size}
            properties = {
                "bistable": True,
                "alpha_stable": size >= 4,
                "ears": len(grown.decomposition.ears),
            }
        elif family == "substitute":
            _need(template is not None and pieces is not None,
                  "substitute needs --template and --pieces")
            template_graph = _graph_from_token(template)
            piece_graphs = [_graph_from_token(t) for t in pieces.split(",")]
            g = gen.substitute(template_graph, piece_graphs)
            params = {"template": template, "pieces": pieces}
            properties = {"bistable": True, "alpha_stable": g.n >= 4}
        elif family == "union":
            _need(pieces is not None, "union needs --pieces")
            piece_graphs = [_graph_from_token(t) for t in pieces.split(",")]
            bridge_edges = (
                _parse_bridges(bridges)
                if bridges
                else gen.default_bridges(piece_graphs)
            )
            result = gen.union_connect(piece_graphs, bridge_edges)
            g = result.graph
            params = {"pieces": pieces, "bridges": ",".join(f"{u}-{v}" for u, v in bridge_edges)}
            properties = {
                "alpha_plus": result.alpha_plus.holds,
                "alpha_stable": result.alpha_stable,
            }
        else:
            raise ApiError(
                f"unknown family {family!r}; choose from {', '.join(FAMILIES)}",
                exit_code=2,
                http_status=400,
            )
    except gen.GeneratorError as exc:
        raise ApiError(str(exc), exit_code=2, http_status=400) from exc
    metadata = {"family": family}
    metadata.update({k: str(v) for k, v in params.items()})
    if seed is not None and family in ("tree", "ear-growth"):
        metadata["seed"] = str(seed)
    metadata.update({k: str(v).lower() if isinstance(v, bool) else str(v)
                     for k, v in properties.items()})
    return GenerateResponse(
        family=family,
        params=params,
        seed=seed if family in ("tree", "ear-growth") else None,
        edgelist=write_graph(g, metadata=metadata),
        properties=properties,
    )


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise ApiError(message, exit_code=2, http_status=400)


def _parse_bridges(spec: str) -> list[tuple[int, int]]:
    bridges = []
    for chunk in spec.split(","):
        try:
            u_str, v_str = chunk.strip().split("-", 1)
            bridges.append((int(u_str), int(v_str)))
        except ValueError as exc:
            raise ApiError(
                f"bad bridge {chunk!r}; expected 'u-v'", exit_code=2, http_status=400
            ) from exc
    return bridges


def run_verify(
    max_n: int = 8,
    claims: list[str] | None = None,
    seed: int | None = None,
    sample: int = 0,
) -> VerifyResponse:
    known = set(CLAIMS) | {SELF_TEST_CLAIM.name}
    for name in claims or []:
        if name not in known:
            raise ApiError(
                f"unknown claim {name!r}; known: {', '.join(sorted(known))}",
                exit_code=2,
                http_status=400,
            )
    try:
        report = theorem_harness(max_n=max_n, claims=claims, seed=seed, sample=sample)
    except ValueError as exc:
        raise ApiError(str(exc), exit_code=2, http_status=400) from exc
    return VerifyResponse(
        claims=[
            ClaimModel(
                name=c.name,
                instances=c.instances,
                passed=c.passed,
                counterexample=c.counterexample,
            )
            for c in report.claims
        ],
        max_n=report.max_n,
        seed=report.seed,
        sample=report.sample,
        elapsed_seconds=report.elapsed_seconds,
        all_passed=report.all_passed,
    )


def _jsonable(value: Any) -> Any:
    """Coerce certificate payloads (tuples, frozensets) to JSON-native types."""
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonable(v) for v in value)
    return value

"""FastAPI service wrapping the analysis package.

POST /analyze, /decompose, /generate and /verify accept the request models
from schemas.py and return the same JSON reports the CLI emits with --json.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .api import ApiError, analyze_text, decompose_text, generate_graph, run_verify
from .schemas import (
    AnalyzeRequest,
    AnalyzeResponse,
    DecomposeRequest,
    DecomposeResponse,
    GenerateRequest,
    GenerateResponse,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="stabgraph",
    description=(
        "Stability-number robustness analysis of graphs under edge deletion "
        "and addition: verdicts with machine-checkable certificates, "
        "structural decompositions, certified generators and a theorem "
        "verification harness."
    ),
    version="0.1.0",
)


@app.exception_handler(ApiError)
async def api_error_handler(request: Request, exc: ApiError) -> JSONResponse:
    return JSONResponse(status_code=exc.http_status, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(request: AnalyzeRequest) -> AnalyzeResponse:
    return analyze_text(request.edgelist, source=request.source)


@app.post("/decompose", response_model=DecomposeResponse)
def decompose(request: DecomposeRequest) -> DecomposeResponse:
    return decompose_text(request.edgelist, ears=request.ears, source=request.source)


@app.post("/generate", response_model=GenerateResponse)
def generate(request: GenerateRequest) -> GenerateResponse:
    return generate_graph(
        family=request.family,
        size=request.size,
        p=request.p,
        q=request.q,
        seed=request.seed,
        template=request.template,
        pieces=request.pieces,
        bridges=request.bridges,
    )


@app.post("/verify", response_model=VerifyResponse)
def verify(request: VerifyRequest) -> VerifyResponse:
    return run_verify(
        max_n=request.max_n,
        claims=request.claims,
        seed=request.seed,
        sample=request.sample,
    )

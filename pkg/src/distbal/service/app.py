"""The classification service: one endpoint per analysis verb.

Domain errors (malformed input, disconnected graphs, bad family
parameters) all map to HTTP 422 with a structured detail; anything the
service computes successfully comes back as 200, including "negative"
classification results, which are data rather than errors.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__, balance, oracle
from ..families import FamilySpec, gen_named, gen_gamma_k
from ..graphs import GraphError, build_graph
from ..graphio import parse_graph, write_graph, write_graph6
from ..products import cartesian, lexicographic, line_graph
from . import schemas


def _payload_graph(payload: schemas.GraphPayload):
    return parse_graph(payload.text, payload.format)


def create_app() -> FastAPI:
    app = FastAPI(title="distbal", version=__version__)

    @app.exception_handler(GraphError)
    async def graph_error_handler(request: Request, exc: GraphError):
        return JSONResponse(
            status_code=422,
            content={
                "detail": {"error": type(exc).__name__, "message": str(exc)}
            },
        )

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/generate", response_model=schemas.GraphResponse)
    def generate(req: schemas.GenerateRequest) -> schemas.GraphResponse:
        g = gen_named(FamilySpec(family=req.family, params=tuple(req.params)))
        return schemas.GraphResponse(
            format=req.format, text=write_graph(g, req.format), n=g.n, m=g.m
        )

    @app.post("/check", response_model=schemas.ReportDocument)
    def check(req: schemas.CheckRequest) -> schemas.ReportDocument:
        g = _payload_graph(req.graph)
        start = time.perf_counter()
        rep = balance.full_report(g)
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        return schemas.ReportDocument(
            report=schemas.BalanceReportModel.from_report(rep),
            source=req.source,
            tool_version=__version__,
            wall_time_ms=elapsed_ms,
        )

    @app.post("/product", response_model=schemas.GraphResponse)
    def product(req: schemas.ProductRequest) -> schemas.GraphResponse:
        ga = _payload_graph(req.a)
        if req.op == "line":
            result = line_graph(ga)
        else:
            if req.b is None:
                raise GraphError(f"operator {req.op!r} needs a second graph")
            gb = _payload_graph(req.b)
            result = cartesian(ga, gb) if req.op == "cartesian" else lexicographic(ga, gb)
        return schemas.GraphResponse(
            format=req.format,
            text=write_graph(result, req.format),
            n=result.n,
            m=result.m,
        )

    @app.post("/oracle-diff", response_model=schemas.OracleDiffResponse)
    def oracle_diff(req: schemas.OracleDiffRequest) -> schemas.OracleDiffResponse:
        found = oracle.run_differential(req.count, req.max_n, req.seed)
        items = [
            schemas.Disagreement(
                index=d["index"],
                graph6=write_graph6(build_graph(d["n"], d["edges"])),
                fast=d["fast"],
                oracle=d["oracle"],
            )
            for d in found
        ]
        return schemas.OracleDiffResponse(
            cases=req.count, seed=req.seed, disagreements=items
        )

    @app.post("/bench", response_model=schemas.BenchResponse)
    def bench(req: schemas.BenchRequest) -> schemas.BenchResponse:
        rows = []
        for k in req.k_values:
            g = gen_gamma_k(k)
            best = None
            for _ in range(max(1, req.repeats)):
                start = time.perf_counter()
                balance.full_report(g)
                elapsed = time.perf_counter() - start
                if best is None or elapsed < best:
                    best = elapsed
            rows.append(
                schemas.BenchRow(
                    k=k, n=g.n, m=g.m, seconds=best, ratio=best / (g.m * g.n)
                )
            )
        return schemas.BenchResponse(rows=rows)

    return app

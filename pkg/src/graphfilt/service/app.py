"""FastAPI service exposing graph generation, filtering and the benchmark
experiments.  The CLI is a thin client of these endpoints."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__, bench, io
from ..bench import BankSpec
from ..errors import GraphFiltError
from . import schemas

__all__ = ["create_app", "app"]


def _bank_spec(model: schemas.BankModel) -> BankSpec:
    return BankSpec(
        name=model.name,
        num_filters=model.num_filters,
        num_scales=model.num_scales,
        adapted=model.adapted,
    )


def create_app() -> FastAPI:
    app = FastAPI(title="graphfilt", version=__version__)

    @app.exception_handler(GraphFiltError)
    async def _domain_error(request, exc: GraphFiltError):
        from fastapi.responses import JSONResponse

        return JSONResponse(
            status_code=400,
            content={"error": type(exc).__name__, "detail": str(exc)},
        )

    @app.get("/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/generate", response_model=schemas.GenerateResponse)
    def generate(req: schemas.GenerateRequest):
        g = bench.make_graph(req.family, req.n, req.seed, p=req.p, k=req.k)
        return schemas.GenerateResponse(
            edge_list=io.format_edge_list(g), n=g.n, num_edges=g.num_edges
        )

    @app.post("/filter", response_model=schemas.FilterResponse)
    def filter_signal(req: schemas.FilterRequest):
        g = io.parse_edge_list(req.graph)
        s = io.parse_signal(req.signal)
        if len(s) != g.n:
            raise HTTPException(
                status_code=400,
                detail=f"signal length {len(s)} does not match graph n={g.n}",
            )
        spec = _bank_spec(req.bank)
        outputs = bench.run_filter(
            g, s, spec, req.method, M=req.order, eps=req.eps, j=req.j,
            oracle_cap=req.oracle_cap,
        )
        from ..graphs import combinatorial_laplacian, estimate_lambda_max

        lam = estimate_lambda_max(combinatorial_laplacian(g))
        names = _filter_names(spec, g, lam, req.oracle_cap)
        return schemas.FilterResponse(
            signals=[io.format_signal(v) for v in outputs], filters=names
        )

    @app.post("/spectrum", response_model=schemas.CsvResponse)
    def spectrum(req: schemas.SpectrumRequest):
        g = io.parse_edge_list(req.graph)
        return schemas.CsvResponse(
            csv=bench.spectrum_histogram(g, bins=req.bins, oracle_cap=req.oracle_cap)
        )

    @app.post("/bench/error-vs-order", response_model=schemas.CsvResponse)
    def bench_error_vs_order(req: schemas.ErrorVsOrderRequest):
        return schemas.CsvResponse(csv=bench.error_vs_order(
            family=req.family, n=req.n, p=req.p, k=req.k, seeds=tuple(req.seeds),
            bank_spec=_bank_spec(req.bank), M_min=req.M_min, M_max=req.M_max,
            step=req.step, num_signals=req.num_signals,
            oracle_cap=req.oracle_cap, threads=req.threads,
        ))

    @app.post("/bench/error-vs-estimate", response_model=schemas.CsvResponse)
    def bench_error_vs_estimate(req: schemas.ErrorVsEstimateRequest):
        return schemas.CsvResponse(csv=bench.error_vs_estimate(
            family=req.family, n=req.n, p=req.p, k=req.k, seeds=tuple(req.seeds),
            bank_spec=_bank_spec(req.bank), j=req.j, M_min=req.M_min,
            M_max=req.M_max, step=req.step, num_signals=req.num_signals,
            oracle_cap=req.oracle_cap, threads=req.threads,
        ))

    @app.post("/bench/error-vs-p", response_model=schemas.CsvResponse)
    def bench_error_vs_p(req: schemas.ErrorVsPRequest):
        return schemas.CsvResponse(csv=bench.error_vs_p(
            n=req.n, p_list=tuple(req.p_list), M=req.M,
            bank_spec=_bank_spec(req.bank), seeds=tuple(req.seeds),
            num_signals=req.num_signals, oracle_cap=req.oracle_cap,
            threads=req.threads,
        ))

    return app


def _filter_names(spec, graph, lambda_max, oracle_cap):
    from ..graphs import combinatorial_laplacian
    from ..oracle import full_eigendecomposition

    eigenvalues = None
    if spec.adapted:
        op = combinatorial_laplacian(graph)
        eigenvalues = full_eigendecomposition(op, oracle_cap=oracle_cap).eigenvalues
    bank = bench.build_bank(spec, lambda_max, eigenvalues=eigenvalues)
    return [f.describe() for f in bank]


app = create_app()

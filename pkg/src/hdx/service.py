"""Stateless computation handlers and the FastAPI application.

Each handler maps one request model to one response model; the CLI calls
them in process, ``hdx serve`` exposes them over HTTP. Invalid input maps
to 400; a failed internal cross-check (oracle disagreement, certificate
that does not validate) maps to 500 with the response body preserved.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.responses import JSONResponse

from . import __version__
from .crosscheck import max_nonnegative_power
from .depth import (
    DepthReport,
    hdepth_from_series,
    hdepth_squarefree,
    hdepth_via_lexification,
    validate_certificate,
)
from .errors import InputError
from .ideal import MonomialIdeal, format_ideal, parse_ideal, squarefree_shift_ideal
from .intpoly import format_poly, parse_poly
from .lexify import HilbertFunctionView, ideal_view, lexify
from .models import (
    CertificateTerm,
    CertifyResponse,
    ComputeRequest,
    DepthResponse,
    LexifyResponse,
    OracleCheck,
    SeriesResponse,
    SigmaResponse,
    TraceEntry,
)
from .monomial import format_monomial


def parse_input(text: str) -> MonomialIdeal | HilbertFunctionView:
    """Dispatch on the input grammar: ideal text or ``series; n=...; <poly>``."""
    stripped = text.strip()
    if stripped.startswith("series"):
        rest = stripped[len("series") :].lstrip()
        if not rest.startswith(";"):
            raise InputError("series input must look like 'series; n=<dim>; <poly>'")
        head, sep, poly_text = rest[1:].partition(";")
        if not sep:
            raise InputError("series input must look like 'series; n=<dim>; <poly>'")
        head = head.strip()
        if not head.startswith("n") or "=" not in head:
            raise InputError("series input needs a dimension header like 'n=3'")
        dim_text = head.split("=", 1)[1].strip()
        if not dim_text.isdigit() or int(dim_text) < 1:
            raise InputError("ring dimension must be a positive integer")
        return HilbertFunctionView(parse_poly(poly_text), int(dim_text))
    return parse_ideal(text)


def _as_view(obj: MonomialIdeal | HilbertFunctionView) -> HilbertFunctionView:
    if isinstance(obj, MonomialIdeal):
        return ideal_view(obj)
    return obj


def _depth_response(
    report: DepthReport, view: HilbertFunctionView, req: ComputeRequest
) -> DepthResponse:
    oracle = None
    if req.oracle:
        p = max_nonnegative_power(view, req.trunc_extra)
        oracle = OracleCheck(p=p, agrees=p == report.hdepth)
    return DepthResponse(
        hdepth=report.hdepth,
        n=view.n,
        method=report.method,
        numerator=list(view.numerator.coeffs),
        certificate=[
            CertificateTerm(shift=t.shift, dim=t.dim, mult=str(t.mult))
            for t in report.certificate.terms
        ],
        trace=[
            TraceEntry(
                q=t.q, first_negative_index=t.first_negative_index, value=str(t.value)
            )
            for t in report.trace
        ],
        m=report.series_padding,
        oracle=oracle,
    )


def _compute_depth(req: ComputeRequest):
    """Dispatch the requested (or automatic) method; returns (report, view)."""
    obj = parse_input(req.input)
    ideal = obj if isinstance(obj, MonomialIdeal) else None
    view = _as_view(obj)
    method = req.method
    if method == "auto":
        method = "squarefree" if ideal is not None and ideal.is_squarefree() else "series"
    if method == "squarefree":
        if ideal is None:
            raise InputError(
                "the squarefree method needs a monomial ideal, not a raw series"
            )
        if ideal.is_squarefree():
            report = hdepth_squarefree(ideal)
        else:
            report = hdepth_via_lexification(ideal, max_degree=req.max_degree)
    else:
        padding = None
        if req.strict_m:
            _, padding = lexify(view, max_degree=req.max_degree)
        report = hdepth_from_series(view, m=padding)
    return report, view


def run_hdepth(req: ComputeRequest) -> DepthResponse:
    """Compute the Hilbert depth with the requested (or automatic) method."""
    report, view = _compute_depth(req)
    return _depth_response(report, view, req)


def run_certify(req: ComputeRequest) -> CertifyResponse:
    """Compute the depth and validate the emitted certificate."""
    report, view = _compute_depth(req)
    base = _depth_response(report, view, req)
    valid = validate_certificate(report.certificate, view)
    return CertifyResponse(**base.model_dump(), valid=valid)


def run_lexify(req: ComputeRequest) -> LexifyResponse:
    """The lex ideal sharing the input's Hilbert function, and its shift bound."""
    view = _as_view(parse_input(req.input))
    lex, m = lexify(view, max_degree=req.max_degree)
    return LexifyResponse(
        n=lex.n,
        m=m,
        ideal=format_ideal(lex),
        generators=[format_monomial(g) for g in lex.gens],
        numerator=list(view.numerator.coeffs),
    )


def run_sigma(req: ComputeRequest) -> SigmaResponse:
    """Squarefree shift of a monomial ideal."""
    obj = parse_input(req.input)
    if not isinstance(obj, MonomialIdeal):
        raise InputError("the squarefree shift needs a monomial ideal input")
    shifted, m = squarefree_shift_ideal(obj)
    return SigmaResponse(
        n=obj.n,
        m=m,
        ideal=format_ideal(shifted),
        generators=[format_monomial(g) for g in shifted.gens],
    )


def run_series(req: ComputeRequest) -> SeriesResponse:
    """The Hilbert-series numerator over (1-t)^n."""
    view = _as_view(parse_input(req.input))
    return SeriesResponse(
        n=view.n,
        numerator=list(view.numerator.coeffs),
        numerator_text=format_poly(view.numerator),
    )


app = FastAPI(
    title="hdx",
    version=__version__,
    description="Exact Hilbert-depth computation for monomial ideals, "
    "with verifiable decomposition certificates.",
)


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


def _guard(handler, req):
    try:
        return handler(req)
    except InputError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


@app.post("/hdepth", response_model=DepthResponse, response_model_exclude_none=True)
def hdepth_endpoint(req: ComputeRequest):
    result = _guard(run_hdepth, req)
    if result.oracle is not None and not result.oracle.agrees:
        return JSONResponse(
            status_code=500, content=result.model_dump(exclude_none=True)
        )
    return result


@app.post("/certify", response_model=CertifyResponse, response_model_exclude_none=True)
def certify_endpoint(req: ComputeRequest):
    result = _guard(run_certify, req)
    if not result.valid or (result.oracle is not None and not result.oracle.agrees):
        return JSONResponse(
            status_code=500, content=result.model_dump(exclude_none=True)
        )
    return result


@app.post("/lexify", response_model=LexifyResponse)
def lexify_endpoint(req: ComputeRequest):
    return _guard(run_lexify, req)


@app.post("/sigma", response_model=SigmaResponse)
def sigma_endpoint(req: ComputeRequest):
    return _guard(run_sigma, req)


@app.post("/series", response_model=SeriesResponse)
def series_endpoint(req: ComputeRequest):
    return _guard(run_series, req)

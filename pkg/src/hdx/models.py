"""Request and response schemas shared by the HTTP service and the CLI.

Multiplicities and trace values are serialized as decimal strings: they are
exact integers that can exceed any fixed-width range. Numerator
coefficients stay as JSON integers (JSON numbers carry arbitrary precision
and Python emits them exactly).
"""

from typing import Literal, Optional

from pydantic import BaseModel, Field


class ComputeRequest(BaseModel):
    """One computation over an ideal or raw series given in text form.

    ``input`` uses the shared grammar: ``n=<dim>; x1^2, x1*x2`` for a
    monomial ideal, ``series; n=<dim>; 5t^2 - 5t^3 + t^5`` for a numerator.
    """

    input: str
    method: Literal["auto", "squarefree", "series"] = "auto"
    strict_m: bool = False
    oracle: bool = False
    max_degree: int = Field(default=500, ge=1)
    trunc_extra: Optional[int] = Field(default=None, ge=1)


class CertificateTerm(BaseModel):
    """One summand mult * t^shift / (1-t)^dim; mult is a decimal string."""

    shift: int
    dim: int
    mult: str


class TraceEntry(BaseModel):
    """First negative multiplicity of one failed candidate."""

    q: int
    first_negative_index: int
    value: str


class OracleCheck(BaseModel):
    """Independent truncated-series answer and whether it agrees."""

    p: int
    agrees: bool


class DepthResponse(BaseModel):
    hdepth: int
    n: int
    method: str
    numerator: list[int]
    certificate: list[CertificateTerm]
    trace: list[TraceEntry]
    m: Optional[int] = None
    oracle: Optional[OracleCheck] = None


class CertifyResponse(DepthResponse):
    valid: bool


class LexifyResponse(BaseModel):
    n: int
    m: int
    ideal: str
    generators: list[str]
    numerator: list[int]


class SigmaResponse(BaseModel):
    n: int
    m: int
    ideal: str
    generators: list[str]


class SeriesResponse(BaseModel):
    n: int
    numerator: list[int]
    numerator_text: str

"""Pydantic request/response schemas for the HTTP service."""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, Field

FieldTag = Literal["real", "complex"]
ConstructionName = Literal["hexagon", "icosahedron", "fano28", "leech276", "restrict176"]
GroupName = Literal["wh", "three-qubit"]
OutputFormat = Literal["json", "text"]


class LineSetModel(BaseModel):
    """Wire form of a line set; complex entries are [re, im] pairs."""

    dimension: int = Field(ge=1)
    field: FieldTag
    vectors: list[list[Any]]


class CertificateModel(BaseModel):
    is_equiangular: bool
    alpha: float
    max_deviation: float
    tolerance_used: float


class SicCertificateModel(BaseModel):
    passed: bool = Field(alias="pass")
    target_overlap: float
    max_overlap_deviation: float
    identity_residual: float

    model_config = {"populate_by_name": True}


class FiducialModel(BaseModel):
    d: int = Field(ge=2)
    amplitudes: list[list[float]]
    potential: float | None = None


class GraphModel(BaseModel):
    n: int = Field(ge=1)
    edges: list[tuple[int, int]]


class ConstructRequest(BaseModel):
    name: ConstructionName
    tol: float = Field(default=1e-10, gt=0)
    format: OutputFormat = "json"


class ConstructResponse(BaseModel):
    lineset: LineSetModel
    certificate: CertificateModel
    text: str | None = None


class CertifyRequest(BaseModel):
    """Exactly one of lineset / lineset_text must be present."""

    lineset: LineSetModel | None = None
    lineset_text: str | None = None
    tol: float = Field(default=1e-10, gt=0)


class CertifyResponse(BaseModel):
    kind: Literal["equiangular", "sic"]
    passed: bool
    dimension: int
    n_lines: int
    certificate: CertificateModel | None = None
    sic_certificate: SicCertificateModel | None = None


class SearchSicRequest(BaseModel):
    dimension: int = Field(ge=2)
    seed: int = 0
    restarts: int = Field(default=50, ge=1)
    max_iters: int = Field(default=2000, ge=1)
    tol: float = Field(default=1e-8, gt=0)
    group: GroupName = "wh"
    threads: int = Field(default=1, ge=1)


class RestartLogModel(BaseModel):
    restart: int
    iterations: int
    potential: float
    max_overlap_deviation: float


class SearchSicResponse(BaseModel):
    fiducial: FiducialModel
    orbit: LineSetModel
    certificate: SicCertificateModel
    passed: bool
    log: list[RestartLogModel]


class ConvertRequest(BaseModel):
    """Conversion between line sets, Gram/Seidel matrices, and graphs.

    Exactly one input field must be set.  Targets: "gram" and "seidel" need
    a line set (or a graph for "seidel"); "graph" needs a Seidel matrix or
    line set; "lines" needs a Seidel matrix or graph plus alpha.
    """

    target: Literal["gram", "seidel", "graph", "lines"]
    lineset: LineSetModel | None = None
    lineset_text: str | None = None
    seidel_text: str | None = None
    graph_text: str | None = None
    alpha: float | None = None
    tol: float = Field(default=1e-10, gt=0)


class ConvertResponse(BaseModel):
    target: str
    lineset: LineSetModel | None = None
    gram_text: str | None = None
    seidel_text: str | None = None
    graph_text: str | None = None
    lineset_text: str | None = None


class LeechType2Request(BaseModel):
    count_only: bool = False
    limit: int | None = Field(default=None, ge=1)
    format: Literal["json", "csv", "binary"] = "json"


class LeechType2Response(BaseModel):
    count: int
    vectors: list[list[int]] | None = None


class LeechPairsRequest(BaseModel):
    v3: list[int] | None = None
    restrict: bool = False
    tol: float = Field(default=1e-10, gt=0)


class LeechPairsResponse(BaseModel):
    lineset: LineSetModel
    certificate: CertificateModel
    pair_count: int

"""FastAPI service exposing construction, certification, conversion, search.

The service is the single compute surface: the CLI is a thin client over
these endpoints.  Keeping the process alive pays off because the Golay
codeword table and the 196560-vector enumeration are built once and then
shared across requests.

Status codes: 200 for any computed result (including failed certificates;
the pass/fail flag travels in the body), 400 for inputs that are
structurally valid but mathematically unusable, 422 for malformed bodies.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse, Response

from .. import constructions, formats, leech, linesets, seidel, whsic
from .models import (
    CertificateModel,
    CertifyRequest,
    CertifyResponse,
    ConstructRequest,
    ConstructResponse,
    ConvertRequest,
    ConvertResponse,
    FiducialModel,
    LeechPairsRequest,
    LeechPairsResponse,
    LeechType2Request,
    LeechType2Response,
    LineSetModel,
    RestartLogModel,
    SearchSicRequest,
    SearchSicResponse,
    SicCertificateModel,
)

_CONSTRUCTIONS = {
    "hexagon": constructions.hexagon_lines,
    "icosahedron": constructions.icosahedron_lines,
    "fano28": constructions.fano_28_lines,
    "leech276": leech.leech_276_lines,
    "restrict176": leech.leech_176_lines,
}


def _lineset_model(ls: linesets.LineSet) -> LineSetModel:
    return LineSetModel(**formats.lineset_to_json(ls))


def _parse_lineset(model: LineSetModel | None, text: str | None) -> linesets.LineSet:
    if (model is None) == (text is None):
        raise HTTPException(400, "provide exactly one of lineset / lineset_text")
    try:
        if model is not None:
            return formats.lineset_from_json(model.model_dump())
        return formats.lineset_from_text(text)
    except ValueError as exc:
        raise HTTPException(400, f"unreadable line set: {exc}") from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="equilines",
        description="Equiangular line-set constructions, certification, and SIC search",
        version="0.1.0",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/construct", response_model=ConstructResponse)
    def construct(req: ConstructRequest) -> ConstructResponse:
        ls = _CONSTRUCTIONS[req.name]()
        cert = linesets.certify_equiangular(ls, tol=req.tol)
        return ConstructResponse(
            lineset=_lineset_model(ls),
            certificate=CertificateModel(**formats.certificate_to_json(cert)),
            text=formats.lineset_to_text(ls) if req.format == "text" else None,
        )

    @app.post("/certify", response_model=CertifyResponse)
    def certify(req: CertifyRequest) -> CertifyResponse:
        ls = _parse_lineset(req.lineset, req.lineset_text)
        if ls.n_lines < 2:
            raise HTTPException(400, "need at least two lines to certify")
        if ls.field == linesets.COMPLEX and ls.n_lines == ls.dimension**2:
            cert = whsic.certify_sic(ls, tol=req.tol)
            return CertifyResponse(
                kind="sic",
                passed=cert.passed,
                dimension=ls.dimension,
                n_lines=ls.n_lines,
                sic_certificate=SicCertificateModel(
                    **formats.sic_certificate_to_json(cert)
                ),
            )
        cert = linesets.certify_equiangular(ls, tol=req.tol)
        return CertifyResponse(
            kind="equiangular",
            passed=cert.is_equiangular,
            dimension=ls.dimension,
            n_lines=ls.n_lines,
            certificate=CertificateModel(**formats.certificate_to_json(cert)),
        )

    @app.post("/search-sic", response_model=SearchSicResponse)
    def search_sic(req: SearchSicRequest) -> SearchSicResponse:
        if req.group == whsic.THREE_QUBIT_GROUP and req.dimension != 8:
            raise HTTPException(400, "the three-qubit group requires dimension 8")
        result = whsic.search_fiducial(
            req.dimension,
            seed=req.seed,
            restarts=req.restarts,
            max_iters=req.max_iters,
            tol=req.tol,
            group=req.group,
            threads=req.threads,
        )
        orbit = whsic.group_orbit(result.fiducial, req.group)
        return SearchSicResponse(
            fiducial=FiducialModel(
                **formats.fiducial_to_json(result.fiducial, potential=result.potential)
            ),
            orbit=_lineset_model(orbit),
            certificate=SicCertificateModel(
                **formats.sic_certificate_to_json(result.certificate)
            ),
            passed=result.certificate.passed,
            log=[
                RestartLogModel(
                    restart=rec.restart,
                    iterations=rec.iterations,
                    potential=rec.potential,
                    max_overlap_deviation=rec.max_overlap_deviation,
                )
                for rec in result.log
            ],
        )

    @app.post("/convert", response_model=ConvertResponse)
    def convert(req: ConvertRequest) -> ConvertResponse:
        sources = [
            s
            for s in (req.lineset, req.lineset_text, req.seidel_text, req.graph_text)
            if s is not None
        ]
        if len(sources) != 1:
            raise HTTPException(400, "provide exactly one input field")

        ls = s_matrix = graph = None
        try:
            if req.lineset is not None or req.lineset_text is not None:
                ls = _parse_lineset(req.lineset, req.lineset_text)
            elif req.seidel_text is not None:
                s_matrix = formats.seidel_from_text(req.seidel_text)
            else:
                graph = formats.graph_from_text(req.graph_text)
        except ValueError as exc:
            raise HTTPException(400, f"unreadable input: {exc}") from exc

        def seidel_of_lineset(ls):
            if ls.field != linesets.REAL:
                raise HTTPException(
                    400, "complex line sets have no Seidel sign pattern"
                )
            cert = linesets.certify_equiangular(ls, tol=req.tol)
            try:
                return seidel.seidel_from_gram(linesets.gram(ls), cert.alpha, tol=req.tol)
            except ValueError as exc:
                raise HTTPException(400, str(exc)) from exc

        try:
            if req.target == "gram":
                if ls is None:
                    raise HTTPException(400, "gram conversion needs a line set")
                return ConvertResponse(
                    target="gram", gram_text=formats.gram_to_text(linesets.gram(ls).real)
                )
            if req.target == "seidel":
                if ls is not None:
                    s = seidel_of_lineset(ls)
                elif graph is not None:
                    s = seidel.seidel_from_graph(graph)
                else:
                    s = s_matrix
                return ConvertResponse(target="seidel", seidel_text=formats.seidel_to_text(s))
            if req.target == "graph":
                if ls is not None:
                    s_matrix = seidel_of_lineset(ls)
                elif graph is not None:
                    return ConvertResponse(target="graph", graph_text=formats.graph_to_text(graph))
                g = seidel.graph_from_seidel(s_matrix)
                return ConvertResponse(target="graph", graph_text=formats.graph_to_text(g))
            # target == "lines"
            if req.alpha is None:
                raise HTTPException(400, "reconstructing lines needs --alpha")
            if graph is not None:
                s_matrix = seidel.seidel_from_graph(graph)
            if s_matrix is None:
                raise HTTPException(400, "line reconstruction needs a Seidel matrix or graph")
            out = seidel.lines_from_seidel(s_matrix, req.alpha, tol=req.tol)
            return ConvertResponse(
                target="lines",
                lineset=_lineset_model(out),
                lineset_text=formats.lineset_to_text(out),
            )
        except ValueError as exc:
            raise HTTPException(400, str(exc)) from exc

    @app.post("/leech/type2")
    def leech_type2(req: LeechType2Request):
        vectors = leech.leech_type_vectors(2)
        if req.count_only:
            return LeechType2Response(count=len(vectors))
        chosen = vectors if req.limit is None else vectors[: req.limit]
        if req.format == "binary":
            return Response(
                content=formats.type2_to_bytes(chosen),
                media_type="application/octet-stream",
            )
        if req.format == "csv":
            return PlainTextResponse(formats.type2_to_csv(chosen), media_type="text/csv")
        return LeechType2Response(
            count=len(vectors), vectors=[[int(x) for x in row] for row in chosen]
        )

    @app.post("/leech/pairs", response_model=LeechPairsResponse)
    def leech_pairs(req: LeechPairsRequest) -> LeechPairsResponse:
        v3 = None if req.v3 is None else np.asarray(req.v3, dtype=np.int64)
        try:
            ls = leech.leech_176_lines(v3) if req.restrict else leech.leech_276_lines(v3)
        except ValueError as exc:
            raise HTTPException(400, str(exc)) from exc
        cert = linesets.certify_equiangular(ls, tol=req.tol)
        return LeechPairsResponse(
            lineset=_lineset_model(ls),
            certificate=CertificateModel(**formats.certificate_to_json(cert)),
            pair_count=ls.n_lines,
        )

    return app


app = create_app()

"""FastAPI front end over the q-series engine and identity catalog.

All computation is exact integer arithmetic, so responses can carry very
large values; the default JSON encoder handles arbitrary-precision ints.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import __version__
from ..catalog import CATALOG, b_closed_form_4m3, b_value
from ..eta import ExpressionError, core_series, expand_expression, parse_quotient
from ..series import LaurentSeries, SeriesError
from ..verify import (
    GUARDED_ORDER,
    oracle_crosscheck,
    scan_congruence,
    summarize,
    verify,
    verify_all,
)
from . import schemas

# Enumerating partitions beyond this weight stops being interactive.
ORACLE_LIMIT = 45

# Hard cap on explicit-zero output rows, so a stray window request
# cannot ask for millions of lines.
DENSE_LIMIT = 100_000


def _check_order(order: int, allow_large: bool) -> None:
    if order > GUARDED_ORDER and not allow_large:
        raise HTTPException(
            status_code=400,
            detail=f"order {order} exceeds {GUARDED_ORDER}; set allow_large to proceed",
        )


def _expand(expr: str, order: int) -> LaurentSeries:
    try:
        return expand_expression(expr, order)
    except ExpressionError as exc:
        raise HTTPException(
            status_code=400,
            detail={"message": f"bad expression: {exc}", "position": exc.position},
        )
    except (SeriesError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc))


def create_app() -> FastAPI:
    app = FastAPI(
        title="qcores",
        version=__version__,
        description="Exact q-series expansion and identity verification service",
    )

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok", "version": __version__}

    @app.get("/catalog", response_model=list[schemas.CatalogEntryModel])
    def catalog() -> list[schemas.CatalogEntryModel]:
        return [
            schemas.CatalogEntryModel(
                name=e.name,
                kind=e.kind,
                statement=e.statement,
                arity=e.arity,
                default_params=[list(p) for p in e.default_params],
            )
            for e in CATALOG.values()
        ]

    @app.post("/series", response_model=schemas.SeriesResponse)
    def series(req: schemas.SeriesRequest) -> schemas.SeriesResponse:
        _check_order(req.order, req.allow_large)
        s = _expand(req.expr, req.order)
        lo = req.from_exp
        hi = req.to_exp if req.to_exp is not None else s.prec - 1
        hi = min(hi, s.prec - 1)
        if req.dense:
            if lo is None:
                lo = s.order if s.order is not None else 0
            if hi - lo + 1 > DENSE_LIMIT:
                raise HTTPException(
                    status_code=400,
                    detail=f"dense window [{lo}, {hi}] exceeds {DENSE_LIMIT} rows",
                )
            terms = [(e, s.coefficient(e)) for e in range(lo, hi + 1)]
        else:
            terms = [
                (e, c)
                for e, c in s.terms()
                if (lo is None or e >= lo) and e <= hi
            ]
        return schemas.SeriesResponse(
            expr=req.expr,
            normalized=str(parse_quotient(req.expr)),
            prec=s.prec,
            terms=terms,
        )

    @app.post("/count", response_model=schemas.CountResponse)
    def count(req: schemas.CountRequest) -> schemas.CountResponse:
        _check_order(req.upto + 1, req.allow_large)
        s = core_series(req.t, req.pairs, req.upto + 1)
        values = [s.coefficient(n) for n in range(req.upto + 1)]
        oracle = None
        if req.oracle:
            if req.upto > ORACLE_LIMIT:
                raise HTTPException(
                    status_code=400,
                    detail=f"oracle cross-check capped at n <= {ORACLE_LIMIT}",
                )
            oracle = schemas.ReportModel.from_report(
                oracle_crosscheck(req.t, req.pairs, req.upto)
            )
        return schemas.CountResponse(
            t=req.t, pairs=req.pairs, values=values, oracle=oracle
        )

    @app.post("/verify", response_model=schemas.ReportModel)
    def verify_one(req: schemas.VerifyRequest) -> schemas.ReportModel:
        _check_order(req.order, req.allow_large)
        try:
            report = verify(req.name, tuple(req.params), req.order)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc.args[0]))
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return schemas.ReportModel.from_report(report)

    @app.post("/verify-all", response_model=schemas.VerifyAllResponse)
    def verify_everything(req: schemas.VerifyAllRequest) -> schemas.VerifyAllResponse:
        _check_order(req.order, req.allow_large)
        reports = verify_all(req.order)
        return schemas.VerifyAllResponse(
            order=req.order,
            reports=[schemas.ReportModel.from_report(r) for r in reports],
            summary=schemas.SummaryModel.model_validate(summarize(reports)),
        )

    @app.post("/scan", response_model=schemas.ReportModel)
    def scan(req: schemas.ScanRequest) -> schemas.ReportModel:
        _check_order(req.order, req.allow_large)
        s = _expand(req.expr, req.order)
        try:
            report = scan_congruence(s, req.step, req.offset, req.mod, label=req.expr)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return schemas.ReportModel.from_report(report)

    @app.post("/bseq", response_model=schemas.BseqResponse)
    def bseq(req: schemas.BseqRequest) -> schemas.BseqResponse:
        values = [b_value(k) for k in range(req.upto + 1)]
        closed_ok = None
        if req.check_closed_form and req.upto >= 3:
            closed_ok = all(
                b_value(4 * m + 3) == b_closed_form_4m3(m)
                for m in range((req.upto - 3) // 4 + 1)
            )
        return schemas.BseqResponse(values=values, closed_form_ok=closed_ok)

    return app


app = create_app()

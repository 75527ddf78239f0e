"""Request/response models for the verification service."""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from ..verify import DEFAULT_ORDER, VerificationReport


class IdentityRef(BaseModel):
    name: str
    params: list[int] = []


class FirstMismatch(BaseModel):
    exponent: int
    lhs: int
    rhs: int


class ReportModel(BaseModel):
    identity: IdentityRef
    order: int
    effective_order: int
    status: Literal["verified", "mismatch", "error"]
    first_mismatch: Optional[FirstMismatch] = None
    checked_count: int
    elapsed_ms: int
    message: str = ""

    @classmethod
    def from_report(cls, report: VerificationReport) -> "ReportModel":
        return cls.model_validate(report.to_dict())


class SummaryModel(BaseModel):
    total: int
    verified: int
    mismatch: int
    errors: int
    vacuous: int
    ok: bool


class VerifyRequest(BaseModel):
    name: str
    params: list[int] = []
    order: int = Field(default=DEFAULT_ORDER, ge=1)
    allow_large: bool = False


class VerifyAllRequest(BaseModel):
    order: int = Field(default=DEFAULT_ORDER, ge=1)
    allow_large: bool = False


class VerifyAllResponse(BaseModel):
    order: int
    reports: list[ReportModel]
    summary: SummaryModel


class SeriesRequest(BaseModel):
    expr: str
    order: int = Field(default=DEFAULT_ORDER, ge=1)
    from_exp: Optional[int] = None
    to_exp: Optional[int] = None
    dense: bool = False
    allow_large: bool = False


class SeriesResponse(BaseModel):
    expr: str
    normalized: str
    prec: int
    terms: list[tuple[int, int]]


class CountRequest(BaseModel):
    t: int = Field(ge=1)
    pairs: bool = False
    upto: int = Field(ge=0)
    oracle: bool = False
    allow_large: bool = False


class CountResponse(BaseModel):
    t: int
    pairs: bool
    values: list[int]
    oracle: Optional[ReportModel] = None


class ScanRequest(BaseModel):
    expr: str
    step: int = Field(ge=1)
    offset: int = Field(ge=0)
    mod: int = Field(ge=1)
    order: int = Field(default=DEFAULT_ORDER, ge=1)
    allow_large: bool = False


class BseqRequest(BaseModel):
    upto: int = Field(ge=0)
    check_closed_form: bool = False


class BseqResponse(BaseModel):
    values: list[int]
    closed_form_ok: Optional[bool] = None


class CatalogEntryModel(BaseModel):
    name: str
    kind: str
    statement: str
    arity: int
    default_params: list[list[int]]

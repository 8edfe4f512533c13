from pydantic import BaseModel, Field
from typing import List

from riordan_inversion.config.settings import settings
from riordan_inversion.models.corpus_models import CaseReport, CorpusSummary


class ArrayRequest(BaseModel):
    """An ordinary pair (g, f) or, with ``exponential``, an exponential pair [u, v]."""
    g: str | None = None
    f: str | None = None
    family: str | None = Field(default=None, description="NAME:param, e.g. PASCAL_LIKE:2")
    exponential: bool = False
    order: int = Field(default=5, ge=0, le=settings.MAX_ORDER)


class TriangleResponse(BaseModel):
    name: str
    order: int
    rows: List[List[str]]


class RevertRequest(BaseModel):
    seq: List[str] = Field(min_length=1, max_length=settings.MAX_ORDER + 1)
    order: int | None = Field(default=None, ge=0, le=settings.MAX_ORDER)


class SequenceResponse(BaseModel):
    terms: List[str]


class CaseListing(BaseModel):
    id: str
    kind: str
    operation: str
    oeis: str | None = None
    expectation: str


class VerifyResponse(BaseModel):
    summary: CorpusSummary
    cases: List[CaseReport]

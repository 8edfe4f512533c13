from typing import List

from fastapi import APIRouter, Depends

from riordan_inversion.api.deps import get_corpus
from riordan_inversion.config.settings import settings
from riordan_inversion.corpus.runner import run_corpus
from riordan_inversion.models.corpus_models import CorpusCase, CorpusSummary
from riordan_inversion.models.schemas import CaseListing, VerifyResponse

router = APIRouter()


@router.get("/cases", response_model=List[CaseListing])
async def list_cases(corpus: list[CorpusCase] = Depends(get_corpus)):
    return [
        CaseListing(
            id=case.id,
            kind=case.kind.value,
            operation=case.operation.value,
            oeis=case.oeis,
            expectation=case.expectation.value,
        )
        for case in corpus
    ]


@router.post("/verify", response_model=VerifyResponse)
def verify(corpus: list[CorpusCase] = Depends(get_corpus)):
    """Run the loaded corpus and report every case."""
    reports = run_corpus(corpus, jobs=settings.DEFAULT_JOBS)
    return VerifyResponse(summary=CorpusSummary.from_reports(reports), cases=reports)

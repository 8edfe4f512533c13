from fractions import Fraction

from fastapi import APIRouter

from riordan_inversion.api.deps import compute
from riordan_inversion.arrays.inversion import revert_transform_terms
from riordan_inversion.core.numbers import to_rational
from riordan_inversion.models.schemas import RevertRequest, SequenceResponse

router = APIRouter()


@router.post("/revert", response_model=SequenceResponse)
def revert(request: RevertRequest):
    """Revert transform of a finite prefix; ``order`` pads with zeros or cuts."""
    def build():
        terms = [to_rational(t) for t in request.seq]
        if request.order is not None:
            terms = terms[: request.order + 1] + [Fraction(0)] * (request.order + 1 - len(terms))
        return revert_transform_terms(terms)

    return SequenceResponse(terms=compute(build).to_strings())

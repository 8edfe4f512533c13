from fastapi import APIRouter

from riordan_inversion.api.deps import compute
from riordan_inversion.arrays.exp_riordan import exp_bang, exp_to_matrix
from riordan_inversion.arrays.inversion import bang_riordan
from riordan_inversion.arrays.riordan import to_matrix
from riordan_inversion.arrays.sources import exponential_from_text, ordinary_from_text
from riordan_inversion.core.triangle import Triangle
from riordan_inversion.models.schemas import ArrayRequest, TriangleResponse

router = APIRouter()


def _respond(request: ArrayRequest, bang: bool) -> TriangleResponse:
    def build() -> tuple[str, Triangle]:
        if request.exponential:
            spec = exponential_from_text(request.g, request.f)
            triangle = exp_bang(spec, request.order) if bang else exp_to_matrix(spec, request.order)
        else:
            spec = ordinary_from_text(request.g, request.f, request.family)
            triangle = bang_riordan(spec, request.order) if bang else to_matrix(spec, request.order)
        return spec.label, triangle

    label, triangle = compute(build)
    return TriangleResponse(
        name=f"{label}!" if bang else label,
        order=triangle.order,
        rows=triangle.to_strings(),
    )


# Plain defs: exact arithmetic is CPU bound, so these run in the threadpool.
@router.post("/matrix", response_model=TriangleResponse)
def matrix(request: ArrayRequest):
    """The array truncated to rows 0..order."""
    return _respond(request, bang=False)


@router.post("/bang", response_model=TriangleResponse)
def bang(request: ArrayRequest):
    """The inversion of the array, ordinary or exponential."""
    return _respond(request, bang=True)

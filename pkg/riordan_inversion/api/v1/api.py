from fastapi import APIRouter

from riordan_inversion.api.v1.endpoints import arrays, corpus, sequences

api_router = APIRouter()
api_router.include_router(arrays.router, prefix="/arrays", tags=["arrays"])
api_router.include_router(sequences.router, prefix="/sequences", tags=["sequences"])
api_router.include_router(corpus.router, prefix="/corpus", tags=["corpus"])

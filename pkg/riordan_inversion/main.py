import logging
from contextlib import asynccontextmanager

from fastapi import Depends, FastAPI

from riordan_inversion.api.api import api_router
from riordan_inversion.api.deps import get_corpus
from riordan_inversion.config.settings import settings
from riordan_inversion.corpus.loader import load_corpus
from riordan_inversion.models.corpus_models import CorpusCase

logger = logging.getLogger(__name__)


def create_application() -> FastAPI:
    """Build the HTTP app around the corpus named by CORPUS_FILE.

    The corpus is loaded eagerly, so a missing or malformed file raises
    ParseError here instead of on the first request.
    """
    settings.configure_logging()
    corpus = load_corpus()

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        app.state.corpus = corpus
        logger.info("Serving %d corpus cases (max order %d)", len(corpus), settings.MAX_ORDER)
        yield
        logger.info("Riordan Inversion service stopped")

    app = FastAPI(
        title=settings.PROJECT_NAME,
        openapi_url=f"{settings.API_V1_STR}/openapi.json",
        lifespan=lifespan,
    )
    app.include_router(api_router)

    @app.get("/health")
    async def health_check(corpus: list[CorpusCase] = Depends(get_corpus)):
        return {"status": "healthy", "cases": len(corpus)}

    return app


def run() -> None:
    """Serve the HTTP API with uvicorn."""
    import uvicorn

    uvicorn.run("riordan_inversion.main:app", host=settings.HOST, port=settings.PORT, reload=settings.RELOAD)


app = create_application()


if __name__ == "__main__":
    run()

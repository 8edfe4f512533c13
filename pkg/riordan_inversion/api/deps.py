from typing import Callable, TypeVar

from fastapi import HTTPException, Request, status
from pydantic import ValidationError

from riordan_inversion.core.errors import ExpressionError, RiordanError, UnknownFamily
from riordan_inversion.models.corpus_models import CorpusCase

T = TypeVar("T")


def get_corpus(request: Request) -> list[CorpusCase]:
    """
    Get the regression corpus from app state.

    The corpus is loaded and validated once at startup and stored in app.state.

    Args:
        request: FastAPI request object containing app state

    Returns:
        list[CorpusCase]: The loaded corpus cases
    """
    return request.app.state.corpus


def compute(action: Callable[[], T]) -> T:
    """Run a computation, mapping bad input to 422 and failed preconditions to 400."""
    try:
        return action()
    except (ExpressionError, UnknownFamily, ValidationError) as exc:
        raise HTTPException(status_code=status.HTTP_422_UNPROCESSABLE_CONTENT, detail=str(exc)) from exc
    except (RiordanError, ValueError, ArithmeticError) as exc:
        raise HTTPException(status_code=status.HTTP_400_BAD_REQUEST, detail=str(exc)) from exc

import pytest
from fastapi.testclient import TestClient

from riordan_inversion.api.deps import get_corpus
from riordan_inversion.corpus.loader import load_corpus
from tests.factories import TestDataFactory


@pytest.fixture(scope="session")
def packaged_corpus():
    """The regression corpus shipped with the package."""
    return load_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """A three-case corpus, quick enough to verify in every API test."""
    return TestDataFactory.create_small_corpus()


@pytest.fixture(scope="module")
def client(small_corpus):
    """Create a test client for the FastAPI application with the small corpus"""
    # Import here so that CORPUS_FILE set by a test is not read at collection time
    from riordan_inversion.main import create_application

    test_app = create_application()

    def get_test_corpus():
        return small_corpus

    test_app.dependency_overrides[get_corpus] = get_test_corpus

    with TestClient(test_app) as test_client:
        yield test_client

from fastapi import status

from riordan_inversion.config.settings import settings
from tests.constants import TestConstants


class TestSequences:
    """Test suite for the sequence endpoints."""

    def test_revert_geometric_series(self, client):
        response = client.post(TestConstants.ENDPOINTS["REVERT"], json={"seq": ["1", "1", "1", "1"]})

        assert response.status_code == status.HTTP_200_OK, \
            f"Revert request failed with status {response.status_code}: {response.text}"
        assert response.json() == {"terms": ["1", "-1", "1", "-1"]}

    def test_order_pads_with_zeros(self, client):
        response = client.post(
            TestConstants.ENDPOINTS["REVERT"], json={"seq": ["1", "2", "3", "4"], "order": 5}
        )

        assert response.status_code == status.HTTP_200_OK, response.text
        terms = response.json()["terms"]
        assert len(terms) == 6, f"Expected 6 terms, got {terms}"
        assert terms[:4] == ["1", "-2", "5", "-14"]

    def test_order_cuts(self, client):
        response = client.post(
            TestConstants.ENDPOINTS["REVERT"], json={"seq": ["1", "2", "3", "4"], "order": 1}
        )

        assert response.status_code == status.HTTP_200_OK, response.text
        assert response.json()["terms"] == ["1", "-2"]

    def test_rational_terms(self, client):
        response = client.post(TestConstants.ENDPOINTS["REVERT"], json={"seq": ["1", "1/2"]})

        assert response.status_code == status.HTTP_200_OK, response.text
        assert response.json()["terms"] == ["1", "-1/2"]

    def test_empty_sequence(self, client):
        response = client.post(TestConstants.ENDPOINTS["REVERT"], json={"seq": []})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_CONTENT

    def test_sequence_longer_than_max_order(self, client):
        seq = ["1"] * (settings.MAX_ORDER + 2)
        response = client.post(TestConstants.ENDPOINTS["REVERT"], json={"seq": seq})

        assert response.status_code == status.HTTP_422_UNPROCESSABLE_CONTENT, \
            f"Expected 422 for {len(seq)} terms, got {response.status_code}"

    def test_zero_denominator(self, client):
        response = client.post(TestConstants.ENDPOINTS["REVERT"], json={"seq": ["1", "1/0"]})

        assert response.status_code == status.HTTP_400_BAD_REQUEST, \
            f"Expected 400 for a zero denominator, got {response.status_code}"

    def test_zero_constant_term(self, client):
        response = client.post(TestConstants.ENDPOINTS["REVERT"], json={"seq": ["0", "1"]})

        assert response.status_code == status.HTTP_400_BAD_REQUEST, response.text

"""Riordan arrays, their inversions and a golden corpus of printed triangles."""

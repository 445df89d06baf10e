"""Exact sparse Gaussian elimination over field-valued coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable


def rank(vectors: Iterable[dict]) -> int:
    """Rank of a family of sparse vectors (dicts basis -> field element)."""
    pivots: dict[Hashable, dict] = {}
    r = 0
    for v in vectors:
        w = {k: c for k, c in v.items() if c != 0}
        while w:
            key = min(w, key=repr)
            row = pivots.get(key)
            if row is None:
                inv = w[key].inverse() if hasattr(w[key], "inverse") else Fraction(1) / Fraction(w[key])
                pivots[key] = {k: c * inv for k, c in w.items()}
                r += 1
                break
            f = w[key]
            for k, c in row.items():
                s = w.get(k, 0) - f * c
                if s == 0:
                    w.pop(k, None)
                else:
                    w[k] = s
    return r


def independent(vectors: list[dict]) -> bool:
    return rank(vectors) == len(vectors)

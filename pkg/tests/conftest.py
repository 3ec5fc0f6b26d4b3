"""Shared fixture triples used across the suite.

The family: the order-1 solution over x^2 - 1, its Chebyshev-style powers up
to order 10 (recurrence p_{k+1} = 2x p_k - p_{k-1} seeded by (1, x), and the
matching q-sequence seeded by (0, 1)), and the four small solutions that
exercise genus 0 and 1 in every chart.
"""
from __future__ import annotations

import pytest

from abelpell.pell import PellTriple
from abelpell.unipoly import UniPoly, poly


def chebyshev_pair(k: int) -> tuple[UniPoly, UniPoly]:
    """(p_k, q_k) over R = x^2 - 1: p from (1, x), q from (0, 1)."""
    two_x = poly(0, 2)
    p_prev, p = poly(1), poly(0, 1)
    q_prev, q = poly(), poly(1)
    for _ in range(k - 1):
        p_prev, p = p, two_x * p - p_prev
        q_prev, q = q, two_x * q - q_prev
    return p, q


def chebyshev_triple(k: int) -> PellTriple:
    p, q = chebyshev_pair(k)
    return PellTriple.build(p, q, poly(-1, 0, 1))


def small_triples() -> list[PellTriple]:
    return [
        PellTriple.build(poly(0, 1), poly(1), poly(-1, 0, 1)),
        PellTriple.build(poly(-1, 0, 1), poly(0, 1), poly(-2, 0, 1)),
        PellTriple.build(poly(1, 0, 1), poly(0, 1), poly(2, 0, 1)),
        PellTriple.build(poly(0, 0, 1), poly(1), poly(-1, 0, 0, 0, 1)),
        PellTriple.build(poly(1, 0, 0, 0, 2), poly(0, 0, 2), poly(1, 0, 0, 0, 1)),
    ]


def fixture_family() -> list[PellTriple]:
    return small_triples() + [chebyshev_triple(k) for k in range(2, 11)]


@pytest.fixture
def triples() -> list[PellTriple]:
    return fixture_family()

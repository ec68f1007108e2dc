"""Shared test utilities: generators and independent oracles."""

from __future__ import annotations

import itertools
from fractions import Fraction

from sgcorona import Marking, SignedGraph


def all_signings(base: SignedGraph):
    """Every sign assignment over the underlying edges of base."""
    edges = base.edges()
    for signs in itertools.product((1, -1), repeat=len(edges)):
        yield SignedGraph(base.n, [(u, v, s) for (u, v, _), s in zip(edges, signs)])


def random_signed_graph(rng, n: int, p: float = 0.5) -> SignedGraph:
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, rng.choice((1, -1))))
    return SignedGraph(n, edges)


def random_marking(rng, n: int) -> Marking:
    return Marking(tuple(rng.choice((1, -1)) for _ in range(n)))


def random_balanced_graph(rng, n: int, p: float = 0.5) -> SignedGraph:
    """Random graph signed by a random marking, hence balanced."""
    marks = random_marking(rng, n)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v, marks[u] * marks[v]))
    return SignedGraph(n, edges)


def bareiss_det(matrix) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination).

    Independent oracle for characteristic-polynomial checks.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot_row is None:
            return 0
        if pivot_row != col:
            m[col], m[pivot_row] = m[pivot_row], m[col]
            det = -det
        pivot = m[col][col]
        det *= pivot
        for r in range(col + 1, n):
            factor = m[r][col] / pivot
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    assert det.denominator == 1
    return int(det)


def max_spectral_diff(a, b) -> float:
    """Largest elementwise gap between two descending spectra."""
    assert len(a) == len(b)
    return max((abs(x - y) for x, y in zip(a, b)), default=0.0)

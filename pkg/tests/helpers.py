"""Shared test fixtures: random projection families and brute-force traces."""

from __future__ import annotations

import numpy as np


def random_projections(rng, d, count, complex_entries=False):
    """Orthogonal projections onto random subspaces of C^d (or R^d)."""
    projections = []
    for _ in range(count):
        r = int(rng.integers(1, d))
        g = rng.normal(size=(d, r))
        if complex_entries:
            g = g + 1j * rng.normal(size=(d, r))
        q, _ = np.linalg.qr(g)
        projections.append(q @ q.conj().T)
    return projections


def word_traces(projections, max_len):
    """Normalized trace of every word product of length <= max_len.

    Brute force by prefix products; independent of the library's word
    reduction machinery, so it can serve as its oracle.
    """
    d = projections[0].shape[0]
    n = len(projections)
    products = {(): np.eye(d, dtype=complex)}
    traces = {(): 1.0 + 0j}
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for a in range(1, n + 1):
                word = w + (a,)
                products[word] = products[w] @ projections[a - 1]
                traces[word] = np.trace(products[word]) / d
                nxt.append(word)
        frontier = nxt
    return traces


def random_psd(rng, size, complex_entries=False, rank=None):
    """Random PSD matrix, full rank unless ``rank`` is given."""
    r = rank or size
    g = rng.normal(size=(size, r))
    if complex_entries:
        g = g + 1j * rng.normal(size=(size, r))
    return g @ g.conj().T / size


def random_hermitian(rng, size, complex_entries=False):
    g = rng.normal(size=(size, size))
    if complex_entries:
        g = g + 1j * rng.normal(size=(size, size))
    return (g + g.conj().T) / 2

"""Session fixtures shared by the acceptance suite."""

from __future__ import annotations

import time
from dataclasses import dataclass

import pytest

from domlab import SweepResult, all_pairs, enumerate_connected_graphs, sweep


@dataclass(frozen=True)
class TimedSweep:
    corpus_size: int
    pair_count: int
    result: SweepResult
    seconds: float


@pytest.fixture(scope="session")
def small_connected_corpus():
    """Every connected graph on at most five vertices, up to isomorphism."""
    graphs = []
    for n in range(1, 6):
        graphs.extend(enumerate_connected_graphs(n))
    return graphs


@pytest.fixture(scope="session")
def full_sweep(small_connected_corpus) -> TimedSweep:
    """One exhaustive all-pairs sweep, shared by the acceptance checks."""
    pairs = all_pairs(small_connected_corpus)
    start = time.monotonic()
    result = sweep(pairs)
    return TimedSweep(
        corpus_size=len(small_connected_corpus),
        pair_count=len(pairs),
        result=result,
        seconds=time.monotonic() - start,
    )

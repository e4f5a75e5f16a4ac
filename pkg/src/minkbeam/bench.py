"""Timing harness: solve time against K = N*M, with brute force where feasible."""
from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import numpy as np

from .beamforming import BeamProblem, solve
from .instances import psk_problem
from .oracle import DEFAULT_CAP, brute_force, tuple_count

FIELDS = ("N", "K", "mean_solve_ms", "mean_brute_ms", "vertex_count")


@dataclass
class BenchRow:
    n: int
    k: int
    mean_solve_ms: float
    mean_brute_ms: Optional[float]
    vertex_count: int

    def as_csv(self) -> list:
        brute = "NA" if self.mean_brute_ms is None else f"{self.mean_brute_ms:.6f}"
        return [self.n, self.k, f"{self.mean_solve_ms:.6f}", brute, self.vertex_count]


def _mean_ms(fn: Callable[[], object], repeats: int) -> float:
    fn()  # warm-up, discarded
    total = 0.0
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        total += time.perf_counter() - t0
    return 1e3 * total / repeats


def run_bench(
    n_list: Iterable[int],
    m: int,
    repeats: int = 3,
    seed: int = 0,
    cap: int = DEFAULT_CAP,
) -> list[BenchRow]:
    rows = []
    for n in n_list:
        problem: BeamProblem = psk_problem(n, m, np.random.default_rng([seed, n]))
        vertex_count = solve(problem).vertex_count
        solve_ms = _mean_ms(lambda: solve(problem), repeats)
        brute_ms = None
        if tuple_count(problem) <= cap:
            brute_ms = _mean_ms(lambda: brute_force(problem, cap), repeats)
        rows.append(BenchRow(n, n * m, solve_ms, brute_ms, vertex_count))
    return rows


def write_csv(rows: list[BenchRow], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(FIELDS)
    for row in rows:
        writer.writerow(row.as_csv())

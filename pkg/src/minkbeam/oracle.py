"""Reference solvers used to cross-check :func:`minkbeam.beamforming.solve`.

``brute_force`` enumerates every weight tuple. ``support_solve`` works in the
dual: ``|z| = max_theta Re(e^{-j theta} z)`` lets the objective decouple per
antenna, the direction circle splits into arcs on which every summand's
maximizing vertex is fixed, and the optimum is the longest of the circle
diameters those arcs produce.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .beamforming import BeamProblem, Method, Solution, build_summands
from .geometry import ANGLE_TOL, TWO_PI, ConvexPolygon

DEFAULT_CAP = 1_000_000


class InstanceTooLarge(ValueError):
    pass


def tuple_count(problem: BeamProblem) -> int:
    extra = 1 if problem.ris_mode else 0
    return math.prod(len(ps) + extra for ps in problem.phase_sets)


def brute_force(problem: BeamProblem, cap: int = DEFAULT_CAP) -> Solution:
    """Exhaustive search over all weight tuples.

    Ties go to the lexicographically smallest index tuple (``OFF`` sorts
    first in RIS mode).
    """
    if tuple_count(problem) > cap:
        raise InstanceTooLarge("instance too large for brute force")
    options = [problem.admissible(n) for n in range(problem.n_antennas)]
    acc = np.array([problem.direct_gain], dtype=complex)
    for (h, opts) in zip(problem.channels, options):
        contrib = np.array([w for _, w in opts], dtype=complex) * h
        acc = (acc[:, None] + contrib[None, :]).ravel()
    flat = int(np.argmax(np.abs(acc)))
    pos = np.unravel_index(flat, [len(o) for o in options])
    indices = tuple(options[n][int(p)][0] for n, p in enumerate(pos))
    z = complex(acc[flat])
    weights = tuple(problem.weight(n, i) for n, i in enumerate(indices))
    # vertex_count here is the number of tuples searched
    return Solution(abs(z), z, indices, weights, len(acc), Method.GENERAL)


def support_value(summands: Sequence[ConvexPolygon], theta: float) -> float:
    """Sum over summands of ``max_z Re(e^{-j theta} z)``."""
    rot = cmath.exp(-1j * theta)
    return math.fsum(max((rot * z).real for z in p.vertices) for p in summands)


def thales_residual(z: complex, theta: float) -> float:
    """Distance of ``e^{j theta} Re(e^{-j theta} z)`` from the circle on diameter [0, z]."""
    foot = cmath.exp(1j * theta) * (cmath.exp(-1j * theta) * z).real
    return abs(abs(foot - z / 2) - abs(z) / 2)


@dataclass(frozen=True)
class ArcBreakpoints:
    """Partition of the direction circle into arcs of constant maximizers.

    ``angles[a]`` is where arc ``a`` begins; it runs to ``angles[a+1]``
    (cyclically). ``sums[a]`` is the sum of the per-summand maximizing
    vertices on that arc, i.e. the far end of the Thales circle it spawns.
    """

    angles: np.ndarray
    sums: np.ndarray
    summands: tuple[ConvexPolygon, ...]

    def __len__(self) -> int:
        return len(self.angles)

    @property
    def diameters(self) -> np.ndarray:
        return np.abs(self.sums)

    def midpoint(self, a: int) -> float:
        if len(self.angles) == 0:
            return 0.0
        lo = self.angles[a]
        hi = self.angles[(a + 1) % len(self.angles)]
        if hi <= lo:
            hi += TWO_PI
        return float(0.5 * (lo + hi))

    def maximizers(self, a: int) -> tuple[int, ...]:
        """Vertex position maximizing the support of each summand on arc ``a``."""
        rot = cmath.exp(-1j * self.midpoint(a))
        return tuple(
            max(range(len(p.vertices)), key=lambda i: (rot * p.vertices[i]).real)
            for p in self.summands
        )


def _outward_normals(poly: ConvexPolygon) -> np.ndarray:
    v = poly.as_array()
    edges = np.roll(v, -1) - v
    return np.mod(np.angle(edges) - math.pi / 2, TWO_PI)


def arc_breakpoints(summands: Sequence[ConvexPolygon]) -> ArcBreakpoints:
    """Sweep the direction circle once, updating each summand's maximizer.

    Vertex ``i`` of a canonical polygon supports every direction between the
    outward normals of its incoming edge ``i-1`` and outgoing edge ``i``. As
    the sweep crosses the normal of edge ``i`` the maximizer hands over from
    vertex ``i`` to vertex ``i+1``.
    """
    summands = tuple(summands)
    base = 0j
    ev_angle, ev_delta = [], []
    for p in summands:
        v = p.as_array()
        if v.size == 1:
            base += complex(v[0])
            continue
        normals = _outward_normals(p)
        # maximizer just after direction 0: vertex after the last normal <= 0
        order = np.argsort(normals, kind="stable")
        first = int(order[-1] + 1) % v.size
        base += complex(v[first])
        ev_angle.append(normals)
        ev_delta.append(np.roll(v, -1) - v)
    if not ev_angle:
        return ArcBreakpoints(np.zeros(1), np.array([base]), summands)

    ang = np.concatenate(ev_angle)
    delta = np.concatenate(ev_delta)
    order = np.argsort(ang, kind="stable")
    ang, delta = ang[order], delta[order]
    new = np.empty(ang.size, dtype=bool)
    new[0] = True
    new[1:] = np.diff(ang) > ANGLE_TOL
    starts = np.flatnonzero(new)
    # arcs begin at each breakpoint; the arc straddling 0 is the last one
    sums = base + np.cumsum(np.add.reduceat(delta, starts))
    return ArcBreakpoints(ang[starts], sums, summands)


@dataclass(frozen=True)
class SupportSolution:
    gain: float
    z_star: complex
    arc: int
    maximizers: tuple[int, ...]
    arc_count: int


def support_solve(summands: Sequence[ConvexPolygon]) -> SupportSolution:
    """Longest Thales diameter over the arcs of the summed support function."""
    arcs = arc_breakpoints(summands)
    a = int(np.argmax(arcs.diameters))
    z = complex(arcs.sums[a])
    return SupportSolution(abs(z), z, a, arcs.maximizers(a), len(arcs))


def support_solve_problem(problem: BeamProblem) -> SupportSolution:
    return support_solve(build_summands(problem))

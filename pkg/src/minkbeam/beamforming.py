"""Optimal discrete beamforming through vertex enumeration.

The gain ``|h0 + sum_n w_n h_n|`` over ``w_n in Theta_n`` is maximized at a
vertex of the Minkowski sum ``h_1 Conv(Theta_1) + ... + h_N Conv(Theta_N)``
(plus the point ``h0``), and that sum has at most ``sum_n |Theta_n|`` vertices.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Optional, Sequence

import numpy as np

from . import geometry
from .geometry import ConvexPolygon

#: Weight index reported for an RIS element switched off (w = 0).
OFF = -1

PSK_TOL = 1e-12


class PreconditionError(ValueError):
    """Raised when an input violates a solver's precondition."""


class Method(str, enum.Enum):
    GENERAL = "general"
    PSK_FAST_PATH = "psk_fast_path"


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


@dataclass(frozen=True)
class PhaseSet:
    elements: tuple[complex, ...]
    label: Optional[str] = None

    def __post_init__(self):
        elems = tuple(complex(e) for e in self.elements)
        if not elems:
            raise ValueError("phase set must be nonempty")
        if not all(_finite(e) for e in elems):
            raise ValueError("non-finite input")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def psk(cls, m: int) -> "PhaseSet":
        """The M-th roots of unity, in increasing phase order."""
        if m < 1:
            raise ValueError("M must be >= 1")
        return cls(tuple(cmath.exp(2j * math.pi * k / m) for k in range(m)), f"{m}-PSK")

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class BeamProblem:
    channels: tuple[complex, ...]
    phase_sets: tuple[PhaseSet, ...]
    direct_gain: complex = 0j
    ris_mode: bool = False

    def __post_init__(self):
        channels = tuple(complex(h) for h in self.channels)
        phase_sets = tuple(self.phase_sets)
        if not channels:
            raise ValueError("need at least one antenna")
        if len(channels) != len(phase_sets):
            raise ValueError(
                f"{len(channels)} channels but {len(phase_sets)} phase sets"
            )
        h0 = complex(self.direct_gain)
        if not all(_finite(h) for h in channels + (h0,)):
            raise ValueError("non-finite input")
        object.__setattr__(self, "channels", channels)
        object.__setattr__(self, "phase_sets", phase_sets)
        object.__setattr__(self, "direct_gain", h0)

    @property
    def n_antennas(self) -> int:
        return len(self.channels)

    def admissible(self, n: int) -> list[tuple[int, complex]]:
        """(index, weight) pairs antenna ``n`` may use; includes OFF in RIS mode."""
        pairs = list(enumerate(self.phase_sets[n].elements))
        return [(OFF, 0j)] + pairs if self.ris_mode else pairs

    def weight(self, n: int, index: int) -> complex:
        return 0j if index == OFF else self.phase_sets[n].elements[index]

    def evaluate(self, weight_indices: Sequence[int]) -> complex:
        """Combined channel ``h0 + sum_n w_n h_n`` for the given choice."""
        terms = [self.weight(n, i) * h for n, (i, h) in enumerate(zip(weight_indices, self.channels))]
        return self.direct_gain + complex(math.fsum(t.real for t in terms), math.fsum(t.imag for t in terms))


@dataclass(frozen=True)
class Solution:
    gain: float
    z_star: complex
    weight_indices: tuple[int, ...]
    weights: tuple[complex, ...]
    vertex_count: int
    method: Method = Method.GENERAL
    winning_vertex: Optional[int] = field(default=None, compare=False)


@lru_cache(maxsize=256)
def _set_hull(elements: tuple[complex, ...], augmented: bool) -> ConvexPolygon:
    if not augmented:
        return geometry.convex_hull(elements)
    hull = geometry.convex_hull((0j,) + elements)
    # position 0 is the added zero; shift so indices refer to ``elements``
    return ConvexPolygon(hull.vertices, tuple(p - 1 for p in hull.provenance))


def build_summands(problem: BeamProblem) -> list[ConvexPolygon]:
    """Scaled hulls ``h_n Conv(Theta_n)``, plus the point ``{h0}`` when h0 != 0.

    Provenance of summand ``n`` indexes ``problem.phase_sets[n].elements``;
    in RIS mode the added zero element is ``OFF``.
    """
    summands = []
    for h, ps in zip(problem.channels, problem.phase_sets):
        hull = _set_hull(ps.elements, problem.ris_mode)
        summands.append(geometry.scale(hull, h))
    if problem.direct_gain != 0:
        summands.append(ConvexPolygon((problem.direct_gain,), (0,)))
    return summands


def _make_solution(problem, indices, vertex_count, method, winner=None) -> Solution:
    indices = tuple(int(i) for i in indices)
    z = problem.evaluate(indices)
    weights = tuple(problem.weight(n, i) for n, i in enumerate(indices))
    return Solution(abs(z), z, indices, weights, vertex_count, method, winner)


def solve(problem: BeamProblem) -> Solution:
    """Globally optimal weights by scanning the Minkowski-sum vertices.

    Ties in modulus go to the first vertex in canonical order. The reported
    ``z_star`` and ``gain`` are recomputed from the chosen weights.
    """
    summands = build_summands(problem)
    total = geometry.minkowski_sum(summands)
    moduli = np.abs(total.as_array())
    k = int(np.argmax(moduli))
    tup = total.provenance[k]
    indices = [summands[n].provenance[tup[n]] for n in range(problem.n_antennas)]
    return _make_solution(problem, indices, len(total), Method.GENERAL, k)


@lru_cache(maxsize=256)
def _psk_permutation(elements: tuple[complex, ...], m: int) -> Optional[tuple[int, ...]]:
    """Map root-of-unity index -> element position, or None if not M-PSK."""
    if len(elements) != m:
        return None
    perm = [-1] * m
    for pos, w in enumerate(elements):
        r = round(cmath.phase(w) * m / (2 * math.pi)) % m
        if perm[r] != -1 or abs(w - cmath.exp(2j * math.pi * r / m)) > PSK_TOL:
            return None
        perm[r] = pos
    return tuple(perm)


def psk_fast_path(problem: BeamProblem) -> Solution:
    """Optimal weights for uniform M-PSK sets using rotational symmetry.

    Every scaled M-gon ``h_n * {w^0..w^(M-1)}`` (``w = e^{2j*pi/M}``) has
    exactly one edge with orientation in the sector ``[0, 2*pi/M)``; the
    remaining edges are that edge rotated by multiples of ``2*pi/M``. The sum
    polygon is therefore invariant under rotation by ``w``, and its vertices
    are ``w^s * V_k`` where ``V_0..V_{G-1}`` are the vertices reached while
    walking the N sector edges in angular order. Only those N edges get
    sorted, and only ``|V_k|`` needs checking.
    """
    if problem.direct_gain != 0 or problem.ris_mode:
        raise PreconditionError("not uniform PSK")
    m = len(problem.phase_sets[0])
    perms = [_psk_permutation(ps.elements, m) for ps in problem.phase_sets]
    if any(p is None for p in perms):
        raise PreconditionError("not uniform PSK")

    h = np.asarray(problem.channels, dtype=complex)
    n_ant = h.size
    root_idx = np.zeros(n_ant, dtype=np.int64)
    if m == 1:
        return _make_solution(problem, [p[0] for p in perms], 1, Method.PSK_FAST_PATH)

    active = np.flatnonzero(h != 0)
    if active.size == 0:
        return _make_solution(problem, [p[0] for p in perms], 1, Method.PSK_FAST_PATH)

    sector = 2 * math.pi / m
    omega = cmath.exp(1j * sector)
    # orientation of the edge leaving vertex h*w^0 is arg(h) + pi/2 + pi/M
    phi = np.angle(h[active]) + math.pi / 2 + math.pi / m
    q = np.floor(phi / sector)
    alpha = phi - q * sector
    over = alpha >= sector
    alpha[over] -= sector
    q[over] += 1
    start = (-q.astype(np.int64)) % m

    order = np.lexsort((active, alpha))
    alpha_sorted = alpha[order]
    ant_sorted = active[order]
    root_idx[active] = start

    roots = np.exp(1j * sector * np.arange(m))
    edge = h[ant_sorted] * roots[start[order]] * (omega - 1)
    v0 = complex(np.sum(h * roots[root_idx]))

    new_group = np.empty(alpha_sorted.size, dtype=bool)
    new_group[0] = True
    new_group[1:] = np.diff(alpha_sorted) > geometry.ANGLE_TOL
    group_starts = np.flatnonzero(new_group)
    partial = v0 + np.concatenate(([0j], np.cumsum(edge)))
    candidates = partial[group_starts]
    g = int(np.argmax(np.abs(candidates)))
    walked = int(group_starts[g])
    root_idx[ant_sorted[:walked]] += 1
    root_idx %= m

    indices = [perms[n][root_idx[n]] for n in range(n_ant)]
    return _make_solution(problem, indices, m * group_starts.size, Method.PSK_FAST_PATH)


def ris_augment(problem: BeamProblem) -> BeamProblem:
    """Same instance with ``Theta_n <- {0} U Theta_n`` switched on."""
    return replace(problem, ris_mode=True)


def ris_equivalence_check(
    problem: BeamProblem,
    t_steps: int = 32,
    max_enumeration: int = 2_000_000,
    n_samples: int = 200_000,
    seed: int = 0,
    tol: float = 1e-9,
) -> bool:
    """One-sided check of the amplitude-control reduction.

    ``problem.phase_sets`` are read as amplitude-controllable sets
    ``{t*w : t in [0, 1], w in Theta_n}``. The discrete solver on the
    augmented sets must do at least as well as every point of a
    ``t_steps`` x ``|Theta_n|`` grid of the continuous sets. The grid product
    is enumerated when it has at most ``max_enumeration`` tuples and sampled
    uniformly otherwise.
    """
    best_discrete = solve(ris_augment(problem)).gain
    t = np.linspace(0.0, 1.0, t_steps)
    choices = []
    for h, ps in zip(problem.channels, problem.phase_sets):
        pts = (t[:, None] * np.asarray(ps.elements)[None, :]).ravel() * h
        choices.append(np.unique(pts))
    h0 = problem.direct_gain
    size = math.prod(c.size for c in choices)
    if size <= max_enumeration:
        acc = np.array([h0])
        for c in choices:
            acc = (acc[:, None] + c[None, :]).ravel()
        best_grid = float(np.abs(acc).max())
    else:
        rng = np.random.default_rng(seed)
        acc = np.full(n_samples, h0, dtype=complex)
        for c in choices:
            acc += c[rng.integers(0, c.size, n_samples)]
        best_grid = float(np.abs(acc).max())
    return best_discrete >= best_grid - tol * max(1.0, best_grid)

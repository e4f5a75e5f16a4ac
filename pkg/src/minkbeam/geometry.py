"""Convex polygons in the complex plane and their Minkowski sums.

Points are plain Python ``complex`` values. A :class:`ConvexPolygon` is kept
in canonical form: strictly convex, counterclockwise, starting at the vertex
with the smallest imaginary part (ties: smallest real part).
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Iterable

import numpy as np

TWO_PI = 2.0 * math.pi
# Largest double below 2*pi; angles that round up to 2*pi are clamped here.
_BELOW_TWO_PI = math.nextafter(TWO_PI, 0.0)

#: Edges whose orientations differ by at most this many radians are merged.
ANGLE_TOL = 1e-12


class GeometryError(ValueError):
    pass


def _check_finite(points: Iterable[complex]) -> list[complex]:
    out = [complex(p) for p in points]
    for p in out:
        if not (math.isfinite(p.real) and math.isfinite(p.imag)):
            raise GeometryError("non-finite input")
    return out


def _start_key(p: complex) -> tuple[float, float]:
    return (p.imag, p.real)


@dataclass(frozen=True)
class ConvexPolygon:
    """Canonical convex polygon.

    ``provenance[i]`` names where ``vertices[i]`` came from: an index into the
    originating point set, or, for a Minkowski sum, a tuple with one vertex
    index per summand.
    """

    vertices: tuple[complex, ...]
    provenance: Sequence

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_point(self) -> bool:
        return len(self.vertices) == 1

    @property
    def is_segment(self) -> bool:
        return len(self.vertices) == 2

    def as_array(self) -> np.ndarray:
        return np.array(self.vertices, dtype=complex)


@dataclass(frozen=True)
class EdgeRecord:
    angle: float
    source_polygon: int
    vector: complex


def _cross(o: complex, a: complex, b: complex) -> float:
    return (a.real - o.real) * (b.imag - o.imag) - (a.imag - o.imag) * (b.real - o.real)


def _rotate_to_start(verts: list[complex], prov: list) -> tuple[list[complex], list]:
    k = min(range(len(verts)), key=lambda i: _start_key(verts[i]))
    return verts[k:] + verts[:k], prov[k:] + prov[:k]


def convex_hull(points: Iterable[complex]) -> ConvexPolygon:
    """Hull of a finite point set, by Andrew's monotone chain.

    Collinear boundary points are dropped. Each hull vertex records the
    smallest index of an input point that sits on it.
    """
    pts = _check_finite(points)
    if not pts:
        raise GeometryError("empty point set")
    order = sorted(range(len(pts)), key=lambda i: (pts[i].real, pts[i].imag, i))
    uniq: list[int] = []
    for i in order:
        if not uniq or pts[uniq[-1]] != pts[i]:
            uniq.append(i)
    if len(uniq) <= 2:
        verts = [pts[i] for i in uniq]
        prov = list(uniq)
        verts, prov = _rotate_to_start(verts, prov)
        return ConvexPolygon(tuple(verts), tuple(prov))

    def half(indices: list[int]) -> list[int]:
        chain: list[int] = []
        for i in indices:
            while len(chain) >= 2 and _cross(pts[chain[-2]], pts[chain[-1]], pts[i]) <= 0.0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(uniq)
    upper = half(uniq[::-1])
    ring = lower[:-1] + upper[:-1]
    verts = [pts[i] for i in ring]
    verts, prov = _rotate_to_start(verts, ring)
    return ConvexPolygon(tuple(verts), tuple(prov))


def canonicalize(vertices: Iterable[complex]) -> ConvexPolygon:
    """Bring a convex vertex list into canonical form.

    Orientation, duplicates and collinear vertices are all handled by
    re-hulling; provenance indexes the given list.
    """
    return convex_hull(vertices)


def scale(polygon: ConvexPolygon, factor: complex) -> ConvexPolygon:
    """Multiply every vertex by ``factor``.

    Complex multiplication is a rotation plus a dilation, so only the start
    vertex moves; provenance travels with its vertex. A zero factor collapses
    the polygon to the point 0 with provenance ``(0,)``.
    """
    (factor,) = _check_finite([factor])
    if factor == 0:
        return ConvexPolygon((0j,), (0,))
    verts = [factor * v for v in polygon.vertices]
    verts, prov = _rotate_to_start(verts, list(polygon.provenance))
    return ConvexPolygon(tuple(verts), tuple(prov))


def _angles(vectors: np.ndarray) -> np.ndarray:
    a = np.arctan2(vectors.imag, vectors.real)
    a = np.where(a < 0.0, a + TWO_PI, a)
    a = np.where(a >= TWO_PI, _BELOW_TWO_PI, a)
    # abs() turns the -0.0 that arctan2 gives for a negative-zero imaginary part into 0.0
    return np.abs(a)


def edge_angles(polygon: ConvexPolygon) -> list[EdgeRecord]:
    """Edges of a canonical polygon with their orientation in [0, 2*pi).

    A segment yields its out-and-back pair; a point yields nothing.
    """
    n = len(polygon.vertices)
    if n < 2:
        return []
    v = polygon.as_array()
    vec = np.roll(v, -1) - v
    return [
        EdgeRecord(float(a), 0, complex(e)) for a, e in zip(_angles(vec), vec)
    ]


class IndexTuples(Sequence):
    """Per-vertex index tuples of a Minkowski sum, computed on demand.

    Vertex ``k`` of the sum uses, from summand ``n``, the vertex reached after
    walking all of that summand's edges that precede ``k`` in the merged
    order. Storing the walk instead of the K-by-N table keeps memory linear.
    """

    def __init__(self, counts: np.ndarray, sorted_src: np.ndarray, group_starts: np.ndarray):
        self._counts = counts
        self._src = sorted_src
        self._starts = group_starts

    @property
    def n_summands(self) -> int:
        return len(self._counts)

    def __len__(self) -> int:
        return max(len(self._starts), 1)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return [self[i] for i in range(*k.indices(len(self)))]
        if k < 0:
            k += len(self)
        if not 0 <= k < len(self):
            raise IndexError(k)
        upto = int(self._starts[k]) if len(self._starts) else 0
        walked = np.bincount(self._src[:upto], minlength=self.n_summands)
        return tuple(int(i) for i in walked % self._counts)

    def __iter__(self):
        walked = np.zeros(self.n_summands, dtype=np.int64)
        prev = 0
        for k in range(len(self)):
            upto = int(self._starts[k]) if len(self._starts) else 0
            np.add.at(walked, self._src[prev:upto], 1)
            prev = upto
            yield tuple(int(i) for i in walked % self._counts)

    def __eq__(self, other):
        if isinstance(other, (IndexTuples, list, tuple)):
            return len(self) == len(other) and all(a == tuple(b) for a, b in zip(self, other))
        return NotImplemented

    def __repr__(self) -> str:
        if len(self) <= 8:
            return f"IndexTuples({list(self)!r})"
        return f"IndexTuples(<{len(self)} vertices x {self.n_summands} summands>)"


def minkowski_sum(polygons: Sequence[ConvexPolygon]) -> ConvexPolygon:
    """Minkowski sum of canonical convex polygons by merging sorted edges.

    Every edge of every summand is tagged with its orientation and source,
    the list is sorted by (angle, source), and the sum is traced from the
    sum of the start vertices. Edges from different summands that are
    parallel to within ``ANGLE_TOL`` are fused into one edge, so the output
    stays strictly convex and has at most ``sum(len(p))`` vertices.

    The returned provenance is an :class:`IndexTuples`.
    """
    if not polygons:
        raise GeometryError("empty polygon list")
    sizes = np.fromiter((len(p.vertices) for p in polygons), dtype=np.int64, count=len(polygons))
    flat = np.fromiter(
        (v for p in polygons for v in p.vertices), dtype=complex, count=int(sizes.sum())
    )
    offsets = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    origin = complex(flat[offsets].sum())

    owner = np.repeat(np.arange(len(polygons)), sizes)
    nxt = np.arange(flat.size) + 1
    nxt[offsets + sizes - 1] = offsets
    vec = flat[nxt] - flat
    keep = sizes[owner] > 1
    vec, owner = vec[keep], owner[keep]

    if vec.size == 0:
        prov = IndexTuples(sizes, owner, np.zeros(0, dtype=np.int64))
        return ConvexPolygon((origin,), prov)

    ang = _angles(vec)
    order = np.lexsort((owner, ang))
    ang, vec, owner = ang[order], vec[order], owner[order]

    new_group = np.empty(ang.size, dtype=bool)
    new_group[0] = True
    new_group[1:] = np.diff(ang) > ANGLE_TOL
    group_starts = np.flatnonzero(new_group)
    group_vec = np.add.reduceat(vec, group_starts)

    # vertex k sits before edge group k; the last group closes the ring
    verts = origin + np.concatenate(([0j], np.cumsum(group_vec[:-1])))
    prov = IndexTuples(sizes, owner, group_starts)
    return ConvexPolygon(tuple(complex(z) for z in verts), prov)

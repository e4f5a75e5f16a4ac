import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from minkbeam.geometry import (
    ConvexPolygon,
    GeometryError,
    canonicalize,
    convex_hull,
    edge_angles,
    minkowski_sum,
    scale,
)

from .conftest import FIG1_P1, FIG1_P2, random_polygon

# dyadic grid: orientation tests are exact, so collinear and duplicate cases are real
coord = st.integers(-40, 40).map(lambda k: k / 4)
point = st.builds(complex, coord, coord)


def assert_canonical(poly: ConvexPolygon):
    v = poly.vertices
    assert len(set(v)) == len(v)
    assert len(poly.provenance) == len(v)
    start = min(v, key=lambda z: (z.imag, z.real))
    assert v[0] == start
    if len(v) >= 3:
        for a, b, c in zip(v, v[1:] + v[:1], v[2:] + v[:2]):
            assert (b - a).real * (c - a).imag - (b - a).imag * (c - a).real > 0


def same_polygon(p, q, tol=1e-9):
    return len(p) == len(q) and all(abs(a - b) <= tol for a, b in zip(p.vertices, q.vertices))


class TestConvexHull:
    def test_single_point(self):
        hull = convex_hull([1 + 0j])
        assert hull.vertices == (1 + 0j,)
        assert tuple(hull.provenance) == (0,)

    def test_collinear_midpoint_dropped(self):
        hull = convex_hull([1, -1, 0])
        assert hull.vertices == (-1 + 0j, 1 + 0j)
        assert tuple(hull.provenance) == (1, 0)

    def test_roots_of_unity_square(self):
        hull = convex_hull([1, 1j, -1, -1j])
        assert hull.vertices == (-1j, 1, 1j, -1)
        assert tuple(hull.provenance) == (3, 0, 1, 2)

    def test_duplicates_keep_smallest_index(self):
        hull = convex_hull([2j, 0, 1, 0, 2j])
        assert tuple(hull.provenance) == (1, 2, 0)

    def test_interior_points_dropped(self):
        hull = convex_hull([0, 4, 4 + 4j, 4j, 1 + 1j, 2 + 3j, 2])
        assert hull.vertices == (0, 4, 4 + 4j, 4j)

    def test_errors(self):
        with pytest.raises(GeometryError, match="empty point set"):
            convex_hull([])
        with pytest.raises(GeometryError, match="non-finite input"):
            convex_hull([0, complex(math.nan, 0)])
        with pytest.raises(GeometryError, match="non-finite input"):
            convex_hull([complex(0, math.inf)])

    @given(st.lists(point, min_size=1, max_size=30))
    def test_canonical_and_idempotent(self, pts):
        hull = convex_hull(pts)
        assert_canonical(hull)
        assert all(pts[i] == v for i, v in zip(hull.provenance, hull.vertices))
        again = convex_hull(hull.vertices)
        assert again.vertices == hull.vertices

    def test_extremality(self, rng):
        for _ in range(50):
            pts = rng.standard_normal(20) + 1j * rng.standard_normal(20)
            hull = np.array(convex_hull(pts).vertices)
            for theta in rng.uniform(0, 2 * np.pi, 200):
                rot = np.exp(-1j * theta)
                full = np.max((rot * pts).real)
                assert np.max((rot * hull).real) == pytest.approx(full, rel=1e-12, abs=1e-15)


class TestCanonicalize:
    def test_clockwise_square(self):
        poly = canonicalize([1j, 1 + 1j, 1, 0])
        assert poly.vertices == (0, 1, 1 + 1j, 1j)

    def test_duplicate(self):
        a, b = 1 + 2j, 3 - 1j
        assert canonicalize([a, a, b]).vertices == (b, a)

    def test_idempotent(self):
        poly = convex_hull([0, 2, 3 + 1j, 1 + 2j])
        assert canonicalize(poly.vertices).vertices == poly.vertices

    def test_collinear_vertex_removed(self):
        assert canonicalize([0, 1, 2, 2 + 2j]).vertices == (0, 2, 2 + 2j)


class TestScale:
    square = convex_hull([1, 1j, -1, -1j])

    def test_identity(self):
        assert scale(self.square, 1) == self.square

    def test_rotation(self):
        seg = scale(convex_hull([-1, 1]), 1j)
        assert seg.vertices == (-1j, 1j)
        assert tuple(seg.provenance) == (0, 1)

    def test_collapse(self):
        pt = scale(self.square, 0)
        assert pt.vertices == (0j,)
        assert tuple(pt.provenance) == (0,)

    def test_non_finite(self):
        with pytest.raises(GeometryError):
            scale(self.square, complex(math.nan, 1))

    def test_commutes_with_hull(self, rng):
        for _ in range(200):
            pts = rng.standard_normal(10) + 1j * rng.standard_normal(10)
            h = complex(rng.standard_normal(), rng.standard_normal())
            lhs = scale(convex_hull(pts), h)
            rhs = convex_hull(h * pts)
            assert same_polygon(lhs, rhs, 1e-12)
            assert tuple(lhs.provenance) == tuple(rhs.provenance)


class TestEdgeAngles:
    def test_unit_square(self):
        angles = [e.angle for e in edge_angles(convex_hull([0, 1, 1 + 1j, 1j]))]
        assert angles == pytest.approx([0, math.pi / 2, math.pi, 3 * math.pi / 2], abs=1e-15)

    def test_segment(self):
        edges = edge_angles(convex_hull([-1, 1]))
        assert [e.angle for e in edges] == [0.0, math.pi]
        assert [e.vector for e in edges] == [2, -2]

    def test_point(self):
        assert edge_angles(convex_hull([3 + 3j])) == []

    def test_equilateral_triangle(self):
        # vertices at 90, 210, 330 degrees; the two lower ones tie on Im exactly
        s = math.sqrt(3) / 2
        tri = convex_hull([1j, complex(-s, -0.5), complex(s, -0.5)])
        assert tri.vertices[0] == complex(-s, -0.5)
        # atan2 of consecutive differences, computed by hand
        expected = [0.0, 2.0943951023931953, 4.188790204786391]
        assert [e.angle for e in edge_angles(tri)] == pytest.approx(expected, abs=1e-15)

    @given(st.lists(point, min_size=2, max_size=20))
    def test_sorted_within_polygon(self, pts):
        angles = [e.angle for e in edge_angles(convex_hull(pts))]
        assert all(0 <= a < 2 * math.pi for a in angles)
        assert angles == sorted(angles)


def hull_of_sums(polys):
    return convex_hull([sum(c) for c in itertools.product(*(p.vertices for p in polys))])


class TestMinkowskiSum:
    def test_unit_squares(self):
        sq = convex_hull([0, 1, 1 + 1j, 1j])
        assert minkowski_sum([sq, sq]).vertices == (0, 2, 2 + 2j, 2j)

    def test_point_summand(self):
        poly = convex_hull([0, 3, 1 + 2j, -1 + 1j])
        c = 0.5 - 2j
        moved = minkowski_sum([poly, convex_hull([c])])
        assert len(moved) == len(poly)
        assert all(abs(a - (b + c)) < 1e-15 for a, b in zip(moved.vertices, poly.vertices))
        assert [t[0] for t in moved.provenance] == list(range(len(poly)))
        assert all(t[1] == 0 for t in moved.provenance)

    def test_worked_example(self):
        p1, p2 = convex_hull(FIG1_P1), convex_hull(FIG1_P2)
        assert p1.vertices == FIG1_P1 and p2.vertices == FIG1_P2
        total = minkowski_sum([p1, p2])
        assert list(total.provenance) == [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 0)]
        assert same_polygon(total, hull_of_sums([p1, p2]))

    def test_parallel_edges_merged(self):
        sq = convex_hull([0, 1, 1 + 1j, 1j])
        seg = convex_hull([0, 2])
        total = minkowski_sum([sq, seg])
        assert total.vertices == (0, 3, 3 + 1j, 1j)
        assert list(total.provenance) == [(0, 0), (1, 1), (2, 1), (3, 0)]

    def test_all_points(self):
        total = minkowski_sum([convex_hull([1j]), convex_hull([2])])
        assert total.vertices == (2 + 1j,)
        assert list(total.provenance) == [(0, 0)]

    def test_parallel_segments_give_segment(self):
        total = minkowski_sum([convex_hull([0, 1 + 1j]), convex_hull([0, 2 + 2j])])
        assert total.vertices == (0, 3 + 3j)

    def test_empty(self):
        with pytest.raises(GeometryError):
            minkowski_sum([])

    def test_against_hull_of_all_sums(self, rng):
        for _ in range(300):
            polys = [random_polygon(rng) for _ in range(int(rng.integers(1, 5)))]
            total = minkowski_sum(polys)
            assert_canonical(total)
            assert same_polygon(total, hull_of_sums(polys))
            assert len(total) <= sum(len(p) for p in polys)
            for z, tup in zip(total.vertices, total.provenance):
                assert abs(z - sum(p.vertices[i] for p, i in zip(polys, tup))) <= 1e-12
            # random access agrees with iteration
            assert [total.provenance[k] for k in range(len(total))] == list(total.provenance)

    def test_distributivity(self, rng):
        for _ in range(100):
            na, nb = rng.integers(1, 9, size=2)
            a = rng.standard_normal(na) + 1j * rng.standard_normal(na)
            b = rng.standard_normal(nb) + 1j * rng.standard_normal(nb)
            lhs = convex_hull([x + y for x in a for y in b])
            rhs = minkowski_sum([convex_hull(a), convex_hull(b)])
            assert same_polygon(lhs, rhs)

    def test_translation_equivariance(self, rng):
        for _ in range(100):
            polys = [random_polygon(rng) for _ in range(3)]
            c = complex(*rng.standard_normal(2))
            base = minkowski_sum(polys)
            moved = minkowski_sum(polys + [convex_hull([c])])
            assert all(abs(a - (b + c)) < 1e-12 for a, b in zip(moved.vertices, base.vertices))
            assert [t[:3] for t in moved.provenance] == list(base.provenance)

    def test_large_sum_is_cheap(self, rng):
        sq = convex_hull([1, 1j, -1, -1j])
        h = rng.standard_normal(20000) + 1j * rng.standard_normal(20000)
        total = minkowski_sum([scale(sq, x) for x in h])
        assert len(total) <= 4 * h.size
        assert len(total.provenance[len(total) - 1]) == h.size

import math

import numpy as np
import pytest

from segcover.geom import (CARDINALS, Covering, Point, Rect, Segment,
                           UnitSquare, bounding_box, clip_segment_to_square,
                           segments_to_array, transform_cardinal,
                           untransform_cardinal, verify_covering)


def seg(ax, ay, bx, by):
    return Segment(Point(ax, ay), Point(bx, by))


def rand_segments(rng, n, scale=3.0):
    pts = rng.uniform(-scale, scale, size=(n, 4))
    return [seg(*row) for row in pts]


class TestBoundingBox:
    def test_simple(self):
        assert bounding_box([seg(0, 0, 1, 1)]) == Rect(0, 1, 0, 1)

    def test_degenerate_point(self):
        assert bounding_box([seg(0, 0, 0, 0)]) == Rect(0, 0, 0, 0)

    def test_two_segments(self):
        r = bounding_box([seg(0, 2, 3, 0), seg(1, 1, 1, 5)])
        assert r == Rect(0, 3, 0, 5)

    def test_empty_errors(self):
        with pytest.raises(ValueError, match="empty instance"):
            bounding_box([])


class TestClip:
    def test_fully_inside(self):
        s = seg(0.2, -0.2, 0.8, -0.8)
        covered, uncovered = clip_segment_to_square(s, UnitSquare(Point(0, 0)))
        assert covered == s
        assert uncovered == []

    def test_horizontal_crossing(self):
        s = seg(-0.5, -0.5, 1.5, -0.5)
        covered, uncovered = clip_segment_to_square(s, UnitSquare(Point(0, 0)),
                                                    eps=0.0)
        assert covered.a == Point(0, -0.5) and covered.b == Point(1, -0.5)
        assert len(uncovered) == 2
        assert uncovered[0].a == Point(-0.5, -0.5)
        assert uncovered[1].b == Point(1.5, -0.5)

    def test_disjoint(self):
        s = seg(2, 2, 3, 3)
        covered, uncovered = clip_segment_to_square(s, UnitSquare(Point(0, 0)))
        assert covered is None
        assert uncovered == [s]

    def test_partition_lengths(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            s = seg(*rng.uniform(-2, 2, size=4))
            sq = UnitSquare(Point(*rng.uniform(-2, 2, size=2)))
            covered, uncovered = clip_segment_to_square(s, sq, eps=0.0)
            total = sum(u.length() for u in uncovered)
            if covered is not None:
                total += covered.length()
            assert total == pytest.approx(s.length(), abs=1e-9)


class TestVerifyCovering:
    def test_uncovered_half(self):
        cov = Covering((UnitSquare(Point(0, 1)),))
        assert not verify_covering([seg(0, 0, 2, 0)], cov)

    def test_vacuous(self):
        assert verify_covering([], Covering(()))
        assert verify_covering([], Covering((UnitSquare(Point(5, 5)),)))

    def test_two_squares_split(self):
        cov = Covering((UnitSquare(Point(0, 1)), UnitSquare(Point(1, 1))))
        assert verify_covering([seg(0.1, 0.5, 1.9, 0.5)], cov)

    def test_monotone_in_squares(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            segs = rand_segments(rng, 5, scale=1.5)
            sqs = [UnitSquare(Point(*rng.uniform(-2, 2, 2))) for _ in range(3)]
            a = verify_covering(segs, Covering(tuple(sqs[:2])))
            b = verify_covering(segs, Covering(tuple(sqs)))
            assert b or not a

    def test_translation_invariance(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            segs = rand_segments(rng, 4, scale=1.0)
            sqs = Covering(tuple(UnitSquare(Point(*rng.uniform(-1, 1, 2)))
                                 for _ in range(2)))
            dx, dy = rng.uniform(-100, 100, 2)
            moved = [Segment(Point(s.a.x + dx, s.a.y + dy),
                             Point(s.b.x + dx, s.b.y + dy)) for s in segs]
            assert verify_covering(segs, sqs) == \
                verify_covering(moved, sqs.translated(dx, dy))


class TestTransformCardinal:
    def test_identity_direction(self):
        assert transform_cardinal(Point(1, 2), "up") == Point(1, 2)

    def test_involution(self):
        for d in CARDINALS:
            p = Point(1, 2)
            q = untransform_cardinal(transform_cardinal(p, d), d)
            assert math.isclose(q.x, p.x, abs_tol=1e-12)
            assert math.isclose(q.y, p.y, abs_tol=1e-12)

    def test_direction_becomes_up(self):
        vecs = {"up": (0, 1), "right": (1, 0), "down": (0, -1), "left": (-1, 0)}
        for d, (vx, vy) in vecs.items():
            p = transform_cardinal(Point(vx, vy), d)
            assert (p.x, p.y) == (0, 1)

    def test_bbox_commutes(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            segs = rand_segments(rng, 6)
            d = CARDINALS[rng.integers(0, 4)]
            lhs = bounding_box(transform_cardinal(segs, d))
            rhs = transform_cardinal(bounding_box(segs), d)
            for f in ("x_min", "x_max", "y_min", "y_max"):
                assert getattr(lhs, f) == pytest.approx(getattr(rhs, f), abs=1e-12)

    def test_square_stays_axis_parallel(self):
        sq = UnitSquare(Point(0.25, 1.5))
        for d in CARDINALS:
            out = transform_cardinal(sq, d)
            assert isinstance(out, UnitSquare)
            back = untransform_cardinal(out, d)
            assert back.top_left.x == pytest.approx(0.25, abs=1e-12)
            assert back.top_left.y == pytest.approx(1.5, abs=1e-12)

    def test_array_matches_objects(self):
        rng = np.random.default_rng(9)
        segs = rand_segments(rng, 8)
        arr = segments_to_array(segs)
        for d in CARDINALS:
            got = transform_cardinal(arr, d)
            want = segments_to_array(transform_cardinal(segs, d))
            np.testing.assert_allclose(got, want, atol=0)

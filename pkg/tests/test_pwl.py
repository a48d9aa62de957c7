import math

import numpy as np
import pytest

from segcover.geom import Point, Segment
from segcover.pwl import (EMPTY_FN, PiecewiseLinearFn, constant_fn,
                          merge_skylines, pwl_compose, pwl_max, pwl_min,
                          pwl_reduce, segment_skyline, upper_envelope)

INF = math.inf


def seg(ax, ay, bx, by):
    return Segment(Point(ax, ay), Point(bx, by))


def skyline_oracle(segments, ell):
    """Leftmost x over all segment points with y >= ell (direct scan)."""
    best = INF
    for s in segments:
        (x1, y1), (x2, y2) = (s.a.x, s.a.y), (s.b.x, s.b.y)
        for (x, y) in ((x1, y1), (x2, y2)):
            if y >= ell:
                best = min(best, x)
        if min(y1, y2) < ell <= max(y1, y2) and y1 != y2:
            t = (ell - y1) / (y2 - y1)
            best = min(best, x1 + t * (x2 - x1))
    return best if best < INF else math.nan


def envelope_oracle(segments, x):
    best = -INF
    for s in segments:
        (x1, y1), (x2, y2) = (s.a.x, s.a.y), (s.b.x, s.b.y)
        if min(x1, x2) <= x <= max(x1, x2):
            if x1 == x2:
                best = max(best, y1, y2)
            else:
                t = (x - x1) / (x2 - x1)
                best = max(best, y1 + t * (y2 - y1))
    return best if best > -INF else math.nan


class TestSegmentSkyline:
    def test_positive_gradient(self):
        f = segment_skyline(seg(0, 0, 1, 1)).fn
        assert f(-5) == 0
        assert f(0) == 0
        assert f(0.5) == pytest.approx(0.5)
        assert f(1) == pytest.approx(1)
        assert math.isnan(f(1.001))

    def test_negative_gradient(self):
        f = segment_skyline(seg(0, 1, 1, 0)).fn
        assert f(-3) == 0
        assert f(1) == 0
        assert math.isnan(f(1.0001))

    def test_vertical(self):
        f = segment_skyline(seg(2, 3, 2, 5)).fn
        assert f(4.3) == 2
        assert f(5) == 2
        assert math.isnan(f(5.1))


class TestMergeSkylines:
    def test_identity(self):
        sk = segment_skyline(seg(0, 0, 1, 1))
        merged = merge_skylines([sk])
        for ell in (-1, 0.2, 0.9, 1.0):
            assert merged.fn(ell) == pytest.approx(sk.fn(ell))

    def test_disjoint_ranges(self):
        a = segment_skyline(seg(5, 0, 5, 1))
        b = segment_skyline(seg(0, 2, 0, 3))
        merged = merge_skylines([a, b]).fn
        assert merged(0.5) == 0  # the left segment reaches above 0.5 too
        assert merged(2.5) == 0
        assert math.isnan(merged(3.5))

    def test_against_sampling_oracle(self):
        rng = np.random.default_rng(42)
        for _ in range(30):
            segs = [seg(*rng.uniform(-3, 3, 4)) for _ in range(10)]
            merged = merge_skylines([segment_skyline(s) for s in segs]).fn
            ys = rng.uniform(-3.5, 3.5, 100)
            for ell in ys:
                want = skyline_oracle(segs, ell)
                got = merged(ell)
                if math.isnan(want):
                    assert math.isnan(got)
                else:
                    assert got == pytest.approx(want, abs=1e-9)

    def test_monotone_nondecreasing(self):
        rng = np.random.default_rng(1)
        segs = [seg(*rng.uniform(-2, 2, 4)) for _ in range(20)]
        merged = merge_skylines([segment_skyline(s) for s in segs]).fn
        ys = np.sort(rng.uniform(-2.5, 2.5, 200))
        vals = [merged(ell) for ell in ys]
        vals = [v for v in vals if not math.isnan(v)]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))


class TestUpperEnvelope:
    def test_single_flat(self):
        f = upper_envelope([seg(0, 0, 2, 0)])
        assert f(0.0) == 0 and f(1.7) == 0 and f(2.0) == 0
        assert math.isnan(f(2.2))

    def test_tent(self):
        f = upper_envelope([seg(0, 0, 2, 2), seg(0, 2, 2, 0)])
        for x in (0.0, 0.3, 1.0, 1.5, 2.0):
            assert f(x) == pytest.approx(max(x, 2 - x), abs=1e-12)

    def test_against_sampling_oracle(self):
        rng = np.random.default_rng(3)
        for _ in range(30):
            segs = [seg(*rng.uniform(-3, 3, 4)) for _ in range(20)]
            env = upper_envelope(segs)
            for x in rng.uniform(-3.5, 3.5, 100):
                want = envelope_oracle(segs, x)
                got = env(x)
                if math.isnan(want):
                    assert math.isnan(got)
                else:
                    assert got == pytest.approx(want, abs=1e-9)

    def test_dominance_with_equality(self):
        rng = np.random.default_rng(8)
        segs = [seg(*rng.uniform(-2, 2, 4)) for _ in range(15)]
        env = upper_envelope(segs)
        attained = 0
        for s in segs:
            for t in rng.uniform(0, 1, 20):
                p = s.at(t)
                v = env(p.x)
                assert v >= p.y - 1e-9
                if v <= p.y + 1e-9:
                    attained += 1
        assert attained > 0

    def test_vertical_segment_spike(self):
        env = upper_envelope([seg(0, 0, 2, 0), seg(1, 0, 1, 5)])
        assert env(1.0) == pytest.approx(5.0)
        assert env(0.999) == pytest.approx(0.0)

    def test_breakpoint_budget(self):
        rng = np.random.default_rng(13)
        for n in (10, 50):
            segs = [seg(*rng.uniform(-3, 3, 4)) for _ in range(n)]
            env = upper_envelope(segs)
            assert len(env.pieces) <= 64 * n
            sky = merge_skylines([segment_skyline(s) for s in segs])
            assert len(sky.fn.pieces) <= 64 * n


class TestMinMax:
    def test_constants(self):
        f = constant_fn(1.0)
        g = constant_fn(2.0)
        assert pwl_min(f, g)(123.0) == 1.0
        assert pwl_max(f, g)(-7.0) == 2.0

    def test_crossing(self):
        f = PiecewiseLinearFn([(0, 2, 0, 2)])   # x
        g = PiecewiseLinearFn([(0, 2, 2, 0)])   # 2 - x
        m = pwl_min(f, g)
        assert m(0.5) == pytest.approx(0.5)
        assert m(1.5) == pytest.approx(0.5)
        assert 1.0 in m.breakpoints()

    def test_pointwise_random(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            fs = sorted(rng.uniform(-5, 5, 6))
            gs = sorted(rng.uniform(-5, 5, 6))
            f = PiecewiseLinearFn([(fs[0], fs[2], rng.uniform(-1, 1), rng.uniform(-1, 1)),
                                   (fs[3], fs[5], rng.uniform(-1, 1), rng.uniform(-1, 1))])
            g = PiecewiseLinearFn([(gs[0], gs[3], rng.uniform(-1, 1), rng.uniform(-1, 1)),
                                   (gs[4], gs[5], rng.uniform(-1, 1), rng.uniform(-1, 1))])
            mn = pwl_min(f, g)
            mx = pwl_max(f, g)
            for x in rng.uniform(-6, 6, 200):
                fv, gv = f(x), g(x)
                both = [v for v in (fv, gv) if not math.isnan(v)]
                want_min = min(both) if both else math.nan
                want_max = max(both) if both else math.nan
                if math.isnan(want_min):
                    assert math.isnan(mn(x)) and math.isnan(mx(x))
                else:
                    assert mn(x) == pytest.approx(want_min, abs=1e-9)
                    assert mx(x) == pytest.approx(want_max, abs=1e-9)

    def test_min_max_duality(self):
        rng = np.random.default_rng(23)
        f = PiecewiseLinearFn([(0, 3, rng.uniform(), rng.uniform()),
                               (4, 6, rng.uniform(), rng.uniform())])
        g = PiecewiseLinearFn([(1, 5, rng.uniform(), rng.uniform())])
        lhs = pwl_min(f, g)
        rhs = pwl_max(f.negated(), g.negated()).negated()
        for x in rng.uniform(-1, 7, 300):
            a, b = lhs(x), rhs(x)
            if math.isnan(a):
                assert math.isnan(b)
            else:
                assert a == pytest.approx(b, abs=1e-12)


class TestCompose:
    def test_identity_outer(self):
        ident = PiecewiseLinearFn([(-10, 10, -10, 10)])
        g = PiecewiseLinearFn([(0, 1, 2, 3), (1, 2, 3, 3.5)])
        h = pwl_compose(ident, g)
        for x in np.linspace(0, 2, 21):
            assert h(x) == pytest.approx(g(x), abs=1e-12)

    def test_affine(self):
        f = PiecewiseLinearFn([(0, 10, 0, 20)])        # 2x
        g = PiecewiseLinearFn([(0, 3, 1, 4)])          # x + 1
        h = pwl_compose(f, g)
        for x in np.linspace(0, 3, 13):
            assert h(x) == pytest.approx(2 * x + 2, abs=1e-12)
        assert len(h.pieces) <= len(f.pieces) + len(g.pieces)

    def test_random_monotone(self):
        rng = np.random.default_rng(31)
        for _ in range(20):
            fys = np.cumsum(rng.uniform(0, 1, 7))
            fxs = np.cumsum(rng.uniform(0.1, 1, 7))
            f = PiecewiseLinearFn([(fxs[i], fxs[i + 1], fys[i], fys[i + 1])
                                   for i in range(6)])
            gys = fxs[0] + np.sort(rng.uniform(0, fxs[-1] - fxs[0], 5))
            gxs = np.cumsum(rng.uniform(0.1, 1, 5))
            g = PiecewiseLinearFn([(gxs[i], gxs[i + 1], gys[i], gys[i + 1])
                                   for i in range(4)])
            h = pwl_compose(f, g)
            for x in rng.uniform(gxs[0], gxs[-1], 200):
                assert h(x) == pytest.approx(f(g(x)), abs=1e-12)

    def test_non_monotone_rejected(self):
        f = PiecewiseLinearFn([(-10, 10, -10, 10)])
        g = PiecewiseLinearFn([(0, 1, 0, 1), (1, 2, 1, 0)])
        with pytest.raises(ValueError, match="monotone"):
            pwl_compose(f, g)

    def test_range_mismatch_rejected(self):
        f = PiecewiseLinearFn([(0, 1, 0, 1)])
        g = PiecewiseLinearFn([(0, 1, 5, 6)])
        with pytest.raises(ValueError, match="domain"):
            pwl_compose(f, g)


class TestMisc:
    def test_reduce_empty(self):
        assert pwl_reduce([], "min") is EMPTY_FN

    def test_dump_breakpoints_roundtrip(self):
        import json
        f = PiecewiseLinearFn([(0, 1, 2, 3), (2, 4, 1, 1)])
        data = json.loads(f.dump_breakpoints())
        assert data == [[[0, 2], [1, 3]], [[2, 1], [4, 1]]]

    def test_reparam(self):
        f = PiecewiseLinearFn([(0, 2, 0, 4)])  # 2x on [0,2]
        g = f.reparam(-1.0, 1.0)               # g(x) = f(1 - x)
        assert g(0.0) == pytest.approx(2.0)
        assert g(1.0) == pytest.approx(0.0)
        assert g(-1.0) == pytest.approx(4.0)

"""Instance generators and independent brute-force oracles.

Everything here is deliberately simple and shares only geom primitives with
the production algorithms: these are the trusted side of every test.
Generators are deterministic per seed.
"""

from __future__ import annotations

import math
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ._config import EPS_GEOM
from .geom import (Covering, Point, Segment, UnitSquare, cover_interval,
                   verify_covering)

INF = math.inf


# ---------------------------------------------------------------------------
# generators


def _segment_in_union(seg: Segment, squares: Sequence[UnitSquare]) -> bool:
    ivs = []
    for sq in squares:
        iv = cover_interval(seg, sq.bounds, 1e-12)
        if iv is not None:
            ivs.append(iv)
    ivs.sort()
    reach = 0.0
    for t0, t1 in ivs:
        if t0 > reach + 1e-12:
            return False
        reach = max(reach, t1)
    return reach >= 1.0 - 1e-12


def gen_planted_coverable(k: int, n: int, seed: int, spread: float = 1.6,
                          one_per_side: bool = False
                          ) -> Tuple[List[Segment], Covering]:
    """Sample n segments inside the union of k planted unit squares.

    Returns the segments and the plant itself as a ground-truth witness.
    With one_per_side=True (k = 4 only) the plant is the left/top/bottom/
    right arrangement with the bounding box pinned on all four sides.
    """
    if not 1 <= k <= 4:
        raise ValueError("k must be in 1..4")
    rng = np.random.default_rng(seed)
    if one_per_side:
        if k != 4:
            raise ValueError("one_per_side requires k = 4")
        w = rng.uniform(2.15, 2.9)
        h = rng.uniform(2.15, 2.9)
        y_l = rng.uniform(1.0, h)
        x_t = rng.uniform(0.05, w - 1.6)
        x_b = rng.uniform(x_t + 0.3, w - 1.2)
        squares = [UnitSquare(Point(0.0, y_l)),
                   UnitSquare(Point(x_t, h)),
                   UnitSquare(Point(x_b, 1.0)),
                   UnitSquare(Point(w - 1.0, rng.uniform(1.0, h)))]
    else:
        squares = [UnitSquare(Point(*rng.uniform(0.0, spread, 2)))
                   for _ in range(k)]
    segments: List[Segment] = []
    if one_per_side:
        # pin the bounding box so every square touches its own side
        w_, h_ = squares[3].bounds[1], squares[1].bounds[3]
        anchors = [Point(0.0, squares[0].top_left.y - 0.5),
                   Point(squares[1].top_left.x + 0.5, h_),
                   Point(squares[2].top_left.x + 0.5, h_ - h),
                   Point(w_, squares[3].top_left.y - 0.5)]
        for p in anchors:
            segments.append(Segment(p, p))
    m = len(squares)
    while len(segments) < n:
        i = int(rng.integers(0, m))
        x0, x1, y0, y1 = squares[i].bounds
        a = Point(rng.uniform(x0, x1), rng.uniform(y0, y1))
        j = i if rng.uniform() < 0.7 else int(rng.integers(0, m))
        x0, x1, y0, y1 = squares[j].bounds
        for _ in range(64):
            b = Point(rng.uniform(x0, x1), rng.uniform(y0, y1))
            if _segment_in_union(Segment(a, b), squares):
                segments.append(Segment(a, b))
                break
        else:
            bx0, bx1, by0, by1 = squares[i].bounds
            b = Point(rng.uniform(bx0, bx1), rng.uniform(by0, by1))
            segments.append(Segment(a, b))
    plant = Covering(tuple(squares))
    assert verify_covering(segments, plant, EPS_GEOM)
    return segments, plant


def gen_separated_points(k: int, seed: int, margin: float = 0.2,
                         clutter: int = 0) -> List[Segment]:
    """k+1 point segments with pairwise Chebyshev distance > 1 + margin,
    so the set is certifiably not k-coverable. Optional clutter segments
    near the first point do not change that."""
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = np.random.default_rng(seed)
    step = 1.0 + margin + 1e-6
    pts = []
    x = y = 0.0
    for _ in range(k + 1):
        pts.append(Point(x, y))
        x += step + rng.uniform(0, 0.3)
        y += step + rng.uniform(0, 0.3)
    out = [Segment(p, p) for p in pts]
    for _ in range(clutter):
        dx, dy = rng.uniform(-0.3, 0.3, 2)
        ex, ey = rng.uniform(-0.3, 0.3, 2)
        out.append(Segment(Point(pts[0].x + dx, pts[0].y + dy),
                           Point(pts[0].x + ex, pts[0].y + ey)))
    return out


# ---------------------------------------------------------------------------
# exact-ish decision oracle for tiny instances


def _leftmost_uncovered(segments, placed, eps):
    """Leftmost point of the closure of what the placed squares miss."""
    best = None
    for seg in segments:
        ivs = []
        for box in placed:
            iv = cover_interval(seg, box, 0.0)
            if iv is not None:
                ivs.append(iv)
        ivs.sort()
        gaps = []
        cur = 0.0
        for t0, t1 in ivs:
            if t0 > cur:
                gaps.append((cur, t0))
            cur = max(cur, t1)
        if cur < 1.0:
            gaps.append((cur, 1.0))
        for (u0, u1) in gaps:
            if (u1 - u0) * max(seg.length(), 1.0) <= eps:
                continue
            for u in (u0, u1):
                p = seg.at(u)
                if best is None or p.x < best.x:
                    best = p
    return best


def _tops_for(segments, side, x0, p, res) -> List[float]:
    """Candidate top coordinates for a square flush-left at x0 covering p."""
    ys = set()
    for seg in segments:
        for y in (seg.a.y, seg.b.y):
            ys.add(y)
            ys.add(y + side)
        # crossings with the square's vertical sides
        for xc in (x0, x0 + side):
            dx = seg.b.x - seg.a.x
            if dx != 0.0:
                t = (xc - seg.a.x) / dx
                if 0.0 <= t <= 1.0:
                    yc = seg.a.y + t * (seg.b.y - seg.a.y)
                    ys.add(yc)
                    ys.add(yc + side)
    lo, hi = p.y, p.y + side
    out = {y for y in ys if lo - 1e-12 <= y <= hi + 1e-12}
    out.update(np.arange(lo, hi, res))
    out.add(hi)
    return sorted(out, reverse=True)


def _decide_flush(segments, k: int, side: float, eps: float,
                  res: float) -> Optional[List]:
    """Branch-and-bound: the square covering the leftmost uncovered point
    can be slid flush against it; vertical positions are enumerated over
    critical coordinates plus a grid fill."""
    return _decide_flush_rec(segments, k, side, eps, res, [])


def _decide_flush_rec(segments, k, side, eps, res, placed):
    p = _leftmost_uncovered(segments, placed, eps)
    if p is None:
        return placed
    if k == 0:
        return None
    x0 = p.x
    for top in _tops_for(segments, side, x0, p, res):
        box = (x0, x0 + side, top - side, top)
        if not (box[2] - eps <= p.y <= box[3] + eps):
            continue
        got = _decide_flush_rec(segments, k - 1, side, eps, res, placed + [box])
        if got is not None:
            return got
    return None


def oracle_decide_grid(segments: Sequence[Segment], k: int,
                       resolution: float = 0.1) -> str:
    """Exhaustive decision for tiny instances: 'yes', 'no' or 'boundary'.

    Robustness is probed by deciding with squares deflated and inflated by
    twice the resolution: a deflated cover certifies 'yes', a failed
    inflated search certifies 'no', anything in between is 'boundary'.
    """
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    if not segments:
        return "yes"
    delta = 2.0 * resolution
    if _decide_flush(segments, k, 1.0 - delta, EPS_GEOM, resolution) is not None:
        return "yes"
    if _decide_flush(segments, k, 1.0 + delta, EPS_GEOM, resolution) is None:
        return "no"
    return "boundary"

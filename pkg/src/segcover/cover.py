"""Decide k-coverability of a segment set for k = 1..4 with witnesses.

k = 1..3 follow the corner placements of the bounding box; k = 4 adds the
one-square-per-side configuration, decided by scanning the position of the
left square while the positions of the remaining squares follow greedily.
Every "yes" answer carries a covering that has been verified against the
input.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ._backend import K
from ._config import EPS_GEOM
from .geom import (Covering, Point, Rect, Segment, UnitSquare,
                   bounding_box_array, segments_to_array)
from .pwl import (EMPTY_FN, PiecewiseLinearFn, compose_partial, pwl_reduce,
                  segment_skyline)

INF = math.inf


def _covering_from_boxes(boxes: Sequence[Tuple[float, float, float, float]]) -> Covering:
    return Covering(tuple(UnitSquare(Point(b[0], b[3])) for b in boxes))


# ---------------------------------------------------------------------------
# k = 1 and the thin (1-D) case


def coverable_1(segments: Sequence[Segment]) -> Optional[Covering]:
    """One unit square at the bbox top-left iff the bbox fits in 1 x 1."""
    if not segments:
        return Covering(())
    arr = segments_to_array(segments)
    return _cover1_array(arr, EPS_GEOM)


def _cover1_array(arr, eps):
    if len(arr) == 0:
        return Covering(())
    bb = bounding_box_array(arr)
    if bb.width <= 1.0 + eps and bb.height <= 1.0 + eps:
        return Covering((UnitSquare(Point(bb.x_min, bb.y_max)),))
    return None


def coverable_1d(segments: Sequence[Segment], axis: str,
                 budget: Optional[int] = None) -> Optional[Covering]:
    """Greedy stabbing for instances that are at most one unit wide along
    ``axis``; optimal square count along the other axis."""
    if axis not in ("x", "y"):
        raise ValueError("axis must be 'x' or 'y'")
    if not segments:
        return Covering(())
    arr = segments_to_array(segments)
    bb = bounding_box_array(arr)
    extent = bb.width if axis == "x" else bb.height
    if extent > 1.0 + EPS_GEOM:
        raise ValueError(f"instance is wider than one unit along {axis}")
    cov = _cover1d_array(arr, axis, budget, EPS_GEOM)
    if cov is not None and not K.all_covered(
            arr, np.asarray([s.bounds for s in cov.squares], float), EPS_GEOM):
        raise RuntimeError("internal: 1-D witness failed verification")
    return cov


def _cover1d_array(arr, axis, budget, eps) -> Optional[Covering]:
    if len(arr) == 0:
        return Covering(())
    bb = bounding_box_array(arr)
    if axis == "x":
        lows = np.minimum(arr[:, 1], arr[:, 3])
        highs = np.maximum(arr[:, 1], arr[:, 3])
        hi_all = bb.y_max
    else:
        lows = np.minimum(arr[:, 0], arr[:, 2])
        highs = np.maximum(arr[:, 0], arr[:, 2])
        hi_all = bb.x_max
    order = np.argsort(lows)
    lows, highs = lows[order], highs[order]
    tops: List[float] = []
    i = 0
    cur = -INF  # everything <= cur is covered
    n = len(lows)
    while True:
        while i < n and highs[i] <= cur + eps:
            i += 1
        if i == n:
            break
        # sorted by low, so interval i decides the first uncovered coordinate
        m = cur if lows[i] <= cur else float(lows[i])
        top = m + 1.0 if m + 1.0 <= hi_all else hi_all
        tops.append(top)
        cur = top
        if budget is not None and len(tops) > budget:
            return None
    if axis == "x":
        boxes = [(bb.x_min, bb.x_min + 1.0, t - 1.0, t) for t in tops]
    else:
        boxes = [(t - 1.0, t, bb.y_min, bb.y_min + 1.0) for t in tops]
    return _covering_from_boxes(boxes)


# ---------------------------------------------------------------------------
# k = 2, 3


def _corner_boxes(bb: Rect):
    return {
        "tl": (bb.x_min, bb.x_min + 1.0, bb.y_max - 1.0, bb.y_max),
        "tr": (bb.x_max - 1.0, bb.x_max, bb.y_max - 1.0, bb.y_max),
        "bl": (bb.x_min, bb.x_min + 1.0, bb.y_min, bb.y_min + 1.0),
        "br": (bb.x_max - 1.0, bb.x_max, bb.y_min, bb.y_min + 1.0),
    }


def coverable_2(segments: Sequence[Segment]) -> Optional[Covering]:
    """Two squares in opposite corners of the bounding box, or fewer."""
    arr = segments_to_array(segments)
    return _cover2_array(arr, EPS_GEOM)


def _cover2_array(arr, eps) -> Optional[Covering]:
    one = _cover1_array(arr, eps)
    if one is not None:
        return one
    bb = bounding_box_array(arr)
    c = _corner_boxes(bb)
    for pair in (("tl", "br"), ("tr", "bl")):
        boxes = np.asarray([c[pair[0]], c[pair[1]]], float)
        if K.all_covered(arr, boxes, eps):
            return _covering_from_boxes(boxes)
    return None


def _clip_away(arr, box, eps):
    """Remove the parts of the segments covered by the closed box; fragments
    shorter than eps are dropped as float dust."""
    if len(arr) == 0:
        return arr
    t0, t1 = K.cover_params(arr, box, eps)
    out = []
    lens = np.hypot(arr[:, 2] - arr[:, 0], arr[:, 3] - arr[:, 1])
    for i in range(len(arr)):
        if math.isnan(t0[i]):
            out.append(arr[i])
            continue
        ax, ay, bx, by = arr[i]
        for (ua, ub) in ((0.0, t0[i]), (t1[i], 1.0)):
            if (ub - ua) * lens[i] <= eps:
                continue
            out.append([ax + ua * (bx - ax), ay + ua * (by - ay),
                        ax + ub * (bx - ax), ay + ub * (by - ay)])
    if not out:
        return np.empty((0, 4))
    return np.asarray(out, float)


def coverable_3(segments: Sequence[Segment]) -> Optional[Covering]:
    """One square in a bbox corner plus a 2-covering of the remainder."""
    arr = segments_to_array(segments)
    cov = _cover3_array(arr, EPS_GEOM)
    if cov is not None and len(cov) and not K.all_covered(
            arr, np.asarray([s.bounds for s in cov.squares], float), EPS_GEOM):
        raise RuntimeError("internal: 3-cover witness failed verification")
    return cov


def _cover3_array(arr, eps) -> Optional[Covering]:
    if len(arr) == 0:
        return Covering(())
    bb = bounding_box_array(arr)
    if bb.width <= 1.0 + eps:
        return _cover1d_array(arr, "x", 3, eps)
    if bb.height <= 1.0 + eps:
        return _cover1d_array(arr, "y", 3, eps)
    for box in _corner_boxes(bb).values():
        rest = _clip_away(arr, box, eps)
        sub = _cover2_array(rest, eps)
        if sub is not None:
            boxes = [box] + [s.bounds for s in sub.squares]
            if K.all_covered(arr, np.asarray(boxes, float), eps):
                return _covering_from_boxes(boxes)
    return None


# ---------------------------------------------------------------------------
# k = 4: the one-square-per-side scan


@dataclass(frozen=True)
class FourCoverProfile:
    """The six piecewise-linear functions of the left square's top height.

    x_T / x_B are the left edges of the top- and bottom-touching squares;
    x_R1/x_R2 (y_R1/y_R2) are the leftmost/rightmost (topmost/bottommost)
    uncovered coordinates after the first three squares are placed. Gaps
    mark heights where nothing remains uncovered at that stage.
    """

    x_T: PiecewiseLinearFn
    x_B: PiecewiseLinearFn
    x_R1: PiecewiseLinearFn
    x_R2: PiecewiseLinearFn
    y_R1: PiecewiseLinearFn
    y_R2: PiecewiseLinearFn
    y_L_domain: Tuple[float, float]
    order: str = "LTBR"


def _row_clip(arr, xlo=-INF, xhi=INF, ylo=-INF, yhi=INF, drop_on=None):
    """Clip each segment row to a closed axis box; optionally drop pieces
    that lie entirely on the line drop_on = ('y', value)."""
    if len(arr) == 0:
        return arr
    t0, t1 = K.cover_params(arr, (xlo, xhi, ylo, yhi), 0.0)
    rows = []
    for i in range(len(arr)):
        if math.isnan(t0[i]):
            continue
        ax, ay, bx, by = arr[i]
        pa = (ax + t0[i] * (bx - ax), ay + t0[i] * (by - ay))
        pb = (ax + t1[i] * (bx - ax), ay + t1[i] * (by - ay))
        if drop_on is not None:
            axis, val = drop_on
            idx = 1 if axis == "y" else 0
            if pa[idx] == val and pb[idx] == val:
                continue
        rows.append([pa[0], pa[1], pb[0], pb[1]])
    return np.asarray(rows, float) if rows else np.empty((0, 4))


def _sky_min_x_above(arr) -> PiecewiseLinearFn:
    """l -> min x over the closure of segment points with y >= l."""
    fns = [segment_skyline(Segment(Point(r[0], r[1]), Point(r[2], r[3]))).fn
           for r in arr]
    return pwl_reduce(fns, "min")


def _sky_min_x_below(arr) -> PiecewiseLinearFn:
    flipped = arr.copy()
    if len(flipped):
        flipped[:, 1] *= -1
        flipped[:, 3] *= -1
    return _sky_min_x_above(flipped).reparam(-1.0, 0.0)


def _next_min_above(arr, coord=0) -> PiecewiseLinearFn:
    """c -> min of coordinate ``coord`` over closure{value >= c}."""
    fns = []
    cols = (0, 2) if coord == 0 else (1, 3)
    for r in arr:
        lo, hi = min(r[cols[0]], r[cols[1]]), max(r[cols[0]], r[cols[1]])
        pieces = [(-INF, lo, lo, lo)]
        if hi > lo:
            pieces.append((lo, hi, lo, hi))
        fns.append(PiecewiseLinearFn(pieces))
    return pwl_reduce(fns, "min")


def _const_min_x_right_of(arr, x_cut) -> PiecewiseLinearFn:
    best = INF
    for r in arr:
        lo, hi = min(r[0], r[2]), max(r[0], r[2])
        if hi > x_cut:
            best = min(best, max(lo, x_cut))
    if best is INF or best == INF:
        return EMPTY_FN
    return PiecewiseLinearFn([(-INF, INF, best, best)])


def _profile_xt(arr, bb: Rect) -> PiecewiseLinearFn:
    """Leftmost uncovered x after placing L, as a function of y_L."""
    above = _sky_min_x_above(arr)
    below = _sky_min_x_below(arr).reparam(1.0, -1.0)  # evaluated at y_L - 1
    right = _const_min_x_right_of(arr, bb.x_min + 1.0)
    lo, hi = bb.y_min + 1.0, bb.y_max
    return pwl_reduce([above, below, right], "min").restricted(lo, hi)


def _profile_xb(arr, bb: Rect, x_t: PiecewiseLinearFn) -> PiecewiseLinearFn:
    """Leftmost uncovered x after placing L and T, as a function of y_L."""
    y1 = bb.y_max
    below = _sky_min_x_below(arr).reparam(1.0, -1.0)
    top_band = _row_clip(arr, ylo=y1 - 1.0)
    d_term = compose_partial(_next_min_above(top_band, coord=0),
                             x_t.shifted_value(1.0))
    c2_band = _row_clip(arr, yhi=y1 - 1.0, drop_on=("y", y1 - 1.0))
    c2 = _const_min_x_right_of(c2_band, bb.x_min + 1.0)
    strip = _row_clip(arr, xhi=bb.x_min + 1.0, yhi=y1 - 1.0,
                      drop_on=("y", y1 - 1.0))
    m_term = _sky_min_x_above(strip)
    lo, hi = bb.y_min + 1.0, bb.y_max
    return pwl_reduce([below, d_term, c2, m_term], "min").restricted(lo, hi)


def _ltbr_boxes(arr, bb: Rect, y_l: float):
    """Greedy placement L, T, B at height y_l; returns (boxes, extremes).

    extremes is None when everything is covered before R is needed;
    otherwise the (count, xmin, xmax, ymin, ymax) of what R must cover.
    """
    boxes = [(bb.x_min, bb.x_min + 1.0, y_l - 1.0, y_l)]
    for corner in ("top-left", "bottom-left"):
        ext = K.uncovered_extremes(arr, np.asarray(boxes, float))
        if ext[0] == 0:
            return boxes, None
        _, xmin, xmax, ymin, ymax = ext
        if corner == "top-left":
            boxes.append((xmin, xmin + 1.0, ymax - 1.0, ymax))
        else:
            boxes.append((xmin, xmin + 1.0, ymin, ymin + 1.0))
    ext = K.uncovered_extremes(arr, np.asarray(boxes, float))
    if ext[0] == 0:
        return boxes, None
    return boxes, ext


def _span_excess(arr, bb: Rect, y_l: float) -> float:
    """max(width, height) - 1 of what the last square must cover; negative
    or zero means the configuration is feasible at this height."""
    _, ext = _ltbr_boxes(arr, bb, y_l)
    if ext is None:
        return -1.0
    _, xmin, xmax, ymin, ymax = ext
    return max(xmax - xmin, ymax - ymin) - 1.0


def _finish_boxes(arr, bb: Rect, y_l: float, eps):
    """Boxes for a feasible height, verified against the input."""
    boxes, ext = _ltbr_boxes(arr, bb, y_l)
    if ext is not None:
        _, xmin, xmax, ymin, ymax = ext
        if max(xmax - xmin, ymax - ymin) > 1.0 + eps:
            return None
        boxes.append((xmin, xmin + 1.0, ymax - 1.0, ymax))
    if K.all_covered(arr, np.asarray(boxes, float), eps):
        return boxes
    return None


def _crossings_many(fn: PiecewiseLinearFn, values: np.ndarray) -> List[float]:
    """Parameter positions where fn crosses any of the sorted values."""
    out = []
    for x0, x1, y0, y1 in fn.pieces:
        if y0 == y1 or not (math.isfinite(x0) and math.isfinite(x1)):
            continue
        lo, hi = min(y0, y1), max(y0, y1)
        i0 = np.searchsorted(values, lo, side="left")
        i1 = np.searchsorted(values, hi, side="right")
        for v in values[i0:i1]:
            out.append(x0 + (v - y0) / (y1 - y0) * (x1 - x0))
    return out


def _crit_coords(arr, axis_vals, coord):
    """Coordinates (x if coord==0) of endpoints and of crossings with the
    given horizontal/vertical lines."""
    crits = []
    other = 1 - coord
    crits.extend(arr[:, coord])
    crits.extend(arr[:, coord + 2])
    for line in axis_vals:
        p = arr[:, other]
        d = arr[:, other + 2] - arr[:, other]
        with np.errstate(divide="ignore", invalid="ignore"):
            t = (line - p) / d
            ok = (d != 0) & (t >= 0) & (t <= 1)
            vals = arr[:, coord] + t * (arr[:, coord + 2] - arr[:, coord])
        crits.extend(vals[ok])
    return np.asarray(crits, float)


def _scan_grid(arr, bb: Rect, x_t: PiecewiseLinearFn,
               x_b: PiecewiseLinearFn) -> np.ndarray:
    """Heights where the greedy placement can change structure."""
    lo, hi = bb.y_min + 1.0, bb.y_max
    cand = [lo, hi]
    cand.extend(x_t.breakpoints())
    cand.extend(x_b.breakpoints())
    # L moves vertically: endpoint and x-line-crossing heights +- 1
    ys = _crit_coords(arr, (bb.x_min, bb.x_min + 1.0), coord=1)
    cand.extend(ys)
    cand.extend(ys + 1.0)
    # T slides horizontally at the top band; B at the bottom band
    xs_t = np.unique(_crit_coords(arr, (bb.y_max - 1.0, bb.y_max), coord=0))
    cand.extend(_crossings_many(x_t, xs_t))
    cand.extend(_crossings_many(x_t, xs_t - 1.0))
    xs_b = np.unique(_crit_coords(arr, (bb.y_min, bb.y_min + 1.0), coord=0))
    cand.extend(_crossings_many(x_b, xs_b))
    cand.extend(_crossings_many(x_b, xs_b - 1.0))
    grid = np.asarray(cand, float)
    grid = grid[(grid >= lo) & (grid <= hi)]
    return np.unique(grid)


def _refine_feasible(h, a, ha, b, hb, tol, depth=0) -> Optional[float]:
    """Search a convex function h for a point with h <= tol on [a, b]."""
    if depth > 48 or b - a <= 1e-12:
        return None
    m = 0.5 * (a + b)
    hm = h(m)
    if hm <= tol:
        return m
    s1 = (hm - ha) / (m - a)
    s2 = (hb - hm) / (b - m)
    if s2 > 0 and hm - s2 * (m - a) <= tol:
        r = _refine_feasible(h, a, ha, m, hm, tol, depth + 1)
        if r is not None:
            return r
    if s1 < 0 and hm + s1 * (b - m) <= tol:
        r = _refine_feasible(h, m, hm, b, hb, tol, depth + 1)
        if r is not None:
            return r
    return None


def _case2_scan(arr, eps) -> Optional[List[Tuple[float, float, float, float]]]:
    """One-square-per-side configuration in canonical orientation
    (left square scanned, the second square placed at the top)."""
    bb = bounding_box_array(arr)
    if bb.width <= 1.0 or bb.height <= 1.0:
        return None
    x_t = _profile_xt(arr, bb)
    x_b = _profile_xb(arr, bb, x_t)
    grid = _scan_grid(arr, bb, x_t, x_b)
    if len(grid) == 0:
        return None
    excess = np.array([_span_excess(arr, bb, g) for g in grid])
    order = np.argsort(excess)
    for i in order:
        if excess[i] > eps:
            break
        boxes = _finish_boxes(arr, bb, grid[i], eps)
        if boxes is not None:
            return boxes
    # convex refinement between grid points
    h = lambda t: _span_excess(arr, bb, t)
    for i in range(len(grid) - 1):
        a, b = grid[i], grid[i + 1]
        if b - a <= 1e-12:
            continue
        t = _refine_feasible(h, a, excess[i], b, excess[i + 1], eps)
        if t is not None:
            boxes = _finish_boxes(arr, bb, t, eps)
            if boxes is not None:
                return boxes
    return None


def _flip_y_arr(arr):
    out = arr.copy()
    if len(out):
        out[:, 1] *= -1.0
        out[:, 3] *= -1.0
    return out


def _swap_xy_arr(arr):
    return arr[:, (1, 0, 3, 2)].copy() if len(arr) else arr


def _flip_y_box(b):
    return (b[0], b[1], -b[3], -b[2])


def _swap_xy_box(b):
    return (b[2], b[3], b[0], b[1])


def coverable_4(segments: Sequence[Segment]) -> Optional[Covering]:
    """Corner square plus 3-covering, or one square per bbox side."""
    arr = segments_to_array(segments)
    boxes = _cover4_boxes(arr, EPS_GEOM)
    if boxes is None:
        return None
    if len(boxes) and not K.all_covered(arr, np.asarray(boxes, float), EPS_GEOM):
        raise RuntimeError("internal: 4-cover witness failed verification")
    return _covering_from_boxes(boxes)


def _cover4_boxes(arr, eps):
    if len(arr) == 0:
        return []
    bb = bounding_box_array(arr)
    if bb.width <= 1.0 + eps:
        cov = _cover1d_array(arr, "x", 4, eps)
        return [s.bounds for s in cov.squares] if cov is not None else None
    if bb.height <= 1.0 + eps:
        cov = _cover1d_array(arr, "y", 4, eps)
        return [s.bounds for s in cov.squares] if cov is not None else None
    # case (i): a square in a corner of the bounding box
    for box in _corner_boxes(bb).values():
        rest = _clip_away(arr, box, eps)
        sub = _cover3_array(rest, eps)
        if sub is not None:
            boxes = [box] + [s.bounds for s in sub.squares]
            if K.all_covered(arr, np.asarray(boxes, float), eps):
                return boxes
    # case (ii): one square per side; scan the left square's height in the
    # two top/bottom orders, and again on the transposed instance
    variants = [
        (lambda a: a, lambda b: b),
        (_flip_y_arr, _flip_y_box),
        (_swap_xy_arr, _swap_xy_box),
        (lambda a: _flip_y_arr(_swap_xy_arr(a)),
         lambda b: _swap_xy_box(_flip_y_box(b))),
    ]
    for fwd, back in variants:
        found = _case2_scan(fwd(arr), eps)
        if found is not None:
            boxes = [back(b) for b in found]
            if K.all_covered(arr, np.asarray(boxes, float), eps):
                return boxes
    return None


def coverable(segments: Sequence[Segment], k: int) -> Optional[Covering]:
    """Dispatch to the k-specific decision."""
    if k == 1:
        return coverable_1(segments)
    if k == 2:
        return coverable_2(segments)
    if k == 3:
        return coverable_3(segments)
    if k == 4:
        return coverable_4(segments)
    raise ValueError("k must be between 1 and 4")


# ---------------------------------------------------------------------------
# the full profile (for inspection and tests; the decision scan above only
# materialises the scaffolding it needs)


def _uncovered_subintervals(row, boxes):
    """Closed parameter intervals of the row outside the union of boxes."""
    seg = Segment(Point(row[0], row[1]), Point(row[2], row[3]))
    from .geom import cover_interval

    ivs = []
    for box in boxes:
        iv = cover_interval(seg, box, 0.0)
        if iv is not None:
            ivs.append(iv)
    ivs.sort()
    out = []
    cur = 0.0
    for t0, t1 in ivs:
        if t0 > cur + 1e-12:
            out.append((cur, t0))
        cur = max(cur, t1)
    if cur < 1.0 - 1e-12:
        out.append((cur, 1.0))
    return out


def _profile_interval(arr, bb, a, b, pieces, depth=0):
    """Append the exact R-extreme pieces over one structurally-stable
    stretch of heights; splits recursively if the structure shifts."""
    if b - a <= 1e-12:
        return
    delta = (b - a) * 1e-7
    ta, tb = a + delta, b - delta
    boxes_a, ext_a = _ltbr_boxes(arr, bb, ta)
    boxes_b, ext_b = _ltbr_boxes(arr, bb, tb)
    if ext_a is None and ext_b is None:
        return  # gap: nothing left uncovered on this stretch
    lines = {k: [] for k in pieces}
    ok = ext_a is not None and ext_b is not None and len(boxes_a) == len(boxes_b)
    if ok:
        for row in arr:
            sub_a = _uncovered_subintervals(row, boxes_a)
            sub_b = _uncovered_subintervals(row, boxes_b)
            if len(sub_a) != len(sub_b):
                ok = False
                break
            dx, dy = row[2] - row[0], row[3] - row[1]
            for (ia, ib) in zip(sub_a, sub_b):
                for u_a, u_b in zip(ia, ib):
                    xa, ya = row[0] + u_a * dx, row[1] + u_a * dy
                    xb_, yb_ = row[0] + u_b * dx, row[1] + u_b * dy
                    sx = (xb_ - xa) / (tb - ta)
                    sy = (yb_ - ya) / (tb - ta)
                    lines["x_R1"].append((xa, sx))
                    lines["x_R2"].append((xa, sx))
                    lines["y_R1"].append((ya, sy))
                    lines["y_R2"].append((ya, sy))
    if not ok:
        if depth >= 8:
            return
        m = 0.5 * (a + b)
        _profile_interval(arr, bb, a, m, pieces, depth + 1)
        _profile_interval(arr, bb, m, b, pieces, depth + 1)
        return
    for key, mode in (("x_R1", "min"), ("x_R2", "max"),
                      ("y_R1", "max"), ("y_R2", "min")):
        fns = [PiecewiseLinearFn([(a, b, v0 + (a - ta) * sl,
                                   v0 + (b - ta) * sl)])
               for v0, sl in lines[key]]
        env = pwl_reduce(fns, mode)
        pieces[key].extend(env.pieces)


def four_cover_profile(segments: Sequence[Segment],
                       order: str = "LTBR") -> FourCoverProfile:
    """Construct all six profile functions over the left square's height."""
    if order not in ("LTBR", "LBTR"):
        raise ValueError("order must be 'LTBR' or 'LBTR'")
    arr = segments_to_array(segments)
    if len(arr) == 0:
        raise ValueError("empty instance")
    bb = bounding_box_array(arr)
    if bb.width <= 1.0 or bb.height <= 1.0:
        raise ValueError("profile needs a bounding box wider and taller than one")
    if order == "LBTR":
        p = four_cover_profile(
            [Segment(Point(s.a.x, -s.a.y), Point(s.b.x, -s.b.y))
             for s in segments], "LTBR")
        rp = lambda f: f.reparam(-1.0, 1.0)
        return FourCoverProfile(
            x_T=rp(p.x_B), x_B=rp(p.x_T),
            x_R1=rp(p.x_R1), x_R2=rp(p.x_R2),
            y_R1=rp(p.y_R2).negated(), y_R2=rp(p.y_R1).negated(),
            y_L_domain=(1.0 - p.y_L_domain[1], 1.0 - p.y_L_domain[0]),
            order="LBTR")

    x_t = _profile_xt(arr, bb)
    x_b = _profile_xb(arr, bb, x_t)
    grid = _scan_grid(arr, bb, x_t, x_b)
    pieces = {"x_R1": [], "x_R2": [], "y_R1": [], "y_R2": []}
    for a, b in zip(grid, grid[1:]):
        _profile_interval(arr, bb, float(a), float(b), pieces)
    dom = (bb.y_min + 1.0, bb.y_max)
    return FourCoverProfile(
        x_T=x_t, x_B=x_b,
        x_R1=PiecewiseLinearFn(pieces["x_R1"]),
        x_R2=PiecewiseLinearFn(pieces["x_R2"]),
        y_R1=PiecewiseLinearFn(pieces["y_R1"]),
        y_R2=PiecewiseLinearFn(pieces["y_R2"]),
        y_L_domain=dom, order="LTBR")

"""Pure-Python/numpy implementations of the hot kernels.

Same signatures as the compiled module ``segcover._kernels``; selected as a
fallback by ``segcover._backend`` when the extension is unavailable or
SEGCOVER_PURE=1 is set. Semantics of the two backends are identical and
pinned by tests/test_kernels.py.
"""

from __future__ import annotations

import math

import numpy as np

NEG_INF = -math.inf

# Parameter-space tolerance for merging covered intervals along a segment.
# Interval ends computed from different box sides land within ~1e-16 of each
# other; anything this close is float dust, never a real gap.
MERGE_TOL = 1e-12


def cover_params(segs: np.ndarray, box, eps: float):
    """Per-segment parameter interval inside the closed, eps-inflated box.

    Returns (t0, t1) float64 arrays; rows that miss the box hold nan.
    """
    x0, x1, y0, y1 = box
    ax, ay, bx, by = segs[:, 0], segs[:, 1], segs[:, 2], segs[:, 3]
    t0 = np.zeros(len(segs))
    t1 = np.ones(len(segs))
    ok = np.ones(len(segs), dtype=bool)
    for p, d, lo, hi in ((ax, bx - ax, x0 - eps, x1 + eps),
                         (ay, by - ay, y0 - eps, y1 + eps)):
        zero = d == 0.0
        ok &= ~zero | ((p >= lo) & (p <= hi))
        with np.errstate(divide="ignore", invalid="ignore"):
            ta = np.where(zero, 0.0, (lo - p) / d)
            tb = np.where(zero, 1.0, (hi - p) / d)
        swap = ta > tb
        ta2 = np.where(swap, tb, ta)
        tb2 = np.where(swap, ta, tb)
        t0 = np.maximum(t0, np.where(zero, 0.0, ta2))
        t1 = np.minimum(t1, np.where(zero, 1.0, tb2))
    ok &= t0 <= t1
    t0 = np.where(ok, t0, np.nan)
    t1 = np.where(ok, t1, np.nan)
    return t0, t1


def _merged_intervals(segs, boxes, eps):
    """Per segment, merged covered intervals as (starts, ends, counts)."""
    n = len(segs)
    k = len(boxes)
    T0 = np.full((n, k), np.nan)
    T1 = np.full((n, k), np.nan)
    for j in range(k):
        t0, t1 = cover_params(segs, boxes[j], eps)
        T0[:, j] = t0
        T1[:, j] = t1
    order = np.argsort(np.where(np.isnan(T0), np.inf, T0), axis=1)
    T0s = np.take_along_axis(T0, order, axis=1)
    T1s = np.take_along_axis(T1, order, axis=1)
    return T0s, T1s


def all_covered(segs: np.ndarray, boxes: np.ndarray, eps: float) -> bool:
    """True iff every segment's [0,1] parameter range is covered by the
    union of per-box intervals, allowing eps-sized parameter gaps scaled
    by segment length."""
    return bool(covered_flags(segs, boxes, eps).all())


def covered_flags(segs: np.ndarray, boxes: np.ndarray, eps: float) -> np.ndarray:
    n = len(segs)
    if n == 0:
        return np.ones(0, dtype=bool)
    if len(boxes) == 0:
        return np.zeros(n, dtype=bool)
    lens = np.hypot(segs[:, 2] - segs[:, 0], segs[:, 3] - segs[:, 1])
    gap = eps / np.maximum(lens, 1.0) + 1e-15
    T0s, T1s = _merged_intervals(segs, boxes, eps)
    reach = np.zeros(n)
    okgap = np.ones(n, dtype=bool)
    for j in range(T0s.shape[1]):
        t0 = T0s[:, j]
        t1 = T1s[:, j]
        valid = ~np.isnan(t0)
        okgap &= ~valid | (t0 <= reach + gap)
        reach = np.where(valid & okgap, np.maximum(reach, t1), reach)
    return okgap & (reach >= 1.0 - gap)


def uncovered_extremes(segs: np.ndarray, boxes: np.ndarray):
    """Extremes of the closure of the uncovered parts of the segments.

    Boxes are closed (eps = 0 here: split points are exact). Returns
    (count, xmin, xmax, ymin, ymax) where count is the number of segments
    with a non-empty uncovered part. Extremes are nan when count == 0.
    """
    n = len(segs)
    if n == 0:
        return 0, np.nan, np.nan, np.nan, np.nan
    m = len(boxes)
    ax, ay, bx, by = segs[:, 0], segs[:, 1], segs[:, 2], segs[:, 3]
    if m == 0:
        xs = np.concatenate([ax, bx])
        ys = np.concatenate([ay, by])
        return n, float(xs.min()), float(xs.max()), float(ys.min()), float(ys.max())

    T0s, T1s = _merged_intervals(segs, boxes, 0.0)
    # merge the per-row sorted intervals into disjoint covered spans
    cur_s = np.full(n, np.nan)
    cur_e = np.full(n, np.nan)
    spans = []
    for j in range(m):
        s = T0s[:, j]
        e = T1s[:, j]
        have = ~np.isnan(s)
        fresh = np.isnan(cur_s) & have
        extend = have & ~np.isnan(cur_s) & (s <= cur_e + MERGE_TOL)
        newspan = have & ~np.isnan(cur_s) & (s > cur_e + MERGE_TOL)
        spans.append((np.where(newspan, cur_s, np.nan),
                      np.where(newspan, cur_e, np.nan)))
        cur_e = np.where(extend, np.maximum(cur_e, e), cur_e)
        cur_s = np.where(fresh | newspan, s, cur_s)
        cur_e = np.where(fresh | newspan, e, cur_e)
    spans.append((cur_s, cur_e))

    # candidate parameters: 0, 1, and all covered-interval boundaries
    cand = [np.zeros(n), np.ones(n), T0s, T1s]
    C = np.concatenate([c if c.ndim == 2 else c[:, None] for c in cand], axis=1)
    C = np.clip(C, 0.0, 1.0)
    # a candidate t is in the closure of the uncovered set iff it is not in
    # the interior (relative to [0,1]) of any merged covered span
    inside = np.zeros(C.shape, dtype=bool)
    for s, e in spans:
        s_ = np.where(np.isnan(s), np.inf, s)[:, None]
        e_ = np.where(np.isnan(e), -np.inf, e)[:, None]
        inside |= (C > s_) & (C < e_)
        inside |= (s_ <= 0.0) & (C <= 0.0) & (C < e_)
        inside |= (e_ >= 1.0) & (C >= 1.0) & (C > s_)
    valid = ~inside & ~np.isnan(C)
    if not valid.any():
        return 0, np.nan, np.nan, np.nan, np.nan
    X = ax[:, None] + C * (bx - ax)[:, None]
    Y = ay[:, None] + C * (by - ay)[:, None]
    X = np.where(valid, X, np.nan)
    Y = np.where(valid, Y, np.nan)
    count = int((valid.any(axis=1)).sum())
    return (count, float(np.nanmin(X)), float(np.nanmax(X)),
            float(np.nanmin(Y)), float(np.nanmax(Y)))


# ---------------------------------------------------------------------------
# envelope breakpoint streams: arrays (bx, by), bx non-decreasing, duplicate
# x encodes a jump; value between consecutive distinct xs is linear.


def env_eval(bx: np.ndarray, by: np.ndarray, x: float) -> float:
    """Max envelope value at x; -inf outside the stream's x-range."""
    n = len(bx)
    if n == 0 or x < bx[0] or x > bx[-1]:
        return NEG_INF
    i = int(np.searchsorted(bx, x, side="right")) - 1
    best = NEG_INF
    j = i
    while j >= 0 and bx[j] == x:
        best = max(best, by[j])
        j -= 1
    if bx[i] == x:
        if i + 1 < n and bx[i + 1] == x:
            best = max(best, by[i + 1])
        return best
    # strictly interior: bx[i] < x < bx[i+1]
    t = (x - bx[i]) / (bx[i + 1] - bx[i])
    return by[i] + t * (by[i + 1] - by[i])


def _limits_at(bx, by, x):
    """(left_limit, right_limit) of a stream at x, NEG_INF where undefined."""
    n = len(bx)
    if n == 0 or x < bx[0] or x > bx[-1]:
        return NEG_INF, NEG_INF
    i0 = int(np.searchsorted(bx, x, side="left"))
    i1 = int(np.searchsorted(bx, x, side="right")) - 1
    if i0 > i1:  # strictly inside the linear piece (i1, i1 + 1)
        t = (x - bx[i1]) / (bx[i1 + 1] - bx[i1])
        v = by[i1] + t * (by[i1 + 1] - by[i1])
        return v, v
    left = by[i0] if x > bx[0] else NEG_INF
    right = by[i1] if x < bx[-1] else NEG_INF
    return left, right


def env_merge_max(bx1, by1, bx2, by2):
    """Upper envelope (pointwise max) of two breakpoint streams."""
    if len(bx1) == 0:
        return np.asarray(bx2, float), np.asarray(by2, float)
    if len(bx2) == 0:
        return np.asarray(bx1, float), np.asarray(by1, float)
    events = np.union1d(bx1, bx2)
    xs_out = []
    ys_out = []

    def emit(x, v):
        if xs_out and xs_out[-1] == x and ys_out[-1] == v:
            return
        xs_out.append(x)
        ys_out.append(v)

    for idx in range(len(events)):
        x = float(events[idx])
        l1, r1 = _limits_at(bx1, by1, x)
        l2, r2 = _limits_at(bx2, by2, x)
        vl = max(l1, l2)
        vr = max(r1, r2)
        va = max(env_eval(bx1, by1, x), env_eval(bx2, by2, x))
        if vl == NEG_INF and vr == NEG_INF:
            if va > NEG_INF:
                emit(x, va)
        else:
            if vl > NEG_INF:
                emit(x, vl)
            if va > max(vl, vr):
                emit(x, va)
            if vr > NEG_INF and (vr != vl or va > max(vl, vr)):
                emit(x, vr)
        if idx + 1 >= len(events):
            continue
        xn = float(events[idx + 1])
        # crossing of the two linear parts on (x, xn)
        a1, a2 = r1, r2
        b1 = _limits_at(bx1, by1, xn)[0]
        b2 = _limits_at(bx2, by2, xn)[0]
        if NEG_INF in (a1, a2, b1, b2):
            continue
        da, db = a1 - a2, b1 - b2
        if da * db < 0:
            t = da / (da - db)
            xc = x + t * (xn - x)
            vc = a1 + t * (b1 - a1)
            if x < xc < xn:
                emit(xc, vc)
    return np.asarray(xs_out, float), np.asarray(ys_out, float)


def env_query_nodes(conc_bx, conc_by, offsets, nodes, x: float) -> float:
    """Max of env_eval over several node envelopes stored concatenated."""
    best = NEG_INF
    for nd in nodes:
        lo, hi = offsets[nd], offsets[nd + 1]
        v = env_eval(conc_bx[lo:hi], conc_by[lo:hi], x)
        if v > best:
            best = v
    return best


# ---------------------------------------------------------------------------
# trajectory windows (vertex arrays xs, ys; window between TrajPos pairs)


def _window_points(xs, ys, e0, f0, e1, f1):
    p0 = (xs[e0] + f0 * (xs[e0 + 1] - xs[e0]),
          ys[e0] + f0 * (ys[e0 + 1] - ys[e0]))
    p1 = (xs[e1] + f1 * (xs[e1 + 1] - xs[e1]),
          ys[e1] + f1 * (ys[e1 + 1] - ys[e1]))
    return p0, p1


def window_bbox(xs, ys, e0, f0, e1, f1):
    """Tight bbox of the subtrajectory from (e0, f0) to (e1, f1)."""
    (x0, y0), (x1, y1) = _window_points(xs, ys, e0, f0, e1, f1)
    xmin, xmax = min(x0, x1), max(x0, x1)
    ymin, ymax = min(y0, y1), max(y0, y1)
    if e1 > e0:
        vx = xs[e0 + 1:e1 + 1]
        vy = ys[e0 + 1:e1 + 1]
        if len(vx):
            xmin = min(xmin, float(vx.min()))
            xmax = max(xmax, float(vx.max()))
            ymin = min(ymin, float(vy.min()))
            ymax = max(ymax, float(vy.max()))
    return xmin, xmax, ymin, ymax


def _window_segments(xs, ys, e0, f0, e1, f1):
    (x0, y0), (x1, y1) = _window_points(xs, ys, e0, f0, e1, f1)
    if e0 == e1:
        return np.array([[x0, y0, x1, y1]])
    rows = [[x0, y0, xs[e0 + 1], ys[e0 + 1]]]
    for e in range(e0 + 1, e1):
        rows.append([xs[e], ys[e], xs[e + 1], ys[e + 1]])
    rows.append([xs[e1], ys[e1], x1, y1])
    return np.asarray(rows, float)


def window_cover2(xs, ys, e0, f0, e1, f1, eps: float) -> bool:
    """Offline test: is the subtrajectory coverable by two unit squares?"""
    xmin, xmax, ymin, ymax = window_bbox(xs, ys, e0, f0, e1, f1)
    w, h = xmax - xmin, ymax - ymin
    if w <= 1.0 + eps and h <= 1.0 + eps:
        return True
    if w > 2.0 + eps or h > 2.0 + eps:
        return False
    segs = _window_segments(xs, ys, e0, f0, e1, f1)
    for boxes in (
        np.array([[xmin, xmin + 1, ymax - 1, ymax],
                  [xmax - 1, xmax, ymin, ymin + 1]]),
        np.array([[xmax - 1, xmax, ymax - 1, ymax],
                  [xmin, xmin + 1, ymin, ymin + 1]]),
    ):
        if all_covered(segs, boxes, eps):
            return True
    return False


def window_cover1(xs, ys, e0, f0, e1, f1, eps: float) -> bool:
    xmin, xmax, ymin, ymax = window_bbox(xs, ys, e0, f0, e1, f1)
    return (xmax - xmin) <= 1.0 + eps and (ymax - ymin) <= 1.0 + eps


def longest_run_in_box(xs, ys, cum, box, eps: float):
    """Longest contiguous piece of the trajectory inside a closed box.

    cum is the prefix arc-length array over vertices. Returns
    (length, e_start, f_start, e_end, f_end); length -1 when no point of
    the trajectory touches the box.
    """
    x0, x1, y0, y1 = box[0] - eps, box[1] + eps, box[2] - eps, box[3] + eps
    n = len(xs)
    best = (-1.0, 0, 0.0, 0, 0.0)
    run_start = None  # (edge, frac, arc)
    for e in range(n - 1):
        ax, ay, bx, by = xs[e], ys[e], xs[e + 1], ys[e + 1]
        t0, t1 = 0.0, 1.0
        ok = True
        for p, d, lo, hi in ((ax, bx - ax, x0, x1), (ay, by - ay, y0, y1)):
            if d == 0.0:
                if p < lo or p > hi:
                    ok = False
                    break
                continue
            ta, tb = (lo - p) / d, (hi - p) / d
            if ta > tb:
                ta, tb = tb, ta
            t0, t1 = max(t0, ta), min(t1, tb)
            if t0 > t1:
                ok = False
                break
        elen = cum[e + 1] - cum[e]
        if not ok:
            run_start = None
            continue
        if run_start is None or t0 > 0.0:
            run_start = (e, t0, cum[e] + t0 * elen)
        end_arc = cum[e] + t1 * elen
        length = end_arc - run_start[2]
        if length > best[0]:
            best = (length, run_start[0], run_start[1], e, t1)
        if t1 < 1.0:
            run_start = None
    return best

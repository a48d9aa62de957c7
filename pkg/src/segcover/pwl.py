"""Piecewise-linear partial functions, skylines and upper envelopes.

A PiecewiseLinearFn is a sorted list of linear pieces over a 1-D parameter.
Pieces may leave gaps (the function is partial); a piece may have infinite
extent only if it is constant. Where two pieces share an endpoint the left
piece wins on evaluation; constructions keep shared endpoints consistent
except at genuine jump discontinuities.
"""

from __future__ import annotations

import json
import math
from bisect import bisect_left
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ._config import EPS_SNAP
from .geom import Segment

INF = math.inf


def _interp(x0: float, y0: float, x1: float, y1: float, x: float) -> float:
    if x1 == x0 or math.isinf(x0) or math.isinf(x1):
        return y0  # constant piece (unbounded pieces are constant by invariant)
    t = (x - x0) / (x1 - x0)
    return y0 + t * (y1 - y0)


class PiecewiseLinearFn:
    """Partial piecewise-linear function.

    pieces: sorted list of (x0, x1, y0, y1) with non-overlapping interiors.
    """

    __slots__ = ("pieces",)

    def __init__(self, pieces: Sequence[Tuple[float, float, float, float]],
                 simplify: bool = True):
        ps = [tuple(map(float, p)) for p in pieces]
        for x0, x1, y0, y1 in ps:
            if x0 > x1:
                raise ValueError("inverted piece")
            if (math.isinf(x0) or math.isinf(x1)) and y0 != y1:
                raise ValueError("unbounded piece must be constant")
        ps.sort(key=lambda p: (p[0], p[1]))
        for (a, b) in zip(ps, ps[1:]):
            if a[1] > b[0] + EPS_SNAP:
                raise ValueError("overlapping pieces")
        self.pieces = _merge_collinear(ps) if simplify else ps

    # -- queries ------------------------------------------------------------

    def __call__(self, x: float) -> float:
        """Value at x, or nan where undefined."""
        ps = self.pieces
        if not ps:
            return math.nan
        i = bisect_left(ps, (x,)) if math.isfinite(x) else 0
        hit = None
        for j in (i - 1, i, i + 1):
            if 0 <= j < len(ps):
                x0, x1, y0, y1 = ps[j]
                if x0 <= x <= x1:
                    if x0 == x1:  # isolated point overrides touching pieces
                        return y0
                    if hit is None:
                        hit = _interp(x0, y0, x1, y1, x)
        return math.nan if hit is None else hit

    def defined_at(self, x: float) -> bool:
        return not math.isnan(self(x))

    def is_empty(self) -> bool:
        return not self.pieces

    def domain(self) -> Optional[Tuple[float, float]]:
        if not self.pieces:
            return None
        return (self.pieces[0][0], self.pieces[-1][1])

    def breakpoints(self) -> List[float]:
        """Sorted unique finite piece endpoints."""
        xs = set()
        for x0, x1, _, _ in self.pieces:
            if math.isfinite(x0):
                xs.add(x0)
            if math.isfinite(x1):
                xs.add(x1)
        return sorted(xs)

    def value_range(self) -> Tuple[float, float]:
        lo, hi = INF, -INF
        for _, _, y0, y1 in self.pieces:
            lo = min(lo, y0, y1)
            hi = max(hi, y0, y1)
        return lo, hi

    def crossings(self, level: float) -> List[float]:
        """x values where a non-constant piece crosses ``level``."""
        out = []
        for x0, x1, y0, y1 in self.pieces:
            if min(y0, y1) <= level <= max(y0, y1) and y0 != y1:
                t = (level - y0) / (y1 - y0)
                out.append(x0 + t * (x1 - x0))
        return out

    # -- transforms ----------------------------------------------------------

    def negated(self) -> "PiecewiseLinearFn":
        return PiecewiseLinearFn(
            [(x0, x1, -y0, -y1) for x0, x1, y0, y1 in self.pieces])

    def reparam(self, a: float, b: float) -> "PiecewiseLinearFn":
        """h with h(x) = f(a*x + b), a != 0."""
        if a == 0:
            raise ValueError("degenerate reparametrisation")
        out = []
        for x0, x1, y0, y1 in self.pieces:
            u0, u1 = (x0 - b) / a, (x1 - b) / a
            if a > 0:
                out.append((u0, u1, y0, y1))
            else:
                out.append((u1, u0, y1, y0))
        return PiecewiseLinearFn(out)

    def restricted(self, lo: float, hi: float) -> "PiecewiseLinearFn":
        out = []
        for x0, x1, y0, y1 in self.pieces:
            a, b = max(x0, lo), min(x1, hi)
            if a > b:
                continue
            out.append((a, b, _interp(x0, y0, x1, y1, a),
                        _interp(x0, y0, x1, y1, b)))
        return PiecewiseLinearFn(out)

    def shifted_value(self, dy: float) -> "PiecewiseLinearFn":
        return PiecewiseLinearFn(
            [(x0, x1, y0 + dy, y1 + dy) for x0, x1, y0, y1 in self.pieces])

    # -- io -------------------------------------------------------------------

    def dump_breakpoints(self) -> str:
        """JSON array of breakpoint pairs, one [[x0,y0],[x1,y1]] per piece."""
        return json.dumps([[[x0, y0], [x1, y1]]
                           for x0, x1, y0, y1 in self.pieces])

    def __repr__(self) -> str:
        return f"PiecewiseLinearFn({len(self.pieces)} pieces)"


def _merge_collinear(pieces):
    """Merge touching collinear pieces."""
    out = []
    for p in pieces:
        x0, x1, y0, y1 = p
        if out:
            px0, px1, py0, py1 = out[-1]
            if abs(x0 - px1) <= EPS_SNAP and abs(y0 - py1) <= EPS_SNAP \
                    and px1 > px0 and x1 > x0:
                s_prev = (py1 - py0) / (px1 - px0)
                s_cur = (y1 - y0) / (x1 - x0)
                if abs(s_prev - s_cur) <= 1e-12 * max(1.0, abs(s_prev)):
                    out[-1] = (px0, x1, py0, y1)
                    continue
        out.append((x0, x1, y0, y1))
    return out


def constant_fn(value: float, lo: float = -INF, hi: float = INF) -> PiecewiseLinearFn:
    return PiecewiseLinearFn([(lo, hi, value, value)])


EMPTY_FN = PiecewiseLinearFn([])


# ---------------------------------------------------------------------------
# pointwise min / max


def pwl_combine(f: PiecewiseLinearFn, g: PiecewiseLinearFn,
                mode: str) -> PiecewiseLinearFn:
    """Pointwise min or max; undefined counts as +inf (min) / -inf (max)."""
    if mode not in ("min", "max"):
        raise ValueError("mode must be 'min' or 'max'")
    if f.is_empty():
        return g
    if g.is_empty():
        return f
    better = min if mode == "min" else max

    fp = [p for p in f.pieces if p[0] < p[1]]
    gp = [p for p in g.pieces if p[0] < p[1]]
    points = [p for p in f.pieces + g.pieces if p[0] == p[1]]

    xs = sorted({x for p in fp + gp for x in (p[0], p[1]) if math.isfinite(x)})
    out = []

    lead = [p[2] for seq in (fp, gp) if seq for p in [seq[0]] if math.isinf(p[0])]
    trail = [p[3] for seq in (fp, gp) if seq for p in [seq[-1]] if math.isinf(p[1])]
    if not xs:
        if lead:
            v = lead[0] if len(lead) == 1 else better(*lead)
            out.append((-INF, INF, v, v))
    else:
        if lead:
            v = lead[0] if len(lead) == 1 else better(*lead)
            out.append((-INF, xs[0], v, v))

        fi = gi = 0
        for a, b in zip(xs, xs[1:]):
            while fi < len(fp) and fp[fi][1] <= a:
                fi += 1
            while gi < len(gp) and gp[gi][1] <= a:
                gi += 1
            fv = gv = None
            if fi < len(fp) and fp[fi][0] <= a and b <= fp[fi][1]:
                p = fp[fi]
                fv = (_interp(p[0], p[2], p[1], p[3], a),
                      _interp(p[0], p[2], p[1], p[3], b))
            if gi < len(gp) and gp[gi][0] <= a and b <= gp[gi][1]:
                p = gp[gi]
                gv = (_interp(p[0], p[2], p[1], p[3], a),
                      _interp(p[0], p[2], p[1], p[3], b))
            if fv is None and gv is None:
                continue
            if fv is None or gv is None:
                va, vb = fv if gv is None else gv
                out.append((a, b, va, vb))
                continue
            fa, fb = fv
            ga, gb = gv
            da, db = fa - ga, fb - gb
            if da * db < 0:
                t = da / (da - db)
                xc = a + t * (b - a)
                vc = fa + t * (fb - fa)
                first, second = (fv, gv) if (da < 0) == (mode == "min") else (gv, fv)
                out.append((a, xc, first[0], vc))
                out.append((xc, b, vc, second[1]))
            else:
                take_f = (da <= 0 and db <= 0) if mode == "min" \
                    else (da >= 0 and db >= 0)
                out.append((a, b, fa, fb) if take_f else (a, b, ga, gb))
        if trail:
            v = trail[0] if len(trail) == 1 else better(*trail)
            out.append((xs[-1], INF, v, v))

    for x, _, v, _ in points:
        cands = [v] + [c for c in (f(x), g(x)) if not math.isnan(c)]
        out = _insert_point(out, x, better(cands), better)
    return PiecewiseLinearFn(out)


def _insert_point(pieces, x, v, better):
    """Insert an isolated point (x, v), splitting any covering piece."""
    res = []
    placed = False
    for p in pieces:
        x0, x1, y0, y1 = p
        if placed or not (x0 <= x <= x1):
            res.append(p)
            continue
        placed = True
        if x0 == x1:
            res.append((x, x, better(y0, v), better(y0, v)))
            continue
        cur = _interp(x0, y0, x1, y1, x)
        if v == cur or better(cur, v) == cur:
            res.append(p)
            continue
        if x0 < x:
            res.append((x0, x, y0, cur))
        res.append((x, x, v, v))
        if x < x1:
            res.append((x, x1, cur, y1))
    if not placed:
        res.append((x, x, v, v))
        res.sort(key=lambda q: (q[0], q[1]))
    return res


def pwl_min(f: PiecewiseLinearFn, g: PiecewiseLinearFn) -> PiecewiseLinearFn:
    return pwl_combine(f, g, "min")


def pwl_max(f: PiecewiseLinearFn, g: PiecewiseLinearFn) -> PiecewiseLinearFn:
    return pwl_combine(f, g, "max")


def pwl_reduce(fns: Sequence[PiecewiseLinearFn], mode: str) -> PiecewiseLinearFn:
    """Balanced pairwise reduction (keeps intermediate sizes small)."""
    items = [f for f in fns if not f.is_empty()]
    if not items:
        return EMPTY_FN
    while len(items) > 1:
        nxt = [pwl_combine(items[i], items[i + 1], mode)
               for i in range(0, len(items) - 1, 2)]
        if len(items) % 2:
            nxt.append(items[-1])
        items = nxt
    return items[0]


# ---------------------------------------------------------------------------
# composition


def compose_partial(f: PiecewiseLinearFn, g: PiecewiseLinearFn) -> PiecewiseLinearFn:
    """x -> f(g(x)) with gaps wherever g or f(g(x)) is undefined.

    g need not be monotone: every linear piece of g is monotone on its own
    and is swept against f's breakpoints independently.
    """
    out = []
    f_bps = f.breakpoints()
    for x0, x1, y0, y1 in g.pieces:
        if x0 == x1:
            v = f(y0)
            if not math.isnan(v):
                out.append((x0, x0, v, v))
            continue
        cuts = [x0, x1]
        if y1 != y0 and math.isfinite(x0) and math.isfinite(x1):
            lo, hi = min(y0, y1), max(y0, y1)
            for b in f_bps:
                if lo < b < hi:
                    cuts.append(x0 + (b - y0) / (y1 - y0) * (x1 - x0))
        cuts = sorted(set(cuts))
        for a, b in zip(cuts, cuts[1:]):
            ga = _interp(x0, y0, x1, y1, a)
            gb = _interp(x0, y0, x1, y1, b)
            va, vb = f(ga), f(gb)
            if math.isnan(va) or math.isnan(vb):
                continue
            gm = _interp(x0, y0, x1, y1, 0.5 * (a + b)) \
                if math.isfinite(a) and math.isfinite(b) else ga
            if math.isnan(f(gm)):
                continue
            out.append((a, b, va, vb))
    return PiecewiseLinearFn(out)


def pwl_compose(f: PiecewiseLinearFn, g: PiecewiseLinearFn) -> PiecewiseLinearFn:
    """x -> f(g(x)) for monotone non-decreasing g with range(g) in domain(f)."""
    last = -INF
    for _, _, y0, y1 in g.pieces:
        if y1 < y0 - EPS_SNAP or y0 < last - EPS_SNAP:
            raise ValueError("g is not monotone non-decreasing")
        last = max(last, y1)
    for _, _, y0, y1 in g.pieces:
        if not (f.defined_at(y0) and f.defined_at(y1)):
            raise ValueError("range of g escapes domain of f")
    return compose_partial(f, g)


# ---------------------------------------------------------------------------
# skylines and envelopes


@dataclass(frozen=True)
class Skyline:
    """Leftmost reachable x as a function of line height, plus orientation."""

    fn: PiecewiseLinearFn
    orientation: str = "up"


def _canonical_skyline_pieces(seg: Segment):
    """Pieces of l -> leftmost x of seg on or above the horizontal line l."""
    (x1, y1), (x2, y2) = (seg.a.x, seg.a.y), (seg.b.x, seg.b.y)
    if x2 < x1 or (x1 == x2 and y2 < y1):
        x1, y1, x2, y2 = x2, y2, x1, y1
    if x1 == x2:  # vertical or point
        return [(-INF, max(y1, y2), x1, x1)]
    if y2 > y1:  # positive gradient: constant then the segment itself
        return [(-INF, y1, x1, x1), (y1, y2, x1, x2)]
    # negative gradient or horizontal: constant through the top-left endpoint
    return [(-INF, y1, x1, x1)]


def segment_skyline(seg: Segment, orientation: str = "up") -> Skyline:
    """Skyline of a single segment in the given cardinal orientation."""
    from .geom import transform_cardinal

    canon = transform_cardinal(seg, orientation)
    return Skyline(PiecewiseLinearFn(_canonical_skyline_pieces(canon)),
                   orientation)


def merge_skylines(skylines: Sequence[Skyline]) -> Skyline:
    """Leftwards envelope: pointwise min over all skylines defined at l."""
    if not skylines:
        return Skyline(EMPTY_FN)
    orientation = skylines[0].orientation
    if any(s.orientation != orientation for s in skylines):
        raise ValueError("mixed skyline orientations")
    return Skyline(pwl_reduce([s.fn for s in skylines], "min"), orientation)


def upper_envelope(segments: Sequence[Segment]) -> PiecewiseLinearFn:
    """x -> max y over all segments whose x-range contains x."""
    pieces = []
    for seg in segments:
        (x1, y1), (x2, y2) = (seg.a.x, seg.a.y), (seg.b.x, seg.b.y)
        if x2 < x1:
            x1, y1, x2, y2 = x2, y2, x1, y1
        if x1 == x2:
            pieces.append(PiecewiseLinearFn([(x1, x1, max(y1, y2), max(y1, y2))]))
        else:
            pieces.append(PiecewiseLinearFn([(x1, x2, y1, y2)]))
    return pwl_reduce(pieces, "max")

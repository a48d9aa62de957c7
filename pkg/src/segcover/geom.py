"""Planar primitives: points, segments, rectangles, unit squares, coverings.

All coordinates are 64-bit floats. Containment predicates are closed
(boundaries count as inside) with an EPS_GEOM-thick tolerance shell.
Everything here is an immutable value; all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ._config import EPS_GEOM

CARDINALS = ("up", "right", "down", "left")


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __iter__(self):
        return iter((self.x, self.y))

    def is_finite(self) -> bool:
        return math.isfinite(self.x) and math.isfinite(self.y)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def length(self) -> float:
        return math.hypot(self.b.x - self.a.x, self.b.y - self.a.y)

    def at(self, t: float) -> Point:
        return Point(self.a.x + t * (self.b.x - self.a.x),
                     self.a.y + t * (self.b.y - self.a.y))

    def is_finite(self) -> bool:
        return self.a.is_finite() and self.b.is_finite()


@dataclass(frozen=True)
class Rect:
    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self):
        if self.x_min > self.x_max or self.y_min > self.y_max:
            raise ValueError("inverted rectangle")

    @property
    def width(self) -> float:
        return self.x_max - self.x_min

    @property
    def height(self) -> float:
        return self.y_max - self.y_min

    def contains(self, p: Point, eps: float = 0.0) -> bool:
        return (self.x_min - eps <= p.x <= self.x_max + eps
                and self.y_min - eps <= p.y <= self.y_max + eps)

    def expanded(self, other: "Rect") -> "Rect":
        return Rect(min(self.x_min, other.x_min), max(self.x_max, other.x_max),
                    min(self.y_min, other.y_min), max(self.y_max, other.y_max))


@dataclass(frozen=True)
class UnitSquare:
    """Axis-parallel unit square addressed by its top-left corner.

    A square with top_left (x, y) occupies [x, x+1] x [y-1, y].
    """

    top_left: Point

    @property
    def bounds(self) -> Tuple[float, float, float, float]:
        x, y = self.top_left.x, self.top_left.y
        return (x, x + 1.0, y - 1.0, y)

    def contains(self, p: Point, eps: float = EPS_GEOM) -> bool:
        x0, x1, y0, y1 = self.bounds
        return x0 - eps <= p.x <= x1 + eps and y0 - eps <= p.y <= y1 + eps

    def as_rect(self) -> Rect:
        x0, x1, y0, y1 = self.bounds
        return Rect(x0, x1, y0, y1)


@dataclass(frozen=True)
class Covering:
    """An ordered set of at most k unit squares acting as a witness."""

    squares: Tuple[UnitSquare, ...]

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self):
        return iter(self.squares)

    def translated(self, dx: float, dy: float) -> "Covering":
        return Covering(tuple(
            UnitSquare(Point(s.top_left.x + dx, s.top_left.y + dy))
            for s in self.squares))


def square_from_rect_corner(rect: Rect, corner: str) -> UnitSquare:
    """Unit square sitting in the named corner (``tl``/``tr``/``bl``/``br``) of a rect."""
    if corner == "tl":
        return UnitSquare(Point(rect.x_min, rect.y_max))
    if corner == "tr":
        return UnitSquare(Point(rect.x_max - 1.0, rect.y_max))
    if corner == "bl":
        return UnitSquare(Point(rect.x_min, rect.y_min + 1.0))
    if corner == "br":
        return UnitSquare(Point(rect.x_max - 1.0, rect.y_min + 1.0))
    raise ValueError(f"unknown corner {corner!r}")


# ---------------------------------------------------------------------------
# array form: segments as float64[n, 4] rows (ax, ay, bx, by)


def segments_to_array(segments: Sequence[Segment]) -> np.ndarray:
    out = np.empty((len(segments), 4), dtype=np.float64)
    for i, s in enumerate(segments):
        out[i, 0] = s.a.x
        out[i, 1] = s.a.y
        out[i, 2] = s.b.x
        out[i, 3] = s.b.y
    return out


def array_to_segments(arr: np.ndarray) -> List[Segment]:
    return [Segment(Point(r[0], r[1]), Point(r[2], r[3])) for r in arr]


def squares_to_array(squares: Iterable[UnitSquare]) -> np.ndarray:
    boxes = [sq.bounds for sq in squares]
    if not boxes:
        return np.empty((0, 4), dtype=np.float64)
    return np.asarray(boxes, dtype=np.float64)


# ---------------------------------------------------------------------------
# operations


def bounding_box(segments: Sequence[Segment]) -> Rect:
    """Tight axis-aligned bounding rectangle of all segment endpoints."""
    if not segments:
        raise ValueError("empty instance")
    arr = segments_to_array(segments)
    return bounding_box_array(arr)


def bounding_box_array(arr: np.ndarray) -> Rect:
    if arr.shape[0] == 0:
        raise ValueError("empty instance")
    xs = arr[:, (0, 2)]
    ys = arr[:, (1, 3)]
    return Rect(float(xs.min()), float(xs.max()), float(ys.min()), float(ys.max()))


def cover_interval(seg: Segment, box: Tuple[float, float, float, float],
                   eps: float = 0.0) -> Optional[Tuple[float, float]]:
    """Parameter interval of ``seg`` inside the closed box inflated by eps.

    Returns (t0, t1) with 0 <= t0 <= t1 <= 1, or None when the segment
    misses the box entirely.
    """
    x0, x1, y0, y1 = box
    x0 -= eps
    y0 -= eps
    x1 += eps
    y1 += eps
    t0, t1 = 0.0, 1.0
    for p, d, lo, hi in ((seg.a.x, seg.b.x - seg.a.x, x0, x1),
                         (seg.a.y, seg.b.y - seg.a.y, y0, y1)):
        if d == 0.0:
            if p < lo or p > hi:
                return None
            continue
        ta = (lo - p) / d
        tb = (hi - p) / d
        if ta > tb:
            ta, tb = tb, ta
        t0 = max(t0, ta)
        t1 = min(t1, tb)
        if t0 > t1:
            return None
    return (t0, t1)


def clip_segment_to_square(seg: Segment, sq: UnitSquare, eps: float = EPS_GEOM
                           ) -> Tuple[Optional[Segment], List[Segment]]:
    """Split ``seg`` into the part covered by ``sq`` and up to two leftovers.

    The covered part lives in the square inflated by eps; leftover pieces
    shorter than eps (in parameter times length) are not produced as
    genuine remainders when they collapse to a point.
    """
    iv = cover_interval(seg, sq.bounds, eps)
    if iv is None:
        return None, [seg]
    t0, t1 = iv
    covered = Segment(seg.at(t0), seg.at(t1))
    uncovered = []
    if t0 > 0.0:
        uncovered.append(Segment(seg.a, seg.at(t0)))
    if t1 < 1.0:
        uncovered.append(Segment(seg.at(t1), seg.b))
    return covered, uncovered


def verify_covering(segments: Sequence[Segment], cov: Covering,
                    eps: float = EPS_GEOM) -> bool:
    """True iff every segment lies in the union of the covering's squares.

    Checked by clipping each segment against each square and requiring the
    union of covered parameter intervals to be [0, 1] up to an eps-sized
    parameter gap.
    """
    boxes = [sq.bounds for sq in cov.squares]
    for seg in segments:
        ln = max(seg.length(), 1.0)
        gap_tol = eps / ln + 1e-15
        ivs = []
        for box in boxes:
            iv = cover_interval(seg, box, eps)
            if iv is not None:
                ivs.append(iv)
        if not ivs:
            return False
        ivs.sort()
        reach = 0.0
        for t0, t1 in ivs:
            if t0 > reach + gap_tol:
                return False
            reach = max(reach, t1)
            if reach >= 1.0 - gap_tol:
                break
        if reach < 1.0 - gap_tol:
            return False
    return True


# ---------------------------------------------------------------------------
# cardinal transforms
#
# transform_cardinal(obj, d) rotates the plane so that direction d becomes
# "up"; untransform_cardinal is its inverse. Axis-parallel squares stay
# axis-parallel because all four maps are multiples of 90-degree rotations.

_FWD = {
    "up": lambda x, y: (x, y),
    "right": lambda x, y: (-y, x),
    "down": lambda x, y: (-x, -y),
    "left": lambda x, y: (y, -x),
}
_INV = {
    "up": lambda x, y: (x, y),
    "right": lambda x, y: (y, -x),
    "down": lambda x, y: (-x, -y),
    "left": lambda x, y: (-y, x),
}


def _transform(obj, fn):
    if isinstance(obj, Point):
        return Point(*fn(obj.x, obj.y))
    if isinstance(obj, Segment):
        return Segment(_transform(obj.a, fn), _transform(obj.b, fn))
    if isinstance(obj, Rect):
        xa, ya = fn(obj.x_min, obj.y_min)
        xb, yb = fn(obj.x_max, obj.y_max)
        return Rect(min(xa, xb), max(xa, xb), min(ya, yb), max(ya, yb))
    if isinstance(obj, UnitSquare):
        x0, x1, y0, y1 = obj.bounds
        xa, ya = fn(x0, y0)
        xb, yb = fn(x1, y1)
        return UnitSquare(Point(min(xa, xb), max(ya, yb)))
    if isinstance(obj, Covering):
        return Covering(tuple(_transform(s, fn) for s in obj.squares))
    if isinstance(obj, (list, tuple)):
        return type(obj)(_transform(o, fn) for o in obj)
    if isinstance(obj, np.ndarray):
        # segment array rows (ax, ay, bx, by)
        ax, ay = fn(obj[:, 0], obj[:, 1])
        bx, by = fn(obj[:, 2], obj[:, 3])
        return np.stack([ax, ay, bx, by], axis=1)
    raise TypeError(f"cannot transform {type(obj).__name__}")


def transform_cardinal(obj, direction: str):
    """Map ``direction`` to the canonical "up" direction (rotation)."""
    if direction not in _FWD:
        raise ValueError(f"unknown direction {direction!r}")
    return _transform(obj, _FWD[direction])


def untransform_cardinal(obj, direction: str):
    """Inverse of :func:`transform_cardinal`."""
    if direction not in _INV:
        raise ValueError(f"unknown direction {direction!r}")
    return _transform(obj, _INV[direction])


def transform_xy(obj):
    """Swap the two axes (transpose). Involution."""
    return _transform(obj, lambda x, y: (y, x))

"""Coverability of segments and trajectories by unit axis-parallel squares."""

from ._backend import BACKEND
from ._config import EPS_GEOM, EPS_REACH
from .geom import (Covering, Point, Rect, Segment, UnitSquare, bounding_box,
                   clip_segment_to_square, transform_cardinal,
                   untransform_cardinal, verify_covering)
from .pwl import (PiecewiseLinearFn, Skyline, merge_skylines, pwl_compose,
                  pwl_max, pwl_min, segment_skyline, upper_envelope)

__all__ = [
    "BACKEND", "EPS_GEOM", "EPS_REACH",
    "Point", "Segment", "Rect", "UnitSquare", "Covering",
    "bounding_box", "clip_segment_to_square", "verify_covering",
    "transform_cardinal", "untransform_cardinal",
    "PiecewiseLinearFn", "Skyline", "segment_skyline", "merge_skylines",
    "upper_envelope", "pwl_min", "pwl_max", "pwl_compose",
]

__version__ = "0.1.0"

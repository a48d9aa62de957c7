"""Global tolerances.

EPS_GEOM is the geometric containment tolerance: all square/point predicates
are closed and accept an EPS_GEOM-thick boundary shell. EPS_REACH is the
bisection tolerance (in edge parameter) for reach computations.

The environment variable SEGCOVER_EPS overrides EPS_GEOM at import time;
this exists for testing only.
"""

import os

EPS_GEOM = float(os.environ.get("SEGCOVER_EPS", "1e-9"))
EPS_REACH = 1e-9

# Breakpoint snap tolerance for piecewise-linear construction. Tighter than
# EPS_GEOM on purpose: snapping at 1e-9 would shift steep pieces by more than
# the 1e-9 agreement the test suite demands.
EPS_SNAP = 1e-12

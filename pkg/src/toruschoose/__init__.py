"""List colouring of 6-regular toroidal triangulations T(r, s, t)."""
from .errors import (ConditionNotApplicable, InternalConsistencyError, InvalidInput, InvalidParameter,
                     LimitExceeded, OutOfDomain, ToruschooseError, Uncolorable)
from .graph import Multigraph
from .listcolor import find_list_coloring, random_list_assignment, verify_coloring
from .structured import five_list_color, run_five_list_coloring
from .torus import TorusParams, TorusTriangulation, build_torus_triangulation, classify

__all__ = [
    "ConditionNotApplicable", "InternalConsistencyError", "InvalidInput", "InvalidParameter",
    "LimitExceeded", "Multigraph", "OutOfDomain", "ToruschooseError", "TorusParams",
    "TorusTriangulation", "Uncolorable", "build_torus_triangulation", "classify",
    "find_list_coloring", "five_list_color", "random_list_assignment", "run_five_list_coloring",
    "verify_coloring",
]

__version__ = "0.1.0"

"""Exact Legendrian curves in CP^3 from rational data, with twistor-projection numerics."""

from .analysis import (
    analyze,
    component_orders,
    exactness_check,
    hg_immersion_check,
    is_immersed_at,
    simple_pole_certificate,
)
from .contact import chart_change, is_legendrian, pullback_alpha0, psi_map
from .curves import (
    ProjectiveCurve,
    bryant_curve,
    compare_forms,
    exceptional_line,
    f_curve,
    invert_bryant,
    rational_primitive,
)
from .errors import *  # noqa: F401,F403
from .exact import (
    INF_POINT,
    DomainPoint,
    GaussianRational,
    Poly,
    RationalFunction,
    derivative,
    evaluate,
)
from .laurent import laurent_expand, order_at, pole_set, residue_at, residue_sum
from .parser import parse_expression
from .twistor import Quaternion, fibre_of, involution_iota, quat_from_pair, twistor_project

__version__ = "0.1.0"

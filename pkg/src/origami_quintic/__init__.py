"""Solve real quintics with a single two-simultaneous-fold origami operation.

The pipeline maps the six coefficients of a quintic to a point/line
configuration (two points, three lines) such that the admissible pairs of
simultaneous folds hit the x axis exactly at the roots; every geometric
incidence is reconstructed and verified numerically, and solutions can be
emitted as JSON reports or SVG diagrams.
"""

from .errors import (
    ConfigMismatch,
    CoincidentLines,
    CoincidentPoints,
    DegenerateDegree,
    DegenerateP,
    EmptySolutions,
    NegativeDiscriminant,
    NoScaleFound,
    NotDepressed,
    NotParallel,
    NoValidH,
    OrigamiQuinticError,
    SingularSystem,
    ZeroB,
    ZeroConstantTerm,
    ZeroScale,
)
from .foldconfig import (
    Branch,
    FoldConfig,
    NishimuraReport,
    build_config,
    choose_h,
    closed_form_kpq,
    compute_bc,
    compute_kpq,
    config_quintic,
    discriminant,
    forward_coefficients,
    nishimura_pipeline,
)
from .foldsolve import (
    CHI_EQUALS_N,
    LOW_CONFIDENCE,
    FoldSolution,
    IncidenceResiduals,
    chi_from_xi,
    parallel_case_check,
    residual_g,
    solve_all,
    verify,
)
from .geometry import (
    Line,
    Point,
    bisects,
    canonical,
    fold_chi,
    fold_xi,
    intersect,
    parallel_distance,
    reflect_line,
    reflect_point,
)
from .polynomial import (
    Quintic,
    depress,
    evaluate,
    find_scale_for_precondition,
    nishimura_precondition,
    normalize_monic,
    real_roots,
    scale,
)
from .render import Viewport, render_gallery, render_solution

__version__ = "0.1.0"

__all__ = [
    "Branch",
    "CHI_EQUALS_N",
    "CoincidentLines",
    "CoincidentPoints",
    "ConfigMismatch",
    "DegenerateDegree",
    "DegenerateP",
    "EmptySolutions",
    "FoldConfig",
    "FoldSolution",
    "IncidenceResiduals",
    "LOW_CONFIDENCE",
    "Line",
    "NegativeDiscriminant",
    "NishimuraReport",
    "NoScaleFound",
    "NotDepressed",
    "NotParallel",
    "NoValidH",
    "OrigamiQuinticError",
    "Point",
    "Quintic",
    "SingularSystem",
    "Viewport",
    "ZeroB",
    "ZeroConstantTerm",
    "ZeroScale",
    "bisects",
    "build_config",
    "canonical",
    "chi_from_xi",
    "choose_h",
    "closed_form_kpq",
    "compute_bc",
    "compute_kpq",
    "config_quintic",
    "depress",
    "discriminant",
    "evaluate",
    "find_scale_for_precondition",
    "fold_chi",
    "fold_xi",
    "forward_coefficients",
    "intersect",
    "nishimura_pipeline",
    "nishimura_precondition",
    "normalize_monic",
    "parallel_case_check",
    "parallel_distance",
    "real_roots",
    "reflect_line",
    "reflect_point",
    "render_gallery",
    "render_solution",
    "residual_g",
    "scale",
    "solve_all",
    "verify",
]

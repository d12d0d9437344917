"""Hyperbolic circle packings with prescribed cone angles.

Thin wrapper around the C++ core. The main entry points are
:func:`generate`, :func:`solve`, :func:`run_exhaustion` and :func:`develop`;
see the individual docstrings on the bound functions.
"""

from ._core import (  # noqa: F401
    AngleSpec,
    DepthSolve,
    ExhaustionFamily,
    ExhaustionReport,
    Label,
    LayoutConfig,
    LimitConfig,
    PackingLayout,
    SolveConfig,
    Triangulation,
    ValidationReport,
    angle_sum,
    barycentric_subdivide,
    check_feasible,
    cone_off,
    develop,
    edge_path_length,
    euc_to_hyp_radius,
    export_svg,
    face_excess,
    family_from_json,
    generate,
    generator_names,
    hyp_to_euc_radius,
    isomorphic,
    label_from_json,
    label_to_json,
    limit_label,
    max_completed_degree,
    metric_area,
    orbifold_char,
    parse_angle,
    puncture_refine,
    report_to_json,
    ring_bound_H,
    run_exhaustion,
    solve,
    star_faces,
    svg_string,
    tangency_angle,
    triangle_area,
    triangulation_from_json,
    triangulation_to_json,
    validate,
    verify_layout,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

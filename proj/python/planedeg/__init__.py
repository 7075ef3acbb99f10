"""Induced 2-degenerate subgraphs of triangle-free plane graphs.

Thin wrapper over the C++ core. Structured reports (layer profiles,
charge ledgers) come back as JSON strings; `loads` helpers below turn
them into dicts.
"""

import json as _json

from planedeg._core import (  # noqa: F401
    BIGO_COEFFICIENT,
    SEPARATOR_THRESHOLD,
    PlaneGraph,
    PlanedegError,
    bigO_bound_report,
    bound_value,
    brute_force_oracle,
    certify_k_degenerate,
    construct_2degenerate,
    count_difficult,
    cylgrid_solution,
    degeneracy,
    degree3_census,
    discharge_section2,
    discharge_section3,
    find_special_vertex,
    gen_cube,
    gen_cylindrical_grid,
    gen_difficult,
    gen_quadrangulation,
    layer_profile,
    max_induced_kdeg_exact,
    parse_planar_code,
    threefaces_exact,
    write_planar_code,
)

__version__ = "0.1.0"


def layer_profile_dict(graph, face=0, depth=9):
    """layer_profile with the JSON report parsed into a dict."""
    return _json.loads(layer_profile(graph, face, depth))


def discharge_dict(graph, ruleset=2, outer_face=0, faces=()):
    """Charge ledger for either rule set, as a dict."""
    if ruleset == 2:
        return _json.loads(discharge_section2(graph, outer_face))
    if ruleset == 3:
        return _json.loads(discharge_section3(graph, list(faces)))
    raise ValueError("ruleset must be 2 or 3")

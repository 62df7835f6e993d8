"""Odd graceful labelings of the cycle-path union C_m + P_n.

Labelings are plain dicts from vertex id ("u1".."um" on the cycle,
"v1".."vn" on the path, "x1".. for free graphs) to integer labels.
"""

from ._core import (
    DocumentError,
    Graph,
    GraphError,
    MissingVertexLabel,
    ParamError,
    SpecError,
    algorithmic,
    closed_form,
    complement,
    from_json,
    markers,
    min_path_length,
    search,
    to_json,
    validate_params,
    verify,
)

__all__ = [
    "DocumentError",
    "Graph",
    "GraphError",
    "MissingVertexLabel",
    "ParamError",
    "SpecError",
    "algorithmic",
    "closed_form",
    "complement",
    "from_json",
    "markers",
    "min_path_length",
    "search",
    "to_json",
    "validate_params",
    "verify",
]

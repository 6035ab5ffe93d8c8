"""The algebra catalog and the generic colouring constructions."""
from __future__ import annotations

from colhopf.catalog.base import (
    CONVENTIONS,
    LEG_PARAMETER,
    PAPER_FIXED,
    AlgebraDef,
    AlgebraSpec,
    CatalogError,
    ColouredMaps,
    QParams,
    closed_form_R,
    coloured_maps,
    coloured_R_matrix,
    leg_params,
    leg_rep,
    make_spec,
    pairs_to_expr,
    universal_R_expr,
)
from colhopf.catalog.registry import ALGEBRA_IDS, colourings_for, families, get


def build_algebra(algebra_id: str, params: QParams | dict | None = None) -> AlgebraSpec:
    """Evaluate every table of a catalog entry at ``params`` (template values if omitted)."""
    d = get(algebra_id)
    if params is None:
        params = d.template
    elif isinstance(params, dict):
        params = d.template.replace(**params)
    return make_spec(d, params)


__all__ = [
    "ALGEBRA_IDS", "CONVENTIONS", "LEG_PARAMETER", "PAPER_FIXED", "AlgebraDef", "AlgebraSpec",
    "CatalogError", "ColouredMaps", "QParams", "build_algebra", "closed_form_R", "coloured_R_matrix",
    "coloured_maps", "colourings_for", "families", "get", "leg_params", "leg_rep", "make_spec",
    "pairs_to_expr", "universal_R_expr",
]

"""Catalog index: algebra ids in a fixed order and lookup helpers."""
from __future__ import annotations

from colhopf.catalog.base import AlgebraDef, CatalogError
from colhopf.catalog.euclid import UW_E3
from colhopf.catalog.jordanian import UH_SL2
from colhopf.catalog.oscillator import U_H4_NS2, UZ_H4_NS1, UZ_H4_STD
from colhopf.catalog.poincare import UZ_ISO31
from colhopf.catalog.sl2 import UQ_SL2, UQS_GL2
from colhopf.catalog.sl3 import UQ_SL3_U1U1

DEFINITIONS: dict[str, AlgebraDef] = {
    d.id: d
    for d in (UQ_SL2, UQS_GL2, UQ_SL3_U1U1, UH_SL2, UZ_H4_STD, UZ_H4_NS1, U_H4_NS2, UW_E3, UZ_ISO31)
}
ALGEBRA_IDS = tuple(DEFINITIONS)


def get(algebra_id: str) -> AlgebraDef:
    try:
        return DEFINITIONS[algebra_id]
    except KeyError:
        raise CatalogError(f"unknown algebra {algebra_id!r}; known: {', '.join(ALGEBRA_IDS)}") from None


def colourings_for(algebra_id: str) -> tuple:
    return get(algebra_id).colourings


def families() -> list[tuple[str, str]]:
    """Every (algebra id, colouring id) pair, i.e. every coloured R-matrix family."""
    return [(a, c.id) for a, d in DEFINITIONS.items() for c in d.colourings]

"""Algebra definitions and the generic colouring constructions.

Every catalog entry supplies its uncoloured Hopf data (coproduct and
antipode on generators, a universal R expression) together with one or more
colourings. The coloured maps are derived from those ingredients alone:

    coproduct  Δ^{λ,μ}_ν = (σ^λ ⊗ σ^μ) ∘ Δ ∘ σ_ν
    counit     ε_ν       = ε ∘ σ_ν
    antipode   S^μ_ν     = σ^μ ∘ S ∘ σ_ν
    R-matrix   R^{λ,μ}   = (σ^λ ⊗ σ^μ)(R)

where σ_ν is the inverse of σ^ν.
"""
from __future__ import annotations

import cmath
import dataclasses
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from colhopf import expr as ex
from colhopf import tensorkit as tk
from colhopf.colour import ColourAction, ColourPoint, Colouring

PARAM_NAMES = ("eta", "s", "s1", "s2", "h", "z", "w", "theta", "beta_plus", "beta_minus")

PAPER_FIXED = "paper-fixed"
LEG_PARAMETER = "leg-parameter"
CONVENTIONS = (PAPER_FIXED, LEG_PARAMETER)


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class QParams:
    """Deformation parameters; absent ones are None. q = exp(eta)."""

    eta: Optional[complex] = None
    s: Optional[complex] = None
    s1: Optional[complex] = None
    s2: Optional[complex] = None
    h: Optional[complex] = None
    z: Optional[complex] = None
    w: Optional[complex] = None
    theta: Optional[complex] = None
    beta_plus: Optional[complex] = None
    beta_minus: Optional[complex] = None

    @property
    def q(self) -> complex:
        return cmath.exp(self.eta)

    def replace(self, **kw) -> "QParams":
        return dataclasses.replace(self, **kw)

    def present(self) -> dict:
        return {k: getattr(self, k) for k in PARAM_NAMES if getattr(self, k) is not None}

    def require(self, names, nonzero=()) -> None:
        for n in names:
            if getattr(self, n) is None:
                raise CatalogError(f"missing parameter {n!r}")
        for n in nonzero:
            if getattr(self, n) == 0:
                raise CatalogError(f"parameter {n!r} must be nonzero")


def qpow(eta, x) -> complex:
    """q^x computed as exp(x * eta), no logarithm involved."""
    return cmath.exp(complex(x) * complex(eta))


def spow(s, x) -> complex:
    """s^x on the principal branch of log s."""
    return cmath.exp(complex(x) * cmath.log(complex(s)))


Pairs = tuple  # tuple of (Expr, Expr), each a one-leg expression on leg 1


@dataclass(frozen=True)
class AlgebraDef:
    """Static description of a catalog algebra; every table is a function of QParams."""

    id: str
    title: str
    generators: tuple
    param_names: tuple
    template: QParams
    rep: Callable[[QParams], dict]
    relations: Callable[[QParams], list]
    coproduct: Callable[[QParams], dict]
    antipode: Callable[[QParams], dict]
    universal_r: Callable[..., ex.Expr]
    colourings: tuple
    sample_params: Callable[[np.random.Generator], QParams]
    normalization: Callable[[QParams], complex] = lambda p: 1.0
    closed_form: Optional[Callable] = None
    explicit_coproduct: Optional[Callable] = None
    explicit_antipode: Optional[Callable] = None
    rep_depends_on_params: bool = False
    fixed_parameter: bool = True
    nonzero_params: tuple = ()

    def colouring(self, cid: str) -> Colouring:
        for c in self.colourings:
            if c.id == cid:
                return c
        raise CatalogError(f"{self.id} has no colouring {cid!r}; known: {[c.id for c in self.colourings]}")


@dataclass(frozen=True)
class AlgebraSpec:
    """A catalog algebra with every table evaluated at concrete parameters."""

    definition: AlgebraDef
    params: QParams
    rep: dict
    relations: list
    coproduct: dict
    counit: dict
    antipode: dict
    normalization: complex

    @property
    def id(self) -> str:
        return self.definition.id

    @property
    def generators(self) -> tuple:
        return self.definition.generators

    @property
    def dim(self) -> int:
        return next(iter(self.rep.values())).shape[0]

    @property
    def colourings(self) -> tuple:
        return self.definition.colourings

    def colouring(self, cid: str) -> Colouring:
        return self.definition.colouring(cid)

    def rep_at(self, params: QParams) -> dict:
        return self.definition.rep(params)

    def universal_r(self, nterms: int | None = None) -> ex.Expr:
        return self.definition.universal_r(self.params, nterms or self.dim)


def make_spec(d: AlgebraDef, params: QParams) -> AlgebraSpec:
    params.require(d.param_names, d.nonzero_params)
    rep = {g: tk.as_matrix(m) for g, m in d.rep(params).items()}
    cop = d.coproduct(params)
    anti = d.antipode(params)
    for table, name in ((rep, "representation"), (cop, "coproduct"), (anti, "antipode")):
        missing = set(d.generators) - set(table)
        extra = set(table) - set(d.generators)
        if missing or extra:
            raise CatalogError(f"{d.id} {name} table mismatch: missing {missing}, undeclared {extra}")
    return AlgebraSpec(
        definition=d,
        params=params,
        rep=rep,
        relations=d.relations(params),
        coproduct=cop,
        counit={g: 0.0 for g in d.generators},
        antipode=anti,
        normalization=complex(d.normalization(params)),
    )


# -- generic colouring constructions ----------------------------------------------


def pairs_to_expr(pairs) -> ex.Expr:
    """Σ a_i ⊗ b_i as a two-leg expression."""
    return ex.Sum(tuple(ex.mul(a, ex.relabel_legs(b, {1: 2})) for a, b in pairs))


@dataclass(frozen=True)
class ColouredMaps:
    coproduct: dict  # gen -> tuple of (leg-1 expr, leg-1 expr)
    counit: dict  # gen -> complex
    antipode: dict  # gen -> leg-1 expr


def inverse_action(colouring: Colouring, nu: ColourPoint) -> ColourAction:
    return colouring.action(colouring.group.invert(nu))


def coloured_coproduct(spec: AlgebraSpec, colouring: Colouring, lam, mu, nu) -> dict:
    s_lam = colouring.action(lam).gens
    s_mu = colouring.action(mu).gens
    s_nu_inv = inverse_action(colouring, nu).gens
    out = {}
    for g in spec.generators:
        c, target = s_nu_inv[g]
        out[g] = tuple(
            (ex.scale(c, ex.map_generators(a, s_lam)), ex.map_generators(b, s_mu))
            for a, b in spec.coproduct[target]
        )
    return out


def coloured_counit(spec: AlgebraSpec, colouring: Colouring, nu) -> dict:
    s_nu_inv = inverse_action(colouring, nu).gens
    return {g: c * spec.counit[t] for g, (c, t) in s_nu_inv.items()}


def coloured_antipode(spec: AlgebraSpec, colouring: Colouring, mu, nu) -> dict:
    s_mu = colouring.action(mu).gens
    s_nu_inv = inverse_action(colouring, nu).gens
    out = {}
    for g in spec.generators:
        c, target = s_nu_inv[g]
        out[g] = ex.scale(c, ex.map_generators(spec.antipode[target], s_mu))
    return out


def coloured_maps(spec: AlgebraSpec, colouring: Colouring | str, lam, mu, nu) -> ColouredMaps:
    if isinstance(colouring, str):
        colouring = spec.colouring(colouring)
    return ColouredMaps(
        coproduct=coloured_coproduct(spec, colouring, lam, mu, nu),
        counit=coloured_counit(spec, colouring, nu),
        antipode=coloured_antipode(spec, colouring, mu, nu),
    )


def universal_R_expr(spec: AlgebraSpec, colouring: Colouring | str, lam, mu, nterms: int | None = None) -> ex.Expr:
    if isinstance(colouring, str):
        colouring = spec.colouring(colouring)
    r = spec.universal_r(nterms)
    return ex.map_generators(r, {1: colouring.action(lam).gens, 2: colouring.action(mu).gens})


def leg_params(spec: AlgebraSpec, colouring: Colouring, point: ColourPoint, convention: str) -> QParams:
    if convention == PAPER_FIXED:
        return spec.params
    if convention == LEG_PARAMETER:
        return colouring.param_rule(point, spec.params)
    raise CatalogError(f"unknown convention {convention!r}; expected one of {CONVENTIONS}")


def leg_rep(spec: AlgebraSpec, colouring: Colouring, point: ColourPoint, convention: str) -> dict:
    """Representation used on a leg carrying the given colour."""
    if convention == PAPER_FIXED or not spec.definition.rep_depends_on_params:
        if convention not in CONVENTIONS:
            raise CatalogError(f"unknown convention {convention!r}")
        return spec.rep
    return spec.rep_at(leg_params(spec, colouring, point, convention))


def coloured_R_matrix(spec: AlgebraSpec, colouring: Colouring | str, lam, mu,
                      convention: str = PAPER_FIXED, nterms: int | None = None) -> np.ndarray:
    """Normalization × (D ⊗ D)(R^{λ,μ}) by series evaluation."""
    if isinstance(colouring, str):
        colouring = spec.colouring(colouring)
    r = universal_R_expr(spec, colouring, lam, mu, nterms)
    asg = ex.AtomAssignment.simple([leg_rep(spec, colouring, lam, convention),
                                    leg_rep(spec, colouring, mu, convention)])
    return spec.normalization * ex.eval_hom(r, asg)


def closed_form_R(spec: AlgebraSpec, colouring: Colouring | str, lam, mu) -> Optional[np.ndarray]:
    """The printed matrix assembled entrywise, or None when there is none."""
    cid = colouring if isinstance(colouring, str) else colouring.id
    spec.colouring(cid)
    if spec.definition.closed_form is None:
        return None
    m = spec.definition.closed_form(cid, spec.params, lam, mu)
    return None if m is None else tk.as_matrix(m)

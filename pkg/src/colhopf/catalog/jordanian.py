"""U_h(sl(2)), the nonstandard (Jordanian) deformation, in the basis A, A+, A-."""
from __future__ import annotations

import numpy as np

from colhopf import expr as ex
from colhopf.catalog._util import comm, e, expo, g, primitive, rand_complex, residual
from colhopf.catalog.base import AlgebraDef, QParams
from colhopf.colour import GL1C, Colouring

A, AP, AM = g("A"), g("Ap"), g("Am")


def _rep(p: QParams) -> dict:
    h = p.h
    return {
        "A": np.array([[1, -h], [0, -1]], dtype=np.complex128),
        "Ap": e(2, 1, 2),
        "Am": np.array([[h, -h * h / 4], [1, 0]], dtype=np.complex128),
    }


def _relations(p: QParams) -> list:
    h = p.h
    return [
        ("[A,A+] = (e^{2hA+}-1)/h", residual(comm(A, AP), ex.add(ex.scale(1 / h, expo(2 * h, AP)), ex.lit(-1 / h)))),
        ("[A,A-] = -2A- + hA^2", residual(comm(A, AM), ex.add(ex.scale(-2, AM), ex.scale(h, ex.mul(A, A))))),
        ("[A+,A-] = A", residual(comm(AP, AM), A)),
    ]


def _coproduct(p: QParams) -> dict:
    h = p.h
    return {
        "Ap": primitive(AP),
        "A": ((A, expo(2 * h, AP)), (ex.ONE, A)),
        "Am": ((AM, expo(2 * h, AP)), (ex.ONE, AM)),
    }


def _antipode(p: QParams) -> dict:
    h = p.h
    return {
        "Ap": ex.scale(-1, AP),
        "A": ex.scale(-1, ex.mul(A, expo(-2 * h, AP))),
        "Am": ex.scale(-1, ex.mul(AM, expo(-2 * h, AP))),
    }


def _universal_r(p: QParams, nterms: int) -> ex.Expr:
    h = p.h
    return ex.mul(
        ex.exp(ex.scale(-h, ex.mul(AP, g("A", 2)))),
        ex.exp(ex.scale(h, ex.mul(A, g("Ap", 2)))),
    )


def _rule(pt) -> dict:
    (v,) = pt.values
    return {"A": (1, "A"), "Ap": (v, "Ap"), "Am": (1 / v, "Am")}


def _param_rule(pt, p: QParams) -> QParams:
    return p.replace(h=pt[0] * p.h)


def _closed_form(cid: str, p: QParams, lam, mu):
    (l,), (m,) = lam.values, mu.values
    h = p.h
    return np.array([
        [1, m * h, -l * h, (l - m + l * m) * h * h],
        [0, 1, 0, l * h],
        [0, 0, 1, -m * h],
        [0, 0, 0, 1],
    ], dtype=np.complex128)


def _explicit_coproduct(cid: str, p: QParams, lam, mu, nu):
    (l,), (m,), (n,) = lam.values, mu.values, nu.values
    h = p.h
    return {
        "Ap": ((ex.scale(l / n, AP), ex.ONE), (ex.ONE, ex.scale(m / n, AP))),
        "A": ((A, expo(2 * m * h, AP)), (ex.ONE, A)),
        "Am": ((ex.scale(n / l, AM), expo(2 * m * h, AP)), (ex.ONE, ex.scale(n / m, AM))),
    }


def _explicit_antipode(cid: str, p: QParams, mu, nu):
    (m,), (n,) = mu.values, nu.values
    h = p.h
    return {
        "Ap": ex.scale(-m / n, AP),
        "A": ex.scale(-1, ex.mul(A, expo(-2 * m * h, AP))),
        "Am": ex.scale(-n / m, ex.mul(AM, expo(-2 * m * h, AP))),
    }


UH_SL2 = AlgebraDef(
    id="uh_sl2",
    title="U_h(sl(2)), Jordanian deformation",
    generators=("A", "Ap", "Am"),
    param_names=("h",),
    template=QParams(h=0.3),
    rep=_rep,
    relations=_relations,
    coproduct=_coproduct,
    antipode=_antipode,
    universal_r=_universal_r,
    colourings=(Colouring("gl1", "uh_sl2", GL1C, _rule, _param_rule),),
    sample_params=lambda rng: QParams(h=rand_complex(rng, 0.1, 0.8)),
    closed_form=_closed_form,
    explicit_coproduct=_explicit_coproduct,
    explicit_antipode=_explicit_antipode,
    rep_depends_on_params=True,
    fixed_parameter=False,
    nonzero_params=("h",),
)

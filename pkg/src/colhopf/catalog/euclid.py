"""U_w(e(3)), the standard quantum Euclidean algebra in three dimensions."""
from __future__ import annotations

import numpy as np

from colhopf import expr as ex
from colhopf.catalog._util import blocks, comm, e, expo, g, primitive, rand_real, residual
from colhopf.catalog.base import AlgebraDef, QParams
from colhopf.colour import GL1R, Colouring

GENS = ("J3", "Jp", "Jm", "P3", "Pp", "Pm")
J3, JP, JM, P3, PP, PM = (g(n) for n in GENS)


def _rep(p: QParams = None) -> dict:
    i = 1j
    return {
        "J3": -i * e(4, 1, 2) + i * e(4, 2, 1),
        "Jp": -e(4, 1, 3) - i * e(4, 2, 3) + e(4, 3, 1) + i * e(4, 3, 2),
        "Jm": e(4, 1, 3) - i * e(4, 2, 3) - e(4, 3, 1) + i * e(4, 3, 2),
        "P3": e(4, 3, 4),
        "Pp": e(4, 1, 4) + i * e(4, 2, 4),
        "Pm": e(4, 1, 4) - i * e(4, 2, 4),
    }


def _relations(p: QParams) -> list:
    w = p.w
    cosh2 = ex.add(ex.scale(0.5, expo(2 * w, P3)), ex.scale(0.5, expo(-2 * w, P3)))
    sinh2_over_w = ex.add(ex.scale(0.5 / w, expo(2 * w, P3)), ex.scale(-0.5 / w, expo(-2 * w, P3)))
    return [
        ("[J3,J+] = J+", residual(comm(J3, JP), JP)),
        ("[J3,J-] = -J-", residual(comm(J3, JM), ex.scale(-1, JM))),
        ("[J+,J-] = 2 J3 cosh(2wP3)", residual(comm(JP, JM), ex.scale(2, ex.mul(J3, cosh2)))),
        ("[J3,P+] = P+", residual(comm(J3, PP), PP)),
        ("[J3,P-] = -P-", residual(comm(J3, PM), ex.scale(-1, PM))),
        ("[P3,J+] = P+", residual(comm(P3, JP), PP)),
        ("[P3,J-] = -P-", residual(comm(P3, JM), ex.scale(-1, PM))),
        ("[J+,P-] = sinh(2wP3)/w", residual(comm(JP, PM), sinh2_over_w)),
        ("[J-,P+] = -sinh(2wP3)/w", residual(comm(JM, PP), ex.scale(-1, sinh2_over_w))),
        ("[J3,P3] = 0", comm(J3, P3)),
        ("[J+,P+] = 0", comm(JP, PP)),
        ("[J-,P-] = 0", comm(JM, PM)),
        ("[P3,P+] = 0", comm(P3, PP)),
        ("[P3,P-] = 0", comm(P3, PM)),
        ("[P+,P-] = 0", comm(PP, PM)),
    ]


def _coproduct(p: QParams) -> dict:
    w = p.w
    up, dn = expo(w, P3), expo(-w, P3)

    def jpm(j, pp):
        return ((j, up), (dn, j), (ex.scale(w, pp), ex.mul(up, J3)), (ex.scale(-w, ex.mul(dn, J3)), pp))

    return {
        "J3": primitive(J3),
        "P3": primitive(P3),
        "Jp": jpm(JP, PP),
        "Jm": jpm(JM, PM),
        "Pp": ((PP, up), (dn, PP)),
        "Pm": ((PM, up), (dn, PM)),
    }


def _antipode(p: QParams) -> dict:
    w = p.w
    return {
        "J3": ex.scale(-1, J3),
        "P3": ex.scale(-1, P3),
        "Jp": ex.add(ex.scale(-1, JP), ex.scale(-2 * w, PP)),
        "Jm": ex.add(ex.scale(-1, JM), ex.scale(2 * w, PM)),
        "Pp": ex.scale(-1, PP),
        "Pm": ex.scale(-1, PM),
    }


def _universal_r(p: QParams, nterms: int) -> ex.Expr:
    w = p.w

    def q_plus(leg):
        return ex.mul(expo(w, g("P3", leg)), g("Pp", leg))

    def q_minus(leg):
        return ex.mul(expo(-w, g("P3", leg)), g("Pm", leg))

    def l_plus(leg):
        return ex.mul(expo(w, g("P3", leg)), g("Jp", leg))

    def l_minus(leg):
        return ex.mul(expo(-w, g("P3", leg)), g("Jm", leg))

    qq = ex.mul(q_plus(1), q_minus(2))
    a = ex.scale(w, qq)
    b = ex.add(
        ex.scale(w, ex.add(ex.mul(l_plus(1), q_minus(2)), ex.mul(q_plus(1), l_minus(2)))),
        ex.scale(-w * w, ex.add(
            ex.scale(2, qq),
            ex.mul(q_plus(1), g("J3", 2), q_minus(2)),
            ex.scale(-1, ex.mul(g("J3", 1), q_plus(1), q_minus(2))),
        )),
    )
    cartan = ex.scale(2 * w, ex.add(ex.mul(g("P3", 1), g("J3", 2)), ex.mul(g("J3", 1), g("P3", 2))))
    # arcsinh(2wA)/(wA) = 2 * (arcsinh(x)/x at x = 2wA)
    ratio = ex.scale(2, ex.Func("arcsinh_over_x", ex.scale(2 * w, a)))
    return ex.mul(ex.exp(cartan), ex.exp(ex.mul(b, ratio)), ex.Func("inv_sqrt_1p4x2", ex.scale(w, a)))


def _rule(pt) -> dict:
    (v,) = pt.values
    return {"J3": (1, "J3"), "Jp": (1, "Jp"), "Jm": (1, "Jm"), "P3": (v, "P3"), "Pp": (v, "Pp"), "Pm": (v, "Pm")}


def _param_rule(pt, p: QParams) -> QParams:
    return p.replace(w=pt[0] * p.w)


def _closed_form(cid: str, p: QParams, lam, mu):
    (l,), (m,) = lam.values, mu.values
    w, d = p.w, _rep()
    i = 1j
    return blocks([
        [1, -2 * i * m * w * d["P3"], -2 * m * w * d["Pm"], 2 * l * w * d["Jm"]],
        [2 * i * m * w * d["P3"], 1, -2 * i * m * w * d["Pm"], 2 * i * l * w * d["Jm"]],
        [2 * m * w * d["Pm"], 2 * i * m * w * d["Pm"], 1, 2 * l * w * d["J3"]],
        [0, 0, 0, 1],
    ])


UW_E3 = AlgebraDef(
    id="uw_e3",
    title="U_w(e(3)), standard quantum Euclidean algebra",
    generators=GENS,
    param_names=("w",),
    template=QParams(w=0.4),
    rep=_rep,
    relations=_relations,
    coproduct=_coproduct,
    antipode=_antipode,
    universal_r=_universal_r,
    colourings=(Colouring("gl1", "uw_e3", GL1R, _rule, _param_rule),),
    sample_params=lambda rng: QParams(w=rand_real(rng, 0.1, 1.0)),
    closed_form=_closed_form,
    fixed_parameter=False,
    nonzero_params=("w",),
)

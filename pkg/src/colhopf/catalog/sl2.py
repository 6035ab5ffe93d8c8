"""U_q(sl(2)) with colour groups S2, GL(1,C) and GL(1,C) ⋊ S2, and U_{q,s}(gl(2))."""
from __future__ import annotations

import cmath

import numpy as np

from colhopf import expr as ex
from colhopf import tensorkit as tk
from colhopf.catalog._util import comm, e, expo, g, primitive, rand_complex, residual, sl2_series_coeff, tensor_series
from colhopf.catalog.base import AlgebraDef, QParams, qpow, spow
from colhopf.colour import GL1C, S2, SEMIDIRECT, Colouring

J3, JP, JM, Z = g("J3"), g("Jp"), g("Jm"), g("Z")
RAISE = {1: "Jp", -1: "Jm"}


def _sl2_rep(p: QParams) -> dict:
    return {
        "J3": 0.5 * np.diag([1.0, -1.0]).astype(np.complex128),
        "Jp": e(2, 1, 2),
        "Jm": e(2, 2, 1),
    }


def _q2j3(eta):
    # [2 J3]_q = sinh(2 eta J3) / sinh(eta)
    k = 1 / (2 * cmath.sinh(eta))
    return ex.add(ex.scale(k, expo(2 * eta, J3)), ex.scale(-k, expo(-2 * eta, J3)))


def _sl2_relations(p: QParams) -> list:
    return [
        ("[J3,J+] = J+", residual(comm(J3, JP), JP)),
        ("[J3,J-] = -J-", residual(comm(J3, JM), ex.scale(-1, JM))),
        ("[J+,J-] = [2J3]_q", residual(comm(JP, JM), _q2j3(p.eta))),
    ]


def _sl2_coproduct(p: QParams) -> dict:
    eta = p.eta
    return {
        "J3": primitive(J3),
        "Jp": ((JP, expo(eta, J3)), (expo(-eta, J3), JP)),
        "Jm": ((JM, expo(eta, J3)), (expo(-eta, J3), JM)),
    }


def _sl2_antipode(p: QParams) -> dict:
    q = p.q
    return {"J3": ex.scale(-1, J3), "Jp": ex.scale(-q, JP), "Jm": ex.scale(-1 / q, JM)}


def _sl2_universal_r(p: QParams, nterms: int) -> ex.Expr:
    eta = p.eta
    cartan = ex.exp(ex.scale(2 * eta, ex.mul(J3, g("J3", 2))))
    x = ex.mul(expo(eta, J3), JP)
    y = ex.mul(expo(-eta, g("J3", 2)), g("Jm", 2))
    return ex.mul(cartan, tensor_series(lambda n: sl2_series_coeff(n, eta), x, y, nterms))


# colour actions

def _s2_rule(pt) -> dict:
    (v,) = pt.values
    return {"J3": (v, "J3"), "Jp": (1, RAISE[v]), "Jm": (1, RAISE[-v])}


def _gl1_rule(pt) -> dict:
    (v,) = pt.values
    return {"J3": (1, "J3"), "Jp": (v, "Jp"), "Jm": (1 / v, "Jm")}


def _semidirect_rule(pt) -> dict:
    n1, n2 = pt.values
    up = n1 if n2 == 1 else 1 / n1
    return {"J3": (n2, "J3"), "Jp": (up, RAISE[n2]), "Jm": (1 / up, RAISE[-n2])}


SL2_COLOURINGS = (
    Colouring("s2", "uq_sl2", S2, _s2_rule),
    Colouring("gl1", "uq_sl2", GL1C, _gl1_rule),
    Colouring("semidirect", "uq_sl2", SEMIDIRECT, _semidirect_rule),
)


def _rq(q) -> np.ndarray:
    m = np.diag([q, 1, 1, q]).astype(np.complex128)
    m[1, 2] = q - 1 / q
    return m


def _rq_cross(q, corner) -> np.ndarray:
    m = np.diag([1, q, q, 1]).astype(np.complex128)
    m[0, 3] = corner
    return m


def _sl2_closed_form(cid: str, p: QParams, lam, mu):
    q = p.q
    d = q - 1 / q
    if cid == "s2":
        (l,), (m,) = lam.values, mu.values
        if l == m:
            r = _rq(q)
            return r if l == 1 else r.T
        r = _rq_cross(q, d)
        return r if l == 1 else r.T
    if cid == "gl1":
        (l,), (m,) = lam.values, mu.values
        r = _rq(q)
        r[1, 2] = l / m * d
        return r
    if cid == "semidirect":
        (l1, l2), (m1, m2) = lam.values, mu.values
        if l2 == 1 and m2 == 1:
            r = _rq(q)
            r[1, 2] = l1 / m1 * d
            return r
        if l2 == 1 and m2 == -1:
            return _rq_cross(q, l1 * m1 * d)
        # the two remaining blocks are transposes with inverted first components
        if m2 == -1:
            r = _rq(q)
            r[1, 2] = (1 / l1) / (1 / m1) * d
            return r.T
        return _rq_cross(q, (1 / l1) * (1 / m1) * d).T
    return None


def _qj3(eta, c, leg=1):
    return expo(c * eta, g("J3", leg))


def _sl2_explicit_coproduct(cid: str, p: QParams, lam, mu, nu):
    eta = p.eta
    if cid == "s2":
        (l,), (m,), (n,) = lam.values, mu.values, nu.values
        return {
            "J3": ((ex.scale(l * n, J3), ex.ONE), (ex.ONE, ex.scale(m * n, J3))),
            "Jp": ((g(RAISE[l * n]), _qj3(eta, m)), (_qj3(eta, -l), g(RAISE[m * n]))),
            "Jm": ((g(RAISE[-l * n]), _qj3(eta, m)), (_qj3(eta, -l), g(RAISE[-m * n]))),
        }
    if cid == "gl1":
        (l,), (m,), (n,) = lam.values, mu.values, nu.values
        return {
            "J3": primitive(J3),
            "Jp": ((ex.scale(l / n, JP), _qj3(eta, 1)), (ex.scale(m / n, _qj3(eta, -1)), JP)),
            "Jm": ((ex.scale(n / l, JM), _qj3(eta, 1)), (ex.scale(n / m, _qj3(eta, -1)), JM)),
        }
    if cid == "semidirect":
        (l1, l2), (m1, m2), (n1, n2) = lam.values, mu.values, nu.values
        out = {"J3": ((ex.scale(l2 * n2, J3), ex.ONE), (ex.ONE, ex.scale(m2 * n2, J3)))}
        for sign, gen in ((1, "Jp"), (-1, "Jm")):
            c1 = l1 ** (sign * l2 * n2) * n1 ** (-sign)
            c2 = m1 ** (sign * m2 * n2) * n1 ** (-sign)
            out[gen] = (
                (ex.scale(c1, g(RAISE[sign * l2 * n2])), _qj3(eta, m2)),
                (ex.scale(c2, _qj3(eta, -l2)), g(RAISE[sign * m2 * n2])),
            )
        return out
    return None


def _sl2_explicit_antipode(cid: str, p: QParams, mu, nu):
    q = p.q
    if cid == "s2":
        (m,), (n,) = mu.values, nu.values
        return {
            "J3": ex.scale(-m * n, J3),
            "Jp": ex.scale(-(q**n), g(RAISE[m * n])),
            "Jm": ex.scale(-(q**-n), g(RAISE[-m * n])),
        }
    if cid == "gl1":
        (m,), (n,) = mu.values, nu.values
        return {"J3": ex.scale(-1, J3), "Jp": ex.scale(-(m * q / n), JP), "Jm": ex.scale(-(n / (m * q)), JM)}
    if cid == "semidirect":
        (m1, m2), (n1, n2) = mu.values, nu.values
        out = {"J3": ex.scale(-m2 * n2, J3)}
        for sign, gen in ((1, "Jp"), (-1, "Jm")):
            c = -(m1 ** (sign * m2 * n2)) * n1 ** (-sign) * q ** (sign * n2)
            out[gen] = ex.scale(c, g(RAISE[sign * m2 * n2]))
        return out
    return None


def _sample_eta(rng: np.random.Generator) -> QParams:
    return QParams(eta=rand_complex(rng, 0.1, 0.8))


UQ_SL2 = AlgebraDef(
    id="uq_sl2",
    title="U_q(sl(2)), standard Drinfeld-Jimbo deformation",
    generators=("J3", "Jp", "Jm"),
    param_names=("eta",),
    template=QParams(eta=0.3),
    rep=_sl2_rep,
    relations=_sl2_relations,
    coproduct=_sl2_coproduct,
    antipode=_sl2_antipode,
    universal_r=_sl2_universal_r,
    colourings=SL2_COLOURINGS,
    sample_params=_sample_eta,
    normalization=lambda p: qpow(p.eta, 0.5),
    closed_form=_sl2_closed_form,
    explicit_coproduct=_sl2_explicit_coproduct,
    explicit_antipode=_sl2_explicit_antipode,
    nonzero_params=("eta",),
)


# -- U_{q,s}(gl(2)) ---------------------------------------------------------------


def _gl2_rep(p: QParams) -> dict:
    rep = _sl2_rep(p)
    rep["Z"] = tk.eye(2)
    return rep


def _gl2_relations(p: QParams) -> list:
    return _sl2_relations(p) + [
        (f"[Z,{x}] = 0", comm(Z, g(x))) for x in ("J3", "Jp", "Jm")
    ]


def _gl2_coproduct(p: QParams) -> dict:
    eta, ls = p.eta, cmath.log(p.s)
    s_over_q, qs = ls - eta, ls + eta
    return {
        "J3": primitive(J3),
        "Z": primitive(Z),
        "Jp": (
            (JP, ex.mul(expo(eta, J3), expo(s_over_q, Z))),
            (ex.mul(expo(-eta, J3), expo(qs, Z)), JP),
        ),
        "Jm": (
            (JM, ex.mul(expo(eta, J3), expo(-s_over_q, Z))),
            (ex.mul(expo(-eta, J3), expo(-qs, Z)), JM),
        ),
    }


def _gl2_antipode(p: QParams) -> dict:
    q, ls = p.q, cmath.log(p.s)
    return {
        "J3": ex.scale(-1, J3),
        "Z": ex.scale(-1, Z),
        "Jp": ex.scale(-q, ex.mul(expo(-2 * ls, Z), JP)),
        "Jm": ex.scale(-1 / q, ex.mul(expo(2 * ls, Z), JM)),
    }


def _gl2_universal_r(p: QParams, nterms: int) -> ex.Expr:
    eta, ls = p.eta, cmath.log(p.s)
    z2, j2 = g("Z", 2), g("J3", 2)
    cartan = ex.exp(ex.scale(2 * eta, ex.add(
        ex.mul(J3, j2), ex.scale(-1, ex.mul(Z, j2)), ex.mul(J3, z2))))
    x = ex.mul(expo(eta, J3), expo(-(eta + ls), Z), JP)
    y = ex.mul(expo(-eta, j2), expo(ls - eta, z2), g("Jm", 2))
    return ex.mul(cartan, tensor_series(lambda n: sl2_series_coeff(n, eta), x, y, nterms))


def _gl2_rule(pt) -> dict:
    (v,) = pt.values
    return {"J3": (1, "J3"), "Jp": (1, "Jp"), "Jm": (1, "Jm"), "Z": (v, "Z")}


def _gl2_closed_form(cid: str, p: QParams, lam, mu):
    (l,), (m,) = lam.values, mu.values
    eta, q = p.eta, p.q
    r = np.diag([qpow(eta, 1 - l + m), qpow(eta, l + m), qpow(eta, -l - m), qpow(eta, 1 + l - m)])
    r = r.astype(np.complex128)
    r[1, 2] = (q - 1 / q) * spow(p.s, -l + m)
    return r


def _gl2_explicit_coproduct(cid: str, p: QParams, lam, mu, nu):
    (l,), (m,), (n,) = lam.values, mu.values, nu.values
    eta, ls = p.eta, cmath.log(p.s)
    out = {"J3": primitive(J3), "Z": ((ex.scale(l / n, Z), ex.ONE), (ex.ONE, ex.scale(m / n, Z)))}
    for sign, gen in ((1, "Jp"), (-1, "Jm")):
        out[gen] = (
            (g(gen), ex.mul(expo(eta, J3), expo(sign * m * (ls - eta), Z))),
            (ex.mul(expo(-eta, J3), expo(sign * l * (eta + ls), Z)), g(gen)),
        )
    return out


def _gl2_explicit_antipode(cid: str, p: QParams, mu, nu):
    (m,), (n,) = mu.values, nu.values
    q, ls = p.q, cmath.log(p.s)
    return {
        "J3": ex.scale(-1, J3),
        "Z": ex.scale(-m / n, Z),
        "Jp": ex.scale(-q, ex.mul(expo(-2 * m * ls, Z), JP)),
        "Jm": ex.scale(-1 / q, ex.mul(expo(2 * m * ls, Z), JM)),
    }


def _sample_gl2(rng: np.random.Generator) -> QParams:
    return QParams(eta=rand_complex(rng, 0.1, 0.7), s=cmath.exp(rand_complex(rng, 0.05, 0.5)))


UQS_GL2 = AlgebraDef(
    id="uqs_gl2",
    title="U_{q,s}(gl(2)), two-parameter deformation",
    generators=("J3", "Jp", "Jm", "Z"),
    param_names=("eta", "s"),
    template=QParams(eta=0.3, s=1.2),
    rep=_gl2_rep,
    relations=_gl2_relations,
    coproduct=_gl2_coproduct,
    antipode=_gl2_antipode,
    universal_r=_gl2_universal_r,
    colourings=(Colouring("gl1", "uqs_gl2", GL1C, _gl2_rule),),
    sample_params=_sample_gl2,
    normalization=lambda p: qpow(p.eta, 0.5),
    closed_form=_gl2_closed_form,
    explicit_coproduct=_gl2_explicit_coproduct,
    explicit_antipode=_gl2_explicit_antipode,
    nonzero_params=("eta", "s"),
)

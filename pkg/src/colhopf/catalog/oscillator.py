"""Three deformations of the oscillator algebra h(4) with generators N, M, A+, A-.

All three share the 3x3 representation below and have the parameters enter
only through nilpotent combinations there, so the representation itself does
not depend on the deformation parameters.
"""
from __future__ import annotations

import numpy as np

from colhopf import expr as ex
from colhopf.catalog._util import blocks, comm, e, expo, g, primitive, rand_complex, residual
from colhopf.catalog.base import AlgebraDef, QParams
from colhopf.colour import GL1C, PAIR_C, Colouring

N, M, AP, AM = g("N"), g("M"), g("Ap"), g("Am")
GENS = ("N", "M", "Ap", "Am")


def _rep(p: QParams = None) -> dict:
    return {"N": e(3, 2, 2), "M": e(3, 1, 3), "Ap": e(3, 2, 3), "Am": e(3, 1, 2)}


def _m_central() -> list:
    return [("[M,N] = 0", comm(M, N)), ("[M,A+] = 0", comm(M, AP)), ("[M,A-] = 0", comm(M, AM))]


def _pair_rule(pt) -> dict:
    vp, vm = pt.values
    return {"N": (1, "N"), "M": (vp * vm, "M"), "Ap": (vp, "Ap"), "Am": (vm, "Am")}


# -- standard U^(s)_z(h(4)) -------------------------------------------------------


def _std_relations(p: QParams) -> list:
    z = p.z
    sinh_zm = ex.add(ex.scale(1 / (2 * z), expo(z, M)), ex.scale(-1 / (2 * z), expo(-z, M)))
    return [
        ("[N,A+] = A+", residual(comm(N, AP), AP)),
        ("[N,A-] = -A-", residual(comm(N, AM), ex.scale(-1, AM))),
        ("[A-,A+] = sinh(zM)/z", residual(comm(AM, AP), sinh_zm)),
    ] + _m_central()


def _std_coproduct(p: QParams) -> dict:
    z = p.z
    return {
        "N": primitive(N),
        "M": primitive(M),
        "Ap": ((AP, ex.ONE), (expo(-z, M), AP)),
        "Am": ((AM, expo(z, M)), (ex.ONE, AM)),
    }


def _std_antipode(p: QParams) -> dict:
    z = p.z
    return {
        "N": ex.scale(-1, N),
        "M": ex.scale(-1, M),
        "Ap": ex.scale(-1, ex.mul(AP, expo(z, M))),
        "Am": ex.scale(-1, ex.mul(AM, expo(-z, M))),
    }


def _std_universal_r(p: QParams, nterms: int) -> ex.Expr:
    z = p.z
    return ex.mul(
        ex.exp(ex.scale(-z, ex.mul(M, g("N", 2)))),
        ex.exp(ex.scale(-z, ex.mul(N, g("M", 2)))),
        ex.exp(ex.scale(2 * z, ex.mul(AM, g("Ap", 2)))),
    )


def _std_param_rule(pt, p: QParams) -> QParams:
    return p.replace(z=pt[0] * pt[1] * p.z)


def _std_closed_form(cid: str, p: QParams, lam, mu):
    (lp, lm), (mp, mm) = lam.values, mu.values
    z, d = p.z, _rep()
    return blocks([
        [1, 2 * lm * mp * z * d["Ap"], -lp * lm * z * d["N"]],
        [0, np.eye(3) - mp * mm * z * d["M"], 0],
        [0, 0, 1],
    ])


def _std_explicit_coproduct(cid: str, p: QParams, lam, mu, nu):
    (lp, lm), (mp, mm), (np_, nm) = lam.values, mu.values, nu.values
    z = p.z
    return {
        "N": primitive(N),
        "M": ((ex.scale(lp * lm / (np_ * nm), M), ex.ONE), (ex.ONE, ex.scale(mp * mm / (np_ * nm), M))),
        "Ap": ((ex.scale(lp / np_, AP), ex.ONE), (ex.scale(mp / np_, expo(-lp * lm * z, M)), AP)),
        "Am": ((ex.scale(lm / nm, AM), expo(mp * mm * z, M)), (ex.ONE, ex.scale(mm / nm, AM))),
    }


def _std_explicit_antipode(cid: str, p: QParams, mu, nu):
    (mp, mm), (np_, nm) = mu.values, nu.values
    z = p.z
    return {
        "N": ex.scale(-1, N),
        "M": ex.scale(-mp * mm / (np_ * nm), M),
        "Ap": ex.scale(-mp / np_, ex.mul(AP, expo(mp * mm * z, M))),
        "Am": ex.scale(-mm / nm, ex.mul(AM, expo(-mp * mm * z, M))),
    }


UZ_H4_STD = AlgebraDef(
    id="uz_h4_std",
    title="U^(s)_z(h(4)), standard oscillator deformation",
    generators=GENS,
    param_names=("z",),
    template=QParams(z=0.4),
    rep=_rep,
    relations=_std_relations,
    coproduct=_std_coproduct,
    antipode=_std_antipode,
    universal_r=_std_universal_r,
    colourings=(Colouring("gl1xgl1", "uz_h4_std", PAIR_C, _pair_rule, _std_param_rule),),
    sample_params=lambda rng: QParams(z=rand_complex(rng, 0.1, 1.0)),
    closed_form=_std_closed_form,
    explicit_coproduct=_std_explicit_coproduct,
    explicit_antipode=_std_explicit_antipode,
    fixed_parameter=False,
    nonzero_params=("z",),
)


# -- one-parameter nonstandard U^(n)_z(h(4)) --------------------------------------


def _ns1_relations(p: QParams) -> list:
    z = p.z
    return [
        ("[N,A+] = (e^{zA+}-1)/z", residual(comm(N, AP), ex.add(ex.scale(1 / z, expo(z, AP)), ex.lit(-1 / z)))),
        ("[N,A-] = -A-", residual(comm(N, AM), ex.scale(-1, AM))),
        ("[A-,A+] = M e^{zA+}", residual(comm(AM, AP), ex.mul(M, expo(z, AP)))),
    ] + _m_central()


def _ns1_coproduct(p: QParams) -> dict:
    z = p.z
    return {
        "N": ((N, expo(z, AP)), (ex.ONE, N)),
        "M": primitive(M),
        "Ap": primitive(AP),
        "Am": ((AM, expo(z, AP)), (ex.ONE, AM), (ex.scale(z, N), ex.mul(M, expo(z, AP)))),
    }


def _ns1_antipode(p: QParams) -> dict:
    z = p.z
    return {
        "N": ex.scale(-1, ex.mul(N, expo(-z, AP))),
        "M": ex.scale(-1, M),
        "Ap": ex.scale(-1, AP),
        "Am": ex.add(ex.scale(-1, ex.mul(AM, expo(-z, AP))), ex.scale(z, ex.mul(N, M, expo(-z, AP)))),
    }


def _ns1_universal_r(p: QParams, nterms: int) -> ex.Expr:
    z = p.z
    return ex.mul(
        ex.exp(ex.scale(-z, ex.mul(AP, g("N", 2)))),
        ex.exp(ex.scale(z, ex.mul(N, g("Ap", 2)))),
    )


def _ns1_rule(pt) -> dict:
    (v,) = pt.values
    return {"N": (1, "N"), "M": (v, "M"), "Ap": (v, "Ap"), "Am": (1, "Am")}


def _ns1_param_rule(pt, p: QParams) -> QParams:
    return p.replace(z=pt[0] * p.z)


def _ns1_closed_form(cid: str, p: QParams, lam, mu):
    (l,), (m,) = lam.values, mu.values
    z, d = p.z, _rep()
    return blocks([
        [1, 0, 0],
        [0, np.eye(3) + m * z * d["Ap"], -l * z * d["N"]],
        [0, 0, 1],
    ])


def _ns1_explicit_coproduct(cid: str, p: QParams, lam, mu, nu):
    (l,), (m,), (n,) = lam.values, mu.values, nu.values
    z = p.z
    return {
        "N": ((N, expo(m * z, AP)), (ex.ONE, N)),
        "M": ((ex.scale(l / n, M), ex.ONE), (ex.ONE, ex.scale(m / n, M))),
        "Ap": ((ex.scale(l / n, AP), ex.ONE), (ex.ONE, ex.scale(m / n, AP))),
        "Am": ((AM, expo(m * z, AP)), (ex.ONE, AM), (ex.scale(m * z, N), ex.mul(M, expo(m * z, AP)))),
    }


def _ns1_explicit_antipode(cid: str, p: QParams, mu, nu):
    (m,), (n,) = mu.values, nu.values
    z = p.z
    return {
        "N": ex.scale(-1, ex.mul(N, expo(-m * z, AP))),
        "M": ex.scale(-m / n, M),
        "Ap": ex.scale(-m / n, AP),
        "Am": ex.add(ex.scale(-1, ex.mul(AM, expo(-m * z, AP))), ex.scale(m * z, ex.mul(N, M, expo(-m * z, AP)))),
    }


UZ_H4_NS1 = AlgebraDef(
    id="uz_h4_ns1",
    title="U^(n)_z(h(4)), one-parameter nonstandard oscillator deformation",
    generators=GENS,
    param_names=("z",),
    template=QParams(z=0.4),
    rep=_rep,
    relations=_ns1_relations,
    coproduct=_ns1_coproduct,
    antipode=_ns1_antipode,
    universal_r=_ns1_universal_r,
    colourings=(Colouring("gl1", "uz_h4_ns1", GL1C, _ns1_rule, _ns1_param_rule),),
    sample_params=lambda rng: QParams(z=rand_complex(rng, 0.1, 1.0)),
    closed_form=_ns1_closed_form,
    explicit_coproduct=_ns1_explicit_coproduct,
    explicit_antipode=_ns1_explicit_antipode,
    fixed_parameter=False,
    nonzero_params=("z",),
)


# -- three-parameter nonstandard U^(IIn)_{theta,beta+,beta-}(h(4)) ----------------


def _v(x):
    # V(x) = (e^{xM} - 1 - xM) / x^2
    return ex.add(ex.scale(1 / x**2, expo(x, M)), ex.lit(-1 / x**2), ex.scale(-1 / x, M))


def _ns2_relations(p: QParams) -> list:
    t, bp, bm = p.theta, p.beta_plus, p.beta_minus
    return [
        ("[N,A+] = A+ - b- V(-t)", residual(comm(N, AP), ex.add(AP, ex.scale(-bm, _v(-t))))),
        ("[N,A-] = -A- - b+ V(t)", residual(comm(N, AM), ex.add(ex.scale(-1, AM), ex.scale(-bp, _v(t))))),
        ("[A-,A+] = M", residual(comm(AM, AP), M)),
    ] + _m_central()


def _one_minus_exp(c):
    return ex.add(ex.ONE, ex.scale(-1, expo(c, M)))


def _ns2_coproduct(p: QParams) -> dict:
    t, bp, bm = p.theta, p.beta_plus, p.beta_minus
    return {
        "N": (
            (N, ex.ONE), (ex.ONE, N),
            (ex.scale(bp / t, AP), _one_minus_exp(-t)),
            (ex.scale(bm / t, AM), _one_minus_exp(t)),
        ),
        "M": primitive(M),
        "Ap": ((AP, expo(-t, M)), (ex.ONE, AP)),
        "Am": ((AM, expo(t, M)), (ex.ONE, AM)),
    }


def _ns2_antipode(p: QParams) -> dict:
    t, bp, bm = p.theta, p.beta_plus, p.beta_minus
    return {
        "N": ex.add(
            ex.scale(-1, N),
            ex.scale(-bp / t, ex.mul(AP, _one_minus_exp(t))),
            ex.scale(-bm / t, ex.mul(AM, _one_minus_exp(-t))),
        ),
        "M": ex.scale(-1, M),
        "Ap": ex.scale(-1, ex.mul(AP, expo(t, M))),
        "Am": ex.scale(-1, ex.mul(AM, expo(-t, M))),
    }


def _ns2_universal_r(p: QParams, nterms: int) -> ex.Expr:
    t, bp, bm = p.theta, p.beta_plus, p.beta_minus

    def comb(leg):
        return ex.add(ex.scale(t, g("N", leg)), ex.scale(bp, g("Ap", leg)), ex.scale(bm, g("Am", leg)))

    return ex.mul(
        ex.exp(ex.scale(-1, ex.mul(M, comb(2)))),
        ex.exp(ex.mul(comb(1), g("M", 2))),
    )


def _ns2_param_rule(pt, p: QParams) -> QParams:
    vp, vm = pt.values
    return p.replace(theta=vp * vm * p.theta, beta_plus=vp * vp * vm * p.beta_plus,
                     beta_minus=vp * vm * vm * p.beta_minus)


def _ns2_closed_form(cid: str, p: QParams, lam, mu):
    (lp, lm), (mp, mm) = lam.values, mu.values
    t, bp, bm = p.theta, p.beta_plus, p.beta_minus
    d = _rep()
    return blocks([
        [1, lm * mp * mm * bm * d["M"], -lp * lm * (t * d["N"] + mp * bp * d["Ap"] + mm * bm * d["Am"])],
        [0, np.eye(3) + mp * mm * t * d["M"], lp * mp * mm * bp * d["M"]],
        [0, 0, 1],
    ])


def _ns2_explicit_coproduct(cid: str, p: QParams, lam, mu, nu):
    (lp, lm), (mp, mm), (np_, nm) = lam.values, mu.values, nu.values
    t, bp, bm = p.theta, p.beta_plus, p.beta_minus
    k = mp * mm * t
    return {
        "N": (
            (N, ex.ONE), (ex.ONE, N),
            (ex.scale(lp * bp / t, AP), _one_minus_exp(-k)),
            (ex.scale(lm * bm / t, AM), _one_minus_exp(k)),
        ),
        "M": ((ex.scale(lp * lm / (np_ * nm), M), ex.ONE), (ex.ONE, ex.scale(mp * mm / (np_ * nm), M))),
        "Ap": ((ex.scale(lp / np_, AP), expo(-k, M)), (ex.ONE, ex.scale(mp / np_, AP))),
        "Am": ((ex.scale(lm / nm, AM), expo(k, M)), (ex.ONE, ex.scale(mm / nm, AM))),
    }


def _ns2_explicit_antipode(cid: str, p: QParams, mu, nu):
    (mp, mm), (np_, nm) = mu.values, nu.values
    t, bp, bm = p.theta, p.beta_plus, p.beta_minus
    k = mp * mm * t
    return {
        "N": ex.add(
            ex.scale(-1, N),
            ex.scale(-mp * bp / t, ex.mul(AP, _one_minus_exp(k))),
            ex.scale(-mm * bm / t, ex.mul(AM, _one_minus_exp(-k))),
        ),
        "M": ex.scale(-mp * mm / (np_ * nm), M),
        "Ap": ex.scale(-mp / np_, ex.mul(AP, expo(k, M))),
        "Am": ex.scale(-mm / nm, ex.mul(AM, expo(-k, M))),
    }


U_H4_NS2 = AlgebraDef(
    id="u_h4_ns2",
    title="U^(IIn)_{theta,beta+,beta-}(h(4)), three-parameter nonstandard oscillator deformation",
    generators=GENS,
    param_names=("theta", "beta_plus", "beta_minus"),
    template=QParams(theta=0.5, beta_plus=0.3, beta_minus=-0.2),
    rep=_rep,
    relations=_ns2_relations,
    coproduct=_ns2_coproduct,
    antipode=_ns2_antipode,
    universal_r=_ns2_universal_r,
    colourings=(Colouring("gl1xgl1", "u_h4_ns2", PAIR_C, _pair_rule, _ns2_param_rule),),
    sample_params=lambda rng: QParams(theta=rand_complex(rng, 0.1, 1.0),
                                      beta_plus=rand_complex(rng, 0.1, 1.0),
                                      beta_minus=rand_complex(rng, 0.1, 1.0)),
    closed_form=_ns2_closed_form,
    explicit_coproduct=_ns2_explicit_coproduct,
    explicit_antipode=_ns2_explicit_antipode,
    fixed_parameter=False,
    nonzero_params=("theta", "beta_plus", "beta_minus"),
)

"""U_{q,s1,s2}(sl(3) ⊕ u(1) ⊕ u(1)) in its 3-dimensional defining representation."""
from __future__ import annotations

import cmath

import numpy as np

from colhopf import expr as ex
from colhopf import tensorkit as tk
from colhopf.catalog._util import comm, e, expo, g, primitive, rand_complex, residual, sl2_series_coeff, tensor_series
from colhopf.catalog.base import AlgebraDef, QParams
from colhopf.colour import PAIR_C, Colouring

GENS = ("H1", "H2", "Xp1", "Xp2", "Xm1", "Xm2", "Z1", "Z2")
CARTAN_INV = np.array([[2.0, 1.0], [1.0, 2.0]]) / 3.0


def _rep(p: QParams) -> dict:
    xp1, xp2 = e(3, 1, 2), e(3, 2, 3)
    return {
        "H1": np.diag([1.0, -1.0, 0.0]).astype(np.complex128),
        "H2": np.diag([0.0, 1.0, -1.0]).astype(np.complex128),
        "Xp1": xp1,
        "Xp2": xp2,
        "Xm1": xp1.T.copy(),
        "Xm2": xp2.T.copy(),
        "Z1": tk.eye(3),
        "Z2": tk.eye(3),
    }


def _x3(eta, sign):
    # X^±_3 = q^{1/2} X^±_1 X^±_2 - q^{-1/2} X^±_2 X^±_1
    a, b = g(f"X{sign}1"), g(f"X{sign}2")
    return ex.add(ex.scale(cmath.exp(eta / 2), ex.mul(a, b)), ex.scale(-cmath.exp(-eta / 2), ex.mul(b, a)))


def _relations(p: QParams) -> list:
    eta = p.eta
    rels = []
    for i in (1, 2):
        j = 3 - i
        h = g(f"H{i}")
        for sign, s in (("p", 1), ("m", -1)):
            rels.append((f"[H{i},X{sign}{i}]", residual(comm(h, g(f"X{sign}{i}")), ex.scale(2 * s, g(f"X{sign}{i}")))))
            rels.append((f"[H{i},X{sign}{j}]", residual(comm(h, g(f"X{sign}{j}")), ex.scale(-s, g(f"X{sign}{j}")))))
        k = 1 / (2 * cmath.sinh(eta))
        qh = ex.add(ex.scale(k, expo(eta, h)), ex.scale(-k, expo(-eta, h)))
        rels.append((f"[X+{i},X-{i}] = [H{i}]_q", residual(comm(g(f"Xp{i}"), g(f"Xm{i}")), qh)))
        rels.append((f"[X+{i},X-{j}] = 0", comm(g(f"Xp{i}"), g(f"Xm{j}"))))
    for sign in ("p", "m"):
        x1, x2, x3 = g(f"X{sign}1"), g(f"X{sign}2"), _x3(eta, sign)
        rq, rqi = cmath.exp(eta / 2), cmath.exp(-eta / 2)
        rels.append((f"q-Serre X{sign}1", ex.add(ex.scale(rqi, ex.mul(x1, x3)), ex.scale(-rq, ex.mul(x3, x1)))))
        rels.append((f"q-Serre X{sign}2", ex.add(ex.scale(rq, ex.mul(x2, x3)), ex.scale(-rqi, ex.mul(x3, x2)))))
    for i in (1, 2):
        for other in ("H1", "H2", "Xp1", "Xp2", "Xm1", "Xm2"):
            rels.append((f"[Z{i},{other}] = 0", comm(g(f"Z{i}"), g(other))))
    return rels


def _coproduct(p: QParams) -> dict:
    eta = p.eta
    out = {}
    for i, s in ((1, p.s1), (2, p.s2)):
        ls = cmath.log(s)
        h, z = g(f"H{i}"), g(f"Z{i}")
        out[f"H{i}"] = primitive(h)
        out[f"Z{i}"] = primitive(z)
        for sign, sg in (("p", 1), ("m", -1)):
            x = g(f"X{sign}{i}")
            out[f"X{sign}{i}"] = (
                (x, ex.mul(expo(eta / 2, h), expo(sg * (eta + ls) / 2, z))),
                (ex.mul(expo(-eta / 2, h), expo(sg * (ls - eta) / 2, z)), x),
            )
    return out


def _antipode(p: QParams) -> dict:
    q = p.q
    out = {}
    for i, s in ((1, p.s1), (2, p.s2)):
        ls = cmath.log(s)
        out[f"H{i}"] = ex.scale(-1, g(f"H{i}"))
        out[f"Z{i}"] = ex.scale(-1, g(f"Z{i}"))
        out[f"Xp{i}"] = ex.scale(-q, ex.mul(expo(-ls, g(f"Z{i}")), g(f"Xp{i}")))
        out[f"Xm{i}"] = ex.scale(-1 / q, ex.mul(expo(ls, g(f"Z{i}")), g(f"Xm{i}")))
    return out


def _ef(p: QParams):
    """e_i (leg 1) and f_i (leg 2) root vectors, i = 1, 2, 3."""
    eta = p.eta
    es, fs = {}, {}
    for i, s in ((1, p.s1), (2, p.s2)):
        ls = cmath.log(s)
        es[i] = ex.mul(expo(eta / 2, g(f"H{i}")), expo(-(ls - eta) / 2, g(f"Z{i}")), g(f"Xp{i}"))
        fs[i] = ex.mul(expo(-eta / 2, g(f"H{i}", 2)), expo((eta + ls) / 2, g(f"Z{i}", 2)), g(f"Xm{i}", 2))
    qi = cmath.exp(-eta)
    es[3] = ex.add(ex.mul(es[1], es[2]), ex.scale(-qi, ex.mul(es[2], es[1])))
    fs[3] = ex.add(ex.mul(fs[1], fs[2]), ex.scale(-qi, ex.mul(fs[2], fs[1])))
    return es, fs


def _universal_r(p: QParams, nterms: int) -> ex.Expr:
    eta = p.eta
    q = cmath.exp(eta)
    alpha = 1 - q**-2
    terms = []
    for i in (1, 2):
        for j in (1, 2):
            a = CARTAN_INV[i - 1, j - 1]
            terms.append(ex.scale(a, ex.mul(g(f"Z{i}"), g(f"H{j}", 2))))
            terms.append(ex.scale(-a, ex.mul(g(f"H{i}"), g(f"Z{j}", 2))))
            terms.append(ex.scale(a, ex.mul(g(f"H{i}"), g(f"H{j}", 2))))
    cartan = ex.exp(ex.scale(eta, ex.Sum(tuple(terms))))
    es, fs = _ef(p)
    # E_{q^-2}(A) = Σ q^{n(n-1)/2} / [n]_q! A^n, and (x ⊗ y)^n = x^n ⊗ y^n
    def qexp(sign, i):
        return tensor_series(lambda n: sl2_series_coeff(n, eta) / alpha**n * (sign * alpha) ** n,
                             es[i], fs[i], nterms)
    return ex.mul(cartan, qexp(1, 1), qexp(-1, 3), qexp(1, 2))


def _rule(pt) -> dict:
    n1, n2 = pt.values
    out = {x: (1, x) for x in GENS}
    out["Z1"] = (n1, "Z1")
    out["Z2"] = (n2, "Z2")
    return out


def _explicit_coproduct(cid: str, p: QParams, lam, mu, nu):
    eta = p.eta
    out = {}
    for i, s in ((1, p.s1), (2, p.s2)):
        ls = cmath.log(s)
        l, m, n = lam[i - 1], mu[i - 1], nu[i - 1]
        h, z = g(f"H{i}"), g(f"Z{i}")
        out[f"H{i}"] = primitive(h)
        out[f"Z{i}"] = ((ex.scale(l / n, z), ex.ONE), (ex.ONE, ex.scale(m / n, z)))
        for sign, sg in (("p", 1), ("m", -1)):
            x = g(f"X{sign}{i}")
            out[f"X{sign}{i}"] = (
                (x, ex.mul(expo(eta / 2, h), expo(sg * m * (eta + ls) / 2, z))),
                (ex.mul(expo(-eta / 2, h), expo(sg * l * (ls - eta) / 2, z)), x),
            )
    return out


def _explicit_antipode(cid: str, p: QParams, mu, nu):
    q = p.q
    out = {}
    for i, s in ((1, p.s1), (2, p.s2)):
        ls = cmath.log(s)
        m, n = mu[i - 1], nu[i - 1]
        out[f"H{i}"] = ex.scale(-1, g(f"H{i}"))
        out[f"Z{i}"] = ex.scale(-m / n, g(f"Z{i}"))
        out[f"Xp{i}"] = ex.scale(-q, ex.mul(expo(-m * ls, g(f"Z{i}")), g(f"Xp{i}")))
        out[f"Xm{i}"] = ex.scale(-1 / q, ex.mul(expo(m * ls, g(f"Z{i}")), g(f"Xm{i}")))
    return out


def _sample(rng: np.random.Generator) -> QParams:
    return QParams(eta=rand_complex(rng, 0.1, 0.7),
                   s1=cmath.exp(rand_complex(rng, 0.05, 0.5)),
                   s2=cmath.exp(rand_complex(rng, 0.05, 0.5)))


UQ_SL3_U1U1 = AlgebraDef(
    id="uq_sl3_u1u1",
    title="U_{q,s1,s2}(sl(3) + u(1) + u(1)), three-parameter deformation",
    generators=GENS,
    param_names=("eta", "s1", "s2"),
    template=QParams(eta=0.3, s1=1.2, s2=0.8),
    rep=_rep,
    relations=_relations,
    coproduct=_coproduct,
    antipode=_antipode,
    universal_r=_universal_r,
    colourings=(Colouring("gl1xgl1", "uq_sl3_u1u1", PAIR_C, _rule),),
    sample_params=_sample,
    explicit_coproduct=_explicit_coproduct,
    explicit_antipode=_explicit_antipode,
    nonzero_params=("eta", "s1", "s2"),
)

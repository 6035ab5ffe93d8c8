"""U_z(iso(3,1)), the null-plane quantum Poincaré algebra in four dimensions."""
from __future__ import annotations

import itertools

import numpy as np

from colhopf import expr as ex
from colhopf.catalog._util import blocks, comm, e, expo, g, primitive, rand_real, residual
from colhopf.catalog.base import AlgebraDef, QParams
from colhopf.colour import PAIR_R, Colouring

GENS = ("K3", "J3", "Pp", "Pm", "P1", "P2", "E1", "E2", "F1", "F2")
K3, J3, PP, PM, P1, P2, E1, E2, F1, F2 = (g(n) for n in GENS)
P = {1: P1, 2: P2}
E = {1: E1, 2: E2}
F = {1: F1, 2: F2}
# Levi-Civita symbol restricted to i, j in {1, 2} with third index 3, eps_123 = +1.
EPS = {(1, 2): 1, (2, 1): -1, (1, 1): 0, (2, 2): 0}


def _e0(i, j):
    return e(5, i, j, base=0)


def _rep(p: QParams = None) -> dict:
    return {
        "K3": _e0(1, 4) + _e0(4, 1),
        "J3": _e0(2, 3) - _e0(3, 2),
        "Pp": 0.5 * (_e0(1, 0) + _e0(4, 0)),
        "Pm": _e0(1, 0) - _e0(4, 0),
        "P1": _e0(2, 0),
        "P2": _e0(3, 0),
        "E1": 0.5 * (_e0(1, 2) + _e0(2, 1) - _e0(2, 4) + _e0(4, 2)),
        "E2": 0.5 * (_e0(1, 3) + _e0(3, 1) - _e0(3, 4) + _e0(4, 3)),
        "F1": _e0(1, 2) + _e0(2, 1) + _e0(2, 4) - _e0(4, 2),
        "F2": _e0(1, 3) + _e0(3, 1) + _e0(3, 4) - _e0(4, 3),
    }


def _commutator_table(z) -> dict:
    """Nonvanishing commutators [X, Y] keyed by (X, Y); every other pair commutes."""
    ez = expo(2 * z, PP)
    e_minus_1 = ex.add(ex.scale(1 / (2 * z), ez), ex.lit(-1 / (2 * z)))
    pm_sq = ex.add(PM, ex.scale(z, ex.mul(P1, P1)), ex.scale(z, ex.mul(P2, P2)))
    t = {
        ("K3", "Pp"): e_minus_1,
        ("K3", "Pm"): ex.scale(-1, pm_sq),
        ("F1", "F2"): ex.scale(2 * z, ex.add(ex.mul(P1, F2), ex.scale(-1, ex.mul(P2, F1)))),
    }
    for i in (1, 2):
        t[("K3", f"E{i}")] = ex.mul(E[i], ez)
        t[("K3", f"F{i}")] = ex.add(ex.scale(-1, F[i]), ex.scale(-2 * z, ex.mul(K3, P[i])))
        t[("Pp", f"F{i}")] = ex.scale(-1, P[i])
        t[("Pm", f"E{i}")] = ex.scale(-1, P[i])
        for j in (1, 2):
            if EPS[(i, j)]:
                for name, table in (("P", P), ("E", E), ("F", F)):
                    t[("J3", f"{name}{i}")] = ex.scale(-EPS[(i, j)], table[j])
            if i == j:
                t[(f"E{i}", f"P{j}")] = e_minus_1
                t[(f"F{i}", f"P{j}")] = pm_sq
                t[(f"E{i}", f"F{j}")] = K3
            else:
                t[(f"E{i}", f"F{j}")] = ex.scale(EPS[(i, j)], ex.mul(J3, ez))
    return t


def _relations(p: QParams) -> list:
    table = _commutator_table(p.z)
    out = []
    for a, b in itertools.combinations(GENS, 2):
        x, y = g(a), g(b)
        if (a, b) in table:
            out.append((f"[{a},{b}]", residual(comm(x, y), table[(a, b)])))
        elif (b, a) in table:
            out.append((f"[{b},{a}]", residual(comm(y, x), table[(b, a)])))
        else:
            out.append((f"[{a},{b}] = 0", comm(x, y)))
    return out


def _coproduct(p: QParams) -> dict:
    z = p.z
    ez = expo(2 * z, PP)

    def tail(x):
        return ex.mul(x, ez)

    return {
        "J3": primitive(J3),
        "Pp": primitive(PP),
        "E1": primitive(E1),
        "E2": primitive(E2),
        "Pm": ((PM, ez), (ex.ONE, PM)),
        "P1": ((P1, ez), (ex.ONE, P1)),
        "P2": ((P2, ez), (ex.ONE, P2)),
        "F1": ((F1, ez), (ex.ONE, F1), (ex.scale(-2 * z, PM), tail(E1)), (ex.scale(-2 * z, P2), tail(J3))),
        "F2": ((F2, ez), (ex.ONE, F2), (ex.scale(-2 * z, PM), tail(E2)), (ex.scale(2 * z, P1), tail(J3))),
        "K3": ((K3, ez), (ex.ONE, K3), (ex.scale(-2 * z, P1), tail(E1)), (ex.scale(-2 * z, P2), tail(E2))),
    }


def _antipode(p: QParams) -> dict:
    z = p.z
    ez_inv = expo(-2 * z, PP)

    def neg_tail(*terms):
        return ex.scale(-1, ex.mul(ex.add(*terms), ez_inv))

    return {
        "J3": ex.scale(-1, J3),
        "Pp": ex.scale(-1, PP),
        "E1": ex.scale(-1, E1),
        "E2": ex.scale(-1, E2),
        "Pm": neg_tail(PM),
        "P1": neg_tail(P1),
        "P2": neg_tail(P2),
        "F1": neg_tail(F1, ex.scale(2 * z, ex.mul(PM, E1)), ex.scale(2 * z, ex.mul(P2, J3))),
        "F2": neg_tail(F2, ex.scale(2 * z, ex.mul(PM, E2)), ex.scale(-2 * z, ex.mul(P1, J3))),
        "K3": neg_tail(K3, ex.scale(2 * z, ex.mul(P1, E1)), ex.scale(2 * z, ex.mul(P2, E2))),
    }


def _universal_r(p: QParams, nterms: int) -> ex.Expr:
    z = p.z

    def factor(c, a, b):
        return ex.exp(ex.scale(c, ex.mul(g(a, 1), g(b, 2))))

    return ex.mul(
        factor(2 * z, "E2", "P2"),
        factor(2 * z, "E1", "P1"),
        factor(-2 * z, "Pp", "K3"),
        factor(2 * z, "K3", "Pp"),
        factor(-2 * z, "P1", "E1"),
        factor(-2 * z, "P2", "E2"),
    )


def _rule(pt) -> dict:
    v1, v2 = pt.values
    return {
        "K3": (1, "K3"), "J3": (1, "J3"),
        "Pp": (v1 * v2, "Pp"), "Pm": (v1 / v2, "Pm"),
        "P1": (v1, "P1"), "P2": (v1, "P2"),
        "E1": (v2, "E1"), "E2": (v2, "E2"),
        "F1": (1 / v2, "F1"), "F2": (1 / v2, "F2"),
    }


def _param_rule(pt, p: QParams) -> QParams:
    return p.replace(z=pt[0] * pt[1] * p.z)


def _closed_form(cid: str, p: QParams, lam, mu):
    (l1, l2), (m1, m2) = lam.values, mu.values
    z, d = p.z, _rep()
    a = l2 * m1 * z
    return blocks([
        [1, 0, 0, 0, 0],
        [-l1 * l2 * z * d["K3"], 1, a * d["P1"], a * d["P2"], 2 * m1 * m2 * z * d["Pp"]],
        [-2 * l1 * m2 * z * d["E1"], a * d["P1"], 1, 0, -a * d["P1"]],
        [-2 * l1 * m2 * z * d["E2"], a * d["P2"], 0, 1, -a * d["P2"]],
        [-l1 * l2 * z * d["K3"], 2 * m1 * m2 * z * d["Pp"], a * d["P1"], a * d["P2"], 1],
    ])


UZ_ISO31 = AlgebraDef(
    id="uz_iso31",
    title="U_z(iso(3,1)), null-plane quantum Poincaré algebra",
    generators=GENS,
    param_names=("z",),
    template=QParams(z=0.2),
    rep=_rep,
    relations=_relations,
    coproduct=_coproduct,
    antipode=_antipode,
    universal_r=_universal_r,
    colourings=(Colouring("gl1xgl1", "uz_iso31", PAIR_R, _rule, _param_rule),),
    sample_params=lambda rng: QParams(z=rand_real(rng, 0.1, 1.0)),
    closed_form=_closed_form,
    fixed_parameter=False,
    nonzero_params=("z",),
)

"""Expression trees over tensor legs, evaluated to matrices.

An expression lives in ``H^{⊗n}``: atoms name a generator on a given leg,
and the usual algebra operations build everything else. Evaluation is
numerical; there is no symbolic simplification.

An :class:`AtomAssignment` says where each expression leg lands in the target
space and which matrix each generator becomes there. A leg may land on a
group of target legs, which is how coproduct images are evaluated: since the
transporting maps are algebra homomorphisms, pushing an expression through
them is the same as re-evaluating the tree with substituted atom matrices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence, Union

import numpy as np

from colhopf import tensorkit as tk


class MissingAtomError(KeyError):
    pass


@dataclass(frozen=True)
class Atom:
    leg: int
    gen: str

    def __post_init__(self):
        if self.leg < 1:
            raise ValueError(f"leg must be positive, got {self.leg}")


@dataclass(frozen=True)
class ScalarLit:
    value: complex


@dataclass(frozen=True)
class Scale:
    coeff: complex
    arg: "Expr"


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Prod:
    factors: tuple


@dataclass(frozen=True)
class Func:
    name: str
    arg: "Expr"

    def __post_init__(self):
        if self.name not in tk.SERIES:
            raise ValueError(f"unknown series {self.name!r}")


Expr = Union[Atom, ScalarLit, Scale, Sum, Prod, Func]

ONE = ScalarLit(1.0)


# -- construction helpers ---------------------------------------------------------


def at(leg: int, gen: str) -> Atom:
    return Atom(leg, gen)


def lit(c) -> ScalarLit:
    return ScalarLit(complex(c))


def scale(c, x: Expr) -> Expr:
    return Scale(complex(c), x)


def add(*terms: Expr) -> Sum:
    return Sum(tuple(terms))


def mul(*factors: Expr) -> Expr:
    if len(factors) == 1:
        return factors[0]
    return Prod(tuple(factors))


def power(x: Expr, n: int) -> Expr:
    if n == 0:
        return ONE
    return mul(*([x] * n))


def exp(x: Expr) -> Func:
    return Func("exp", x)


def legs_of(x: Expr) -> set[int]:
    if isinstance(x, Atom):
        return {x.leg}
    if isinstance(x, ScalarLit):
        return set()
    if isinstance(x, (Scale, Func)):
        return legs_of(x.arg)
    parts = x.terms if isinstance(x, Sum) else x.factors
    out: set[int] = set()
    for p in parts:
        out |= legs_of(p)
    return out


def atoms_of(x: Expr) -> set[Atom]:
    if isinstance(x, Atom):
        return {x}
    if isinstance(x, ScalarLit):
        return set()
    if isinstance(x, (Scale, Func)):
        return atoms_of(x.arg)
    parts = x.terms if isinstance(x, Sum) else x.factors
    out: set[Atom] = set()
    for p in parts:
        out |= atoms_of(p)
    return out


def relabel_legs(x: Expr, mapping: Mapping[int, int]) -> Expr:
    """Move atoms to new legs, e.g. {1: 2} turns a one-leg expression into a leg-2 one."""
    if isinstance(x, Atom):
        return Atom(mapping.get(x.leg, x.leg), x.gen)
    if isinstance(x, ScalarLit):
        return x
    if isinstance(x, Scale):
        return Scale(x.coeff, relabel_legs(x.arg, mapping))
    if isinstance(x, Func):
        return Func(x.name, relabel_legs(x.arg, mapping))
    if isinstance(x, Sum):
        return Sum(tuple(relabel_legs(t, mapping) for t in x.terms))
    return Prod(tuple(relabel_legs(f, mapping) for f in x.factors))


# -- generator substitution -------------------------------------------------------

# A generator rule sends a generator id to (coefficient, target generator id).
GenRule = Mapping[str, tuple]


def map_generators(x: Expr, gmap) -> Expr:
    """Replace every Atom(leg, g) by Scale(c, Atom(leg, g')) per the rule.

    ``gmap`` is either a single rule applied on every leg or a mapping from leg
    to rule; legs missing from a per-leg mapping are left untouched.
    """
    per_leg = bool(gmap) and all(isinstance(k, int) for k in gmap)

    def rule_for(leg: int):
        if per_leg:
            return gmap.get(leg)
        return gmap

    def go(node: Expr) -> Expr:
        if isinstance(node, Atom):
            rule = rule_for(node.leg)
            if rule is None:
                return node
            try:
                c, target = rule[node.gen]
            except KeyError:
                raise MissingAtomError(f"generator {node.gen!r} has no image under the map") from None
            return Scale(complex(c), Atom(node.leg, target))
        if isinstance(node, ScalarLit):
            return node
        if isinstance(node, Scale):
            return Scale(node.coeff, go(node.arg))
        if isinstance(node, Func):
            return Func(node.name, go(node.arg))
        if isinstance(node, Sum):
            return Sum(tuple(go(t) for t in node.terms))
        return Prod(tuple(go(f) for f in node.factors))

    return go(x)


# -- evaluation -------------------------------------------------------------------


@dataclass
class AtomAssignment:
    """Where expression legs land and what their generators become.

    ``dims`` are the target-space leg dimensions. ``slots`` maps each
    expression leg to ``(target_legs, matrices)`` where ``matrices`` maps a
    generator id to an operator on the tensor product of ``target_legs``.
    ``matrices`` may also be a callable ``gen -> matrix``.
    """

    dims: tuple
    slots: dict
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    @classmethod
    def simple(cls, reps: Sequence[Mapping[str, np.ndarray]]) -> "AtomAssignment":
        """One representation per leg, leg i landing on target leg i."""
        dims = tuple(next(iter(r.values())).shape[0] if r else 1 for r in reps)
        return cls(dims, {i + 1: ((i + 1,), r) for i, r in enumerate(reps)})

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    def matrix(self, atom: Atom) -> np.ndarray:
        hit = self._cache.get(atom)
        if hit is not None:
            return hit
        try:
            target, mats = self.slots[atom.leg]
        except KeyError:
            raise MissingAtomError(f"no assignment for leg {atom.leg}") from None
        try:
            local = mats(atom.gen) if callable(mats) else mats[atom.gen]
        except KeyError:
            raise MissingAtomError(f"no matrix for generator {atom.gen!r} on leg {atom.leg}") from None
        full = tk.embed(local, target, self.dims)
        self._cache[atom] = full
        return full

    def transposed(self, legs: Sequence[int]) -> "AtomAssignment":
        """Same assignment with the matrices of the given expression legs transposed."""
        slots = dict(self.slots)
        for leg in legs:
            target, mats = slots[leg]
            if callable(mats):
                slots[leg] = (target, (lambda g, _m=mats: np.transpose(_m(g))))
            else:
                slots[leg] = (target, {g: np.transpose(m) for g, m in mats.items()})
        return AtomAssignment(self.dims, slots)


def _evaluate(x: Expr, asg: AtomAssignment, reverse: bool) -> np.ndarray:
    n = asg.total_dim

    def go(node: Expr) -> np.ndarray:
        if isinstance(node, Atom):
            return asg.matrix(node)
        if isinstance(node, ScalarLit):
            return node.value * tk.eye(n)
        if isinstance(node, Scale):
            return node.coeff * go(node.arg)
        if isinstance(node, Sum):
            out = np.zeros((n, n), dtype=np.complex128)
            for t in node.terms:
                out = out + go(t)
            return out
        if isinstance(node, Prod):
            factors = reversed(node.factors) if reverse else node.factors
            out = None
            for f in factors:
                m = go(f)
                out = m if out is None else out @ m
            return tk.eye(n) if out is None else out
        if isinstance(node, Func):
            # series nodes recur across expressions sharing an assignment
            key = ("func", reverse, node)
            hit = asg._cache.get(key)
            if hit is None:
                hit = asg._cache[key] = tk.analytic_apply(node.name, go(node.arg))
            return hit
        raise TypeError(f"not an expression node: {node!r}")

    # atom and series results are cached and shared; hand out a private copy
    return np.array(go(x), copy=True)


def eval_hom(x: Expr, asg: AtomAssignment) -> np.ndarray:
    """Evaluate as an algebra homomorphism: products in written order."""
    return _evaluate(x, asg, reverse=False)


def eval_antihom(x: Expr, asg: AtomAssignment) -> np.ndarray:
    """Evaluate as an algebra antihomomorphism: every product reversed.

    A series node f(x) becomes f applied to the reversed evaluation of x,
    which is sound because an antihomomorphism fixes powers of one element.
    """
    return _evaluate(x, asg, reverse=True)


def eval_mixed(x: Expr, asg: AtomAssignment, anti_legs: Sequence[int]) -> np.ndarray:
    """Antihomomorphic on ``anti_legs``, homomorphic on the others.

    Uses D(S(ab)) = (S(a)^t S(b)^t)^t: evaluate homomorphically with transposed
    atom matrices on the anti legs, then transpose those target legs back.
    """
    anti_legs = list(anti_legs)
    if not anti_legs:
        return eval_hom(x, asg)
    out = eval_hom(x, asg.transposed(anti_legs))
    for leg in anti_legs:
        target, _ = asg.slots[leg]
        for t in target:
            out = tk.partial_transpose(out, t, asg.dims)
    return out

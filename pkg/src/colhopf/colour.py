"""Colour groups, colour points and per-algebra colour actions.

Group laws are written against plain arithmetic (``*`` and reciprocal), so
they work unchanged on floats, complex numbers and exact ``sympy`` numbers.
The last is what the exact group-axiom tests use.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

import numpy as np


class ColourError(ValueError):
    pass


@dataclass(frozen=True)
class ColourPoint:
    group: str
    values: tuple

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return f"{self.group}{self.values}"


def _nonzero(x) -> bool:
    return x != 0


def _recip(x):
    return 1 / x


@dataclass(frozen=True)
class ColourGroup:
    """A colour group: its law, identity, inverse, sampler and component names.

    ``kind`` is one of ``s2``, ``gl1``, ``semidirect``, ``pair``. ``real``
    restricts continuous components to nonzero reals.
    """

    name: str
    kind: str
    real: bool = False
    components: tuple = ()

    @property
    def abelian(self) -> bool:
        return self.kind != "semidirect"

    @property
    def discrete(self) -> bool:
        return self.kind == "s2"

    def point(self, *values) -> ColourPoint:
        p = ColourPoint(self.name, tuple(values))
        self.validate(p)
        return p

    def validate(self, p: ColourPoint) -> None:
        if p.group != self.name:
            raise ColourError(f"point {p} does not belong to group {self.name}")
        arity = {"s2": 1, "gl1": 1, "semidirect": 2, "pair": 2}[self.kind]
        if len(p.values) != arity:
            raise ColourError(f"{self.name} points have {arity} component(s), got {p.values}")
        if self.kind == "s2":
            if p.values[0] not in (1, -1):
                raise ColourError(f"S2 colour must be +1 or -1, got {p.values[0]}")
            return
        if self.kind == "semidirect":
            if not _nonzero(p.values[0]):
                raise ColourError("semidirect colour needs a nonzero first component")
            if p.values[1] not in (1, -1):
                raise ColourError("semidirect colour needs a sign as second component")
            return
        for v in p.values:
            if not _nonzero(v):
                raise ColourError(f"{self.name} colours must be nonzero, got {p.values}")
            if self.real and isinstance(v, complex) and v.imag != 0:
                raise ColourError(f"{self.name} colours must be real, got {p.values}")

    def identity(self) -> ColourPoint:
        if self.kind == "s2":
            return ColourPoint(self.name, (1,))
        if self.kind == "gl1":
            return ColourPoint(self.name, (1,))
        if self.kind == "semidirect":
            return ColourPoint(self.name, (1, 1))
        return ColourPoint(self.name, (1, 1))

    def compose(self, a: ColourPoint, b: ColourPoint) -> ColourPoint:
        """a ∘ b, so that the action of the result is action(a) after action(b)."""
        if a.group != self.name or b.group != self.name:
            raise ColourError(f"cannot compose {a} and {b} in {self.name}")
        if self.kind in ("s2", "gl1"):
            return ColourPoint(self.name, (a[0] * b[0],))
        if self.kind == "semidirect":
            # (n1', s') ∘ (n1, s) = (n1' * n1^s', s' s)
            n1 = b[0] if a[1] == 1 else _recip(b[0])
            return ColourPoint(self.name, (a[0] * n1, a[1] * b[1]))
        return ColourPoint(self.name, (a[0] * b[0], a[1] * b[1]))

    def invert(self, a: ColourPoint) -> ColourPoint:
        self.validate(a)
        if self.kind == "s2":
            return a
        if self.kind == "gl1":
            return ColourPoint(self.name, (_recip(a[0]),))
        if self.kind == "semidirect":
            # (n1^(-s), s)
            return ColourPoint(self.name, (_recip(a[0]) if a[1] == 1 else a[0], a[1]))
        return ColourPoint(self.name, (_recip(a[0]), _recip(a[1])))

    def enumerate(self) -> list[ColourPoint]:
        if not self.discrete:
            raise ColourError(f"{self.name} is not a finite group")
        return [ColourPoint(self.name, (1,)), ColourPoint(self.name, (-1,))]

    def sample(self, rng: np.random.Generator) -> ColourPoint:
        """One colour from the sampling domain.

        Complex components come from the annulus 0.5 <= |v| <= 2 with uniform
        log-modulus and phase; real ones from ±[0.5, 2].
        """
        if self.kind == "s2":
            return ColourPoint(self.name, (int(rng.choice([1, -1])),))
        if self.kind == "semidirect":
            return ColourPoint(self.name, (self._scalar(rng), int(rng.choice([1, -1]))))
        n = 1 if self.kind == "gl1" else 2
        return ColourPoint(self.name, tuple(self._scalar(rng) for _ in range(n)))

    def _scalar(self, rng: np.random.Generator):
        if self.real:
            sign = 1.0 if rng.random() < 0.5 else -1.0
            return sign * float(rng.uniform(0.5, 2.0))
        r = math.exp(rng.uniform(math.log(0.5), math.log(2.0)))
        return complex(cmath.rect(r, rng.uniform(-math.pi, math.pi)))

    def sample_real_form(self, rng: np.random.Generator) -> ColourPoint:
        """Pair colours restricted to nu_minus = conj(nu_plus)."""
        if self.kind != "pair" or self.real:
            raise ColourError(f"{self.name} has no conjugate real-form sampling mode")
        v = self._scalar(rng)
        return ColourPoint(self.name, (v, v.conjugate()))

    def from_additive(self, p) -> ColourPoint:
        """Additive reparameterization of an abelian group: nu(p) = exp(p) per GL1 factor."""
        if not self.abelian:
            raise ColourError(f"{self.name} is nonabelian; no additive colour parameters")
        if self.kind == "s2":
            return ColourPoint(self.name, ((-1) ** int(p),))
        if self.kind == "gl1":
            return ColourPoint(self.name, (cmath.exp(p) if not self.real else math.exp(p),))
        p1, p2 = p
        f = math.exp if self.real else cmath.exp
        return ColourPoint(self.name, (f(p1), f(p2)))


S2 = ColourGroup("S2", "s2", components=("sign",))
GL1C = ColourGroup("GL1C", "gl1", components=("nu",))
GL1R = ColourGroup("GL1R", "gl1", real=True, components=("nu",))
SEMIDIRECT = ColourGroup("GL1CxS2", "semidirect", components=("nu1", "nu2"))
PAIR_C = ColourGroup("GL1CxGL1C", "pair", components=("nu1", "nu2"))
PAIR_R = ColourGroup("GL1RxGL1R", "pair", real=True, components=("nu1", "nu2"))

GROUPS = {g.name: g for g in (S2, GL1C, GL1R, SEMIDIRECT, PAIR_C, PAIR_R)}


def compose(g: ColourGroup, a: ColourPoint, b: ColourPoint) -> ColourPoint:
    return g.compose(a, b)


def invert(g: ColourGroup, a: ColourPoint) -> ColourPoint:
    return g.invert(a)


def group_identity(g: ColourGroup) -> ColourPoint:
    return g.identity()


# -- actions ----------------------------------------------------------------------

GenRule = Mapping[str, tuple]


@dataclass(frozen=True)
class ColourAction:
    """Generator rule ``gen -> (coeff, target)`` and a parameter rule."""

    gens: dict
    params: Callable

    def then(self, first: "ColourAction") -> "ColourAction":
        """The composite ``self ∘ first`` (apply ``first``, then ``self``)."""
        gens = {}
        for g, (c1, t1) in first.gens.items():
            c2, t2 = self.gens[t1]
            gens[g] = (c1 * c2, t2)
        return ColourAction(gens, lambda p: self.params(first.params(p)))

    def is_bijective(self) -> bool:
        targets = [t for _, t in self.gens.values()]
        return sorted(targets) == sorted(self.gens) and all(_nonzero(c) for c, _ in self.gens.values())


@dataclass(frozen=True)
class Colouring:
    """A colour group acting on one algebra.

    ``gen_rule(point)`` returns ``{gen: (coeff, target)}`` and
    ``param_rule(point, params)`` the transformed deformation parameters.
    """

    id: str
    algebra: str
    group: ColourGroup
    gen_rule: Callable
    param_rule: Callable = staticmethod(lambda point, params: params)

    def action(self, point: ColourPoint) -> ColourAction:
        self.group.validate(point)
        return ColourAction(self.gen_rule(point), lambda p, _pt=point: self.param_rule(_pt, p))


def action(g: ColourGroup, a: ColourPoint, alg: str, colouring: str | None = None) -> ColourAction:
    """Colour action of point ``a`` of group ``g`` on the catalog algebra ``alg``."""
    from colhopf.catalog import registry

    for c in registry.colourings_for(alg):
        if c.group.name == g.name and (colouring is None or c.id == colouring):
            return c.action(a)
    raise ColourError(f"no colouring of {alg!r} by {g.name} is registered")


def iter_samples(group: ColourGroup, rng: np.random.Generator, n: int) -> Iterator[ColourPoint]:
    if group.discrete:
        yield from group.enumerate()
        return
    for _ in range(n):
        yield group.sample(rng)

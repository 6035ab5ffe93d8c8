"""Shared helpers for writing catalog tables."""
from __future__ import annotations

import cmath
import math

import numpy as np

from colhopf import expr as ex
from colhopf import tensorkit as tk


def g(name: str, leg: int = 1) -> ex.Atom:
    return ex.Atom(leg, name)


def comm(x, y) -> ex.Expr:
    return ex.add(ex.mul(x, y), ex.scale(-1, ex.mul(y, x)))


def residual(lhs, rhs) -> ex.Expr:
    return ex.add(lhs, ex.scale(-1, rhs))


def expo(c, x) -> ex.Func:
    """exp(c * x)."""
    return ex.exp(ex.scale(c, x))


def primitive(x) -> tuple:
    return ((x, ex.ONE), (ex.ONE, x))


def sl2_series_coeff(n: int, eta) -> complex:
    """(1 - q^-2)^n q^(n(n-1)/2) / [n]_q!  with q = exp(eta)."""
    q = cmath.exp(eta)
    return (1 - q**-2) ** n * cmath.exp(eta * n * (n - 1) / 2) / tk.q_factorial(n, q)


def tensor_series(coeffs, x_leg1, y_leg2, nterms: int) -> ex.Expr:
    """Σ_{n < nterms} c_n x^n ⊗ y^n; exact whenever x or y is nilpotent of order <= nterms."""
    terms = []
    for n in range(nterms):
        c = coeffs(n)
        terms.append(ex.scale(c, ex.mul(ex.power(x_leg1, n), ex.power(y_leg2, n))))
    return ex.Sum(tuple(terms))


def rand_complex(rng: np.random.Generator, lo: float, hi: float) -> complex:
    r = rng.uniform(lo, hi)
    return complex(cmath.rect(r, rng.uniform(-math.pi, math.pi)))


def rand_real(rng: np.random.Generator, lo: float, hi: float) -> float:
    sign = 1.0 if rng.random() < 0.5 else -1.0
    return sign * float(rng.uniform(lo, hi))


def e(n: int, i: int, j: int, base: int = 1) -> np.ndarray:
    return tk.unit(n, i, j, base)


def blocks(grid) -> np.ndarray:
    """Assemble a block matrix; ``0`` and ``1`` entries stand for null and unit blocks."""
    size = next(np.asarray(b).shape[0] for row in grid for b in row if not np.isscalar(b))
    rows = []
    for row in grid:
        cells = []
        for b in row:
            if np.isscalar(b):
                cells.append(complex(b) * np.eye(size, dtype=np.complex128))
            else:
                cells.append(tk.as_matrix(b))
        rows.append(np.hstack(cells))
    return np.vstack(rows)

"""Dense complex linear algebra for small operators.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Tensor products
use the row-major basis convention ``(i, j) -> i * dim_b + j`` throughout,
which is what ``numpy.kron`` produces.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

MAX_SERIES_TERMS = 64
SERIES_RTOL = 1e-16


class SeriesConvergenceError(ArithmeticError):
    """Raised when a matrix power series fails to settle within the term cap."""


class QArithmeticError(ZeroDivisionError):
    """Raised at the poles of q-deformed arithmetic (q = +1 or -1)."""


def as_matrix(a) -> np.ndarray:
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d array, got shape {m.shape}")
    return m


def _require_square(m: np.ndarray) -> None:
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"operation requires a square matrix, got shape {m.shape}")


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def unit(n: int, i: int, j: int, base: int = 0) -> np.ndarray:
    """Elementary matrix with a single 1 at row ``i``, column ``j``.

    ``base`` is the label of the first row/column, so ``unit(4, 1, 2, base=1)``
    is the 1-indexed ``e_12`` of a 4x4 space.
    """
    m = np.zeros((n, n), dtype=np.complex128)
    m[i - base, j - base] = 1.0
    return m


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def kron_all(ops: Sequence) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.complex128)
    for op in ops:
        out = np.kron(out, as_matrix(op))
    return out


def embed(op, legs: Sequence[int], dims: Sequence[int]) -> np.ndarray:
    """Operator acting as ``op`` on the given legs (1-indexed) and as identity elsewhere.

    ``op`` acts on the tensor product of the selected legs in increasing leg
    order, e.g. ``embed(R, [1, 3], [2, 2, 2])`` is ``R_13`` on a triple space.
    """
    op = as_matrix(op)
    legs = list(legs)
    dims = [int(d) for d in dims]
    n = len(dims)
    if not legs:
        raise ValueError("at least one leg must be selected")
    if any(b <= a for a, b in zip(legs, legs[1:])):
        raise ValueError(f"legs must be strictly increasing, got {legs}")
    if legs[0] < 1 or legs[-1] > n:
        raise ValueError(f"leg index out of range 1..{n}: {legs}")
    sub = int(np.prod([dims[l - 1] for l in legs]))
    if op.shape != (sub, sub):
        raise ValueError(f"operator shape {op.shape} does not match legs {legs} of dims {dims}")
    if len(legs) == n:
        return op.copy()
    rest = [l for l in range(1, n + 1) if l not in legs]
    rest_dim = int(np.prod([dims[l - 1] for l in rest]))
    # op on the selected legs first, identity on the rest, then permute the
    # tensor factors back into natural order.
    big = np.kron(op, np.eye(rest_dim, dtype=np.complex128))
    order = legs + rest
    inv = [order.index(l) for l in range(1, n + 1)]
    shape = [dims[l - 1] for l in order]
    t = big.reshape(shape + shape)
    t = t.transpose(inv + [n + i for i in inv])
    total = int(np.prod(dims))
    return np.ascontiguousarray(t.reshape(total, total))


def flip(dim_a: int, dim_b: int) -> np.ndarray:
    """Permutation matrix P with P (x ⊗ y) = y ⊗ x for x of dim_a and y of dim_b."""
    p = np.zeros((dim_a * dim_b, dim_a * dim_b), dtype=np.complex128)
    for i in range(dim_a):
        for j in range(dim_b):
            p[j * dim_a + i, i * dim_b + j] = 1.0
    return p


def partial_transpose(m, leg: int, dims: Sequence[int]) -> np.ndarray:
    """Transpose the tensor factor ``leg`` (1-indexed) of an operator on ``dims``."""
    m = as_matrix(m)
    n = len(dims)
    t = m.reshape(list(dims) + list(dims))
    axes = list(range(2 * n))
    axes[leg - 1], axes[n + leg - 1] = axes[n + leg - 1], axes[leg - 1]
    return np.ascontiguousarray(t.transpose(axes).reshape(m.shape))


# -- analytic functions by Taylor series ----------------------------------------


def _exp_coeff(k: int) -> float:
    return 1.0 / math.factorial(k)


def _arcsinh_over_x_coeff(k: int) -> float:
    if k % 2:
        return 0.0
    n = k // 2
    return (-1) ** n * math.comb(2 * n, n) / (4**n * (2 * n + 1))


def _inv_sqrt_1p4x2_coeff(k: int) -> float:
    # (1 + 4x^2)^(-1/2) = sum_n (-1)^n C(2n, n) x^(2n)
    if k % 2:
        return 0.0
    n = k // 2
    return float((-1) ** n * math.comb(2 * n, n))


SERIES: dict[str, Callable[[int], float]] = {
    "exp": _exp_coeff,
    "arcsinh_over_x": _arcsinh_over_x_coeff,
    "inv_sqrt_1p4x2": _inv_sqrt_1p4x2_coeff,
}

SCALAR_FUNCS: dict[str, Callable[[complex], complex]] = {
    "exp": cmath.exp,
    "arcsinh_over_x": lambda x: 1.0 if x == 0 else cmath.asinh(x) / x,
    "inv_sqrt_1p4x2": lambda x: 1.0 / cmath.sqrt(1 + 4 * x * x),
}


def analytic_apply(name: str, m) -> np.ndarray:
    """Evaluate the named power series at a square matrix.

    Summation stops as soon as a power of ``m`` is exactly zero, or when a term
    drops below ``SERIES_RTOL`` relative to the running sum. Reaching the
    64-term cap without either raises :class:`SeriesConvergenceError`.
    """
    try:
        coeff = SERIES[name]
    except KeyError:
        raise ValueError(f"unknown series {name!r}; expected one of {sorted(SERIES)}") from None
    m = as_matrix(m)
    _require_square(m)
    n = m.shape[0]
    total = coeff(0) * eye(n)
    power = eye(n)
    for k in range(1, MAX_SERIES_TERMS):
        power = power @ m
        if not power.any():
            return total
        c = coeff(k)
        if c == 0.0:
            continue
        term = c * power
        total = total + term
        if np.abs(term).max() < SERIES_RTOL * (1.0 + np.abs(total).max()):
            return total
    raise SeriesConvergenceError(
        f"series {name!r} did not converge in {MAX_SERIES_TERMS} terms "
        f"(argument max-norm {np.abs(m).max():.3g})"
    )


def matrix_power(m, k: int) -> np.ndarray:
    return np.linalg.matrix_power(as_matrix(m), k)


# -- q-deformed arithmetic --------------------------------------------------------


def q_number(x, q) -> complex:
    """[x]_q = (q^x - q^-x) / (q - 1/q)."""
    q = complex(q)
    if q == 1 or q == -1:
        raise QArithmeticError(f"[x]_q has a pole at q = {q}")
    if isinstance(x, (int, np.integer)):
        qx = q ** int(x)
    else:
        qx = cmath.exp(complex(x) * cmath.log(q))
    return (qx - 1 / qx) / (q - 1 / q)


def q_number_eta(x, eta) -> complex:
    """[x]_q with q = exp(eta); non-integer powers go through eta, not a logarithm."""
    eta = complex(eta)
    denom = cmath.sinh(eta)
    if denom == 0:
        raise QArithmeticError(f"[x]_q has a pole at eta = {eta}")
    return cmath.sinh(complex(x) * eta) / denom


def q_factorial(n: int, q) -> complex:
    if n < 0:
        raise ValueError("q_factorial needs a nonnegative integer")
    out = 1 + 0j
    for k in range(1, n + 1):
        out *= q_number(k, q)
    return out


# -- comparison -------------------------------------------------------------------


@dataclass(frozen=True)
class Residual:
    max_abs: float
    relative: float
    tol: float
    passed: bool = field(compare=False)

    def __bool__(self) -> bool:
        return self.passed


def approx_eq(a, b, tol: float) -> Residual:
    """Compare two matrices; pass iff ||a - b||_F <= tol * max(1, ||a||_F, ||b||_F)."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    diff = a - b
    scale = max(1.0, float(np.linalg.norm(a)), float(np.linalg.norm(b)))
    fro = float(np.linalg.norm(diff))
    max_abs = float(np.abs(diff).max()) if diff.size else 0.0
    rel = fro / scale
    return Residual(max_abs=max_abs, relative=rel, tol=tol, passed=rel <= tol)

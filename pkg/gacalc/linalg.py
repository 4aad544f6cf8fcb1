# gacalc/linalg.py
"""
Dense linear algebra over the scalar tower.

Rational matrices go through sympy's domain matrices over QQ (exact row
reduction); float matrices go through numpy. Matrices are plain nested lists
of scalars so that the callers never see either backend.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import config
from .scalars import Scalar, ScalarMode, is_zero, one, zero

log = logging.getLogger(__name__)

Matrix = List[List[Scalar]]


# --- Helpers ---
def identity(n: int, mode: ScalarMode) -> Matrix:
    return [[one(mode) if i == j else zero(mode) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Scalar]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    """Matrix product; object arrays keep Fractions exact."""
    if not a or not b:
        return [[] for _ in a]
    dtype = object if isinstance(a[0][0], Fraction) or isinstance(b[0][0], Fraction) else float
    return (np.array(a, dtype=dtype) @ np.array(b, dtype=dtype)).tolist()


def matvec(a: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> List[Scalar]:
    return [sum(row[j] * v[j] for j in range(len(v))) for row in a]


def _to_domain(a: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    rows = [[QQ(int(x.numerator), int(x.denominator)) for x in row] for row in a]
    return DomainMatrix(rows, (len(rows), ncols), QQ)


def _rref_rational(a: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[Matrix, Tuple[int, ...]]:
    if not a:
        return [], ()
    reduced, pivots = _to_domain(a, ncols).rref()
    dense = reduced.to_Matrix()
    rows = [[Fraction(int(dense[i, j].p), int(dense[i, j].q)) for j in range(ncols)]
            for i in range(dense.rows)]
    return rows, tuple(pivots)


def _tolerance(a: np.ndarray) -> float:
    scale = float(np.max(np.abs(a))) if a.size else 1.0
    return config.FLOAT_TOLERANCE * max(1.0, scale) * max(a.shape or (1,))


# --- Public API ---
def rank(a: Sequence[Sequence[Scalar]], ncols: int, mode: ScalarMode) -> int:
    if not a or ncols == 0:
        return 0
    if mode is ScalarMode.RATIONAL:
        return len(_rref_rational(a, ncols)[1])
    arr = np.array(a, dtype=float)
    return int(np.linalg.matrix_rank(arr, tol=_tolerance(arr)))


def nullspace(a: Sequence[Sequence[Scalar]], ncols: int, mode: ScalarMode) -> Matrix:
    """Basis of {x : a x = 0}, one vector per row of the result."""
    if not a:
        return identity(ncols, mode)
    if mode is ScalarMode.RATIONAL:
        reduced, pivots = _rref_rational(a, ncols)
        basis = []
        for free in (c for c in range(ncols) if c not in pivots):
            vec = [Fraction(0)] * ncols
            vec[free] = Fraction(1)
            for row, pivot in enumerate(pivots):
                vec[pivot] = -reduced[row][free]
            basis.append(vec)
        return basis
    arr = np.array(a, dtype=float)
    _, sing, vh = np.linalg.svd(arr)
    r = int(np.sum(sing > _tolerance(arr)))
    return vh[r:].tolist()


def solve(a: Sequence[Sequence[Scalar]], b: Sequence[Scalar], ncols: int,
          mode: ScalarMode) -> Optional[List[Scalar]]:
    """
    One solution of a x = b, or None when the system is inconsistent.

    Free variables are set to zero in rational mode. In float mode a square
    full-rank system is solved directly; anything else gets the least-squares
    solution after checking the residual.
    """
    if not a:
        return [zero(mode)] * ncols
    if mode is ScalarMode.RATIONAL:
        augmented = [list(row) + [b[i]] for i, row in enumerate(a)]
        reduced, pivots = _rref_rational(augmented, ncols + 1)
        if ncols in pivots:
            return None
        x = [Fraction(0)] * ncols
        for row, pivot in enumerate(pivots):
            x[pivot] = reduced[row][ncols]
        return x
    arr = np.array(a, dtype=float)
    rhs = np.array(b, dtype=float)
    if arr.shape == (ncols, ncols) and rank(a, ncols, mode) == ncols:
        return np.linalg.solve(arr, rhs).tolist()
    x, *_ = np.linalg.lstsq(arr, rhs, rcond=None)
    if np.max(np.abs(arr @ x - rhs), initial=0.0) > _tolerance(np.column_stack([arr, rhs])):
        return None
    return x.tolist()


def inverse(a: Sequence[Sequence[Scalar]], mode: ScalarMode) -> Optional[Matrix]:
    """Inverse of a square matrix, or None when it is singular."""
    n = len(a)
    if mode is ScalarMode.RATIONAL:
        augmented = [list(row) + ident for row, ident in zip(a, identity(n, mode))]
        reduced, pivots = _rref_rational(augmented, 2 * n)
        if n and pivots[:n] != tuple(range(n)):
            return None
        return [row[n:] for row in reduced]
    arr = np.array(a, dtype=float)
    if rank(a, n, mode) < n:
        return None
    return np.linalg.inv(arr).tolist()


def in_span(rows: Sequence[Sequence[Scalar]], v: Sequence[Scalar], mode: ScalarMode) -> bool:
    """True iff v is a linear combination of the given row vectors."""
    if not rows:
        return all(is_zero(x) for x in v)
    return solve(transpose(rows), v, len(rows), mode) is not None

# gacalc/structure.py
"""
Units and bivectors of a degenerate Clifford algebra.

The unit group splits as a semidirect product of the units of Cl(W) with
1 + Cl(W)e0, and the bivectors split as the semidirect sum of Cl^2(W) with
the abelian ideal W*e0. For PGA3 the latter is se(3).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import linalg
from .clifford_core import (
    CliffordAlgebra,
    Multivector,
    blade_indices,
    blade_name,
    geometric_product,
    grade_involution,
    left_mul_matrix,
)
from .errors import BasisNotSpanning, NotAUnit, NotGrade2
from .playfair import decompose, to_twisted_pair
from .quadratic_space import Complement, QuadraticForm, Vector
from .scalars import coerce, is_zero, one, zero

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitDecomposition:
    """A unit written as r * (1 + tail * e0) with r a unit of Cl(W)."""
    r: Multivector
    tail: Multivector

    def reconstruct(self) -> Multivector:
        alg = self.r.algebra
        return geometric_product(self.r, alg.one() + geometric_product(self.tail, alg.e0()))


@dataclass(frozen=True)
class BivectorSplit:
    """B = rotational + w*e0 with rotational in Cl^2(W) and w in W (working coordinates)."""
    rotational: Multivector
    ideal_vector: Vector

    def ideal_part(self) -> Multivector:
        """w as a grade-1 element of the algebra."""
        return self.rotational.algebra.vector_from_working(self.ideal_vector.coords)

    def reconstruct(self) -> Multivector:
        alg = self.rotational.algebra
        return self.rotational + geometric_product(self.ideal_part(), alg.e0())


# --- Units ---
def inverse(x: Multivector) -> Multivector:
    """Two-sided inverse through the left-regular representation."""
    alg = x.algebra
    matrix = left_mul_matrix(x).to_matrix()
    rhs = [one(alg.mode)] + [zero(alg.mode)] * (alg.blade_count - 1)
    solution = linalg.solve(matrix, rhs, alg.blade_count, alg.mode)
    if solution is None:
        raise NotAUnit(f"{x} is not invertible")
    z = alg.multivector(dict(enumerate(solution)))
    unit = alg.one()
    if not (geometric_product(x, z).isclose(unit) and geometric_product(z, x).isclose(unit)):
        raise NotAUnit(f"{x} has no two-sided inverse")
    return z


def is_unit(x: Multivector) -> bool:
    try:
        inverse(x)
    except NotAUnit:
        return False
    return True


def unit_decompose(x: Multivector, comp: Complement) -> UnitDecomposition:
    pair = to_twisted_pair(x, comp)
    try:
        r_inv = inverse(pair.r)
    except NotAUnit:
        raise NotAUnit(f"{x} is not a unit", detail=f"r-component {pair.r} not a unit") from None
    return UnitDecomposition(pair.r, geometric_product(r_inv, pair.m))


def tau_action(r: Multivector, m: Multivector) -> Multivector:
    """tau(r): m -> r m alpha(r^-1)."""
    return geometric_product(geometric_product(r, m), grade_involution(inverse(r)))


def compose_units(u1: UnitDecomposition, u2: UnitDecomposition) -> UnitDecomposition:
    """(r1, t1)(r2, t2) = (r1 r2, tau(r2^-1)(t1) + t2)."""
    return UnitDecomposition(
        geometric_product(u1.r, u2.r),
        tau_action(inverse(u2.r), u1.tail) + u2.tail,
    )


# --- Bivectors ---
def commutator(b: Multivector, x: Multivector) -> Multivector:
    """B x X = 1/2 (BX - XB)."""
    half = coerce(Fraction(1, 2), b.algebra.mode)
    return (geometric_product(b, x) - geometric_product(x, b)).scale(half)


def lie_tau(b: Multivector, w: Multivector) -> Multivector:
    """tau(B): w -> B x w, the action of Cl^2(W) on W."""
    return commutator(b, w)


def _require_grade2(b: Multivector):
    if not b.is_homogeneous(2):
        raise NotGrade2(f"{b} is not a bivector")


def simple_bivector_decomposition(b: Multivector) -> List[Tuple[Multivector, Multivector]]:
    """
    Pairs (u, v) of orthogonal vectors with b = sum of u*v.

    Works on the antisymmetric coefficient matrix A of b: the rows x, y of
    the first nonzero entry A_ij give b = (x ^ y) / A_ij + (rest), and the
    rest has two fewer nonzero rows.
    """
    _require_grade2(b)
    alg = b.algebra
    n, metric = alg.dim, alg.metric
    a = [[zero(alg.mode)] * n for _ in range(n)]
    for mask, c in b.terms.items():
        i, j = blade_indices(mask)
        a[i][j], a[j][i] = c, -c

    def form(u, v):
        return sum((metric[t] * u[t] * v[t] for t in range(n)), zero(alg.mode))

    pairs = []
    while True:
        entry = next(((i, j) for i in range(n) for j in range(n) if not is_zero(a[i][j])), None)
        if entry is None:
            break
        i, j = entry
        pivot = a[i][j]
        x, y = list(a[i]), list(a[j])
        for r in range(n):
            for c in range(n):
                a[r][c] -= (x[r] * y[c] - y[r] * x[c]) / pivot
        u, v = [-t / pivot for t in y], x
        if not is_zero(form(u, u)):
            t = form(u, v) / form(u, u)
            v = [vc - t * uc for uc, vc in zip(u, v)]
        elif not is_zero(form(v, v)):
            t = form(u, v) / form(v, v)
            u = [uc - t * vc for uc, vc in zip(u, v)]
        elif not is_zero(form(u, v)):
            u = [uc + vc for uc, vc in zip(u, v)]
            t = form(u, v) / form(u, u)
            v = [vc - t * uc for uc, vc in zip(u, v)]
        pairs.append((alg.vector(u), alg.vector(v)))
    log.debug("split %s into %d simple bivectors", b, len(pairs))
    return pairs


def bivector_split(b: Multivector, comp: Complement) -> BivectorSplit:
    """B = Cl(pi_W)(B) + w*e0 with w in W."""
    _require_grade2(b)
    split = decompose(b, comp)
    w = comp.form.diagonalization.from_diagonal(split.ideal_cofactor.vector_coords())
    return BivectorSplit(split.at_w, Vector(tuple(w)))


def lie_structure_table(basis: Sequence[Multivector]) -> List[List[List]]:
    """
    table[i][j][k]: coefficient of basis[k] in basis[i] x basis[j].

    The basis must be a basis of Cl^2(V).
    """
    if not basis:
        raise BasisNotSpanning("empty basis")
    alg = basis[0].algebra
    for b in basis:
        _require_grade2(b)
    blades = alg.blades_of_grade(2)
    columns = [[b.coefficient(m) for b in basis] for m in blades]
    if len(basis) != len(blades) or linalg.rank(columns, len(basis), alg.mode) != len(blades):
        raise BasisNotSpanning(f"{len(basis)} bivectors do not form a basis of the {len(blades)}-dimensional Cl^2")
    table = []
    for bi in basis:
        row = []
        for bj in basis:
            bracket = commutator(bi, bj)
            coords = linalg.solve(columns, [bracket.coefficient(m) for m in blades], len(basis), alg.mode)
            row.append(coords)
        table.append(row)
    return table


# --- se(3) correspondence for PGA3 ---
# PGA3 bivector basis (as generator index pairs), its sign against the se(3)
# generator it corresponds to, and that generator's name.
PGA3_SE3_CORRESPONDENCE: Tuple[Tuple[Tuple[int, int], int, str], ...] = (
    ((2, 3), -1, "L1"),
    ((3, 1), -1, "L2"),
    ((1, 2), -1, "L3"),
    ((0, 1), 1, "T1"),
    ((0, 2), 1, "T2"),
    ((0, 3), 1, "T3"),
)


def pga3_bivector_basis(algebra: CliffordAlgebra) -> List[Multivector]:
    return [algebra.blade(list(pair)) for pair, _, _ in PGA3_SE3_CORRESPONDENCE]


def _hat(v: np.ndarray) -> np.ndarray:
    return np.array([[0.0, -v[2], v[1]],
                     [v[2], 0.0, -v[0]],
                     [-v[1], v[0], 0.0]])


def se3_generators() -> List[np.ndarray]:
    """L1..L3 (rotations) then T1..T3 (translations) as 4x4 matrices."""
    gens = []
    for k in range(3):
        m = np.zeros((4, 4))
        m[:3, :3] = _hat(np.eye(3)[k])
        gens.append(m)
    for k in range(3):
        m = np.zeros((4, 4))
        m[k, 3] = 1.0
        gens.append(m)
    return gens


def se3_oracle_table() -> np.ndarray:
    """Structure constants of se(3) from matrix commutators, shape (6, 6, 6)."""
    gens = se3_generators()
    flat = np.stack([g.ravel() for g in gens], axis=1)
    table = np.zeros((6, 6, 6))
    for i, x in enumerate(gens):
        for j, y in enumerate(gens):
            coords, *_ = np.linalg.lstsq(flat, (x @ y - y @ x).ravel(), rcond=None)
            table[i, j] = coords
    return np.rint(table)


def pga3_table_in_se3_signs(table: Sequence[Sequence[Sequence]]) -> np.ndarray:
    """Rewrites a PGA3 structure table against the signed se(3) generators."""
    signs = [s for _, s, _ in PGA3_SE3_CORRESPONDENCE]
    out = np.zeros((6, 6, 6))
    for i in range(6):
        for j in range(6):
            for k in range(6):
                out[i, j, k] = signs[i] * signs[j] * signs[k] * float(table[i][j][k])
    return out


@dataclass(frozen=True)
class LieTable:
    """Structure constants of Cl^2(V) on a labelled bivector basis."""
    labels: Tuple[str, ...]
    basis: Tuple[Multivector, ...]
    coefficients: List[List[List]]
    matches_se3: Optional[bool] = None

    def bracket(self, i: int, j: int) -> Multivector:
        alg = self.basis[0].algebra
        total = alg.zero()
        for c, b in zip(self.coefficients[i][j], self.basis):
            total = total + b.scale(c)
        return total


def bivector_lie_table(algebra: CliffordAlgebra) -> LieTable:
    """
    The bracket table of the bivectors. PGA3 uses the se(3)-adapted basis
    and reports whether the constants agree with the matrix oracle; other
    algebras use the grade-2 blades in mask order.
    """
    is_pga3 = algebra.form == QuadraticForm.pga3(algebra.mode)
    if is_pga3:
        basis = pga3_bivector_basis(algebra)
        labels = [f"e{i}{j}" for (i, j), _, _ in PGA3_SE3_CORRESPONDENCE]
    else:
        masks = algebra.blades_of_grade(2)
        basis = [algebra.working_blade(blade_indices(m)) for m in masks]
        labels = [blade_name(m) for m in masks]
    table = lie_structure_table(basis)
    matches = None
    if is_pga3:
        matches = bool(np.allclose(pga3_table_in_se3_signs(table), se3_oracle_table()))
    return LieTable(tuple(labels), tuple(basis), table, matches)

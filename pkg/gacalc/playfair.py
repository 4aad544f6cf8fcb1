# gacalc/playfair.py
"""
Playfair decomposition of multivectors with respect to a complement W of
the degenerate line F*e0.

Every X in Cl(V) splits uniquely as X = Cl(pi_W)(X) + Y*e0 with both
Cl(pi_W)(X) and Y in Cl(W). The pieces give the derivation D_W, the
square-zero ideal Cl(V)e0, the quotient algebra Cl(V/F e0) and the
twisted trivial extension Cl(W) x_alpha Cl(W).
"""

import logging
import weakref
from dataclasses import dataclass
from typing import Sequence, Tuple

from .clifford_core import (
    CliffordAlgebra,
    LinearEndo,
    Multivector,
    blade_indices,
    clifford_extend,
    even_part,
    geometric_product,
    grade_involution,
    odd_part,
)
from .errors import (
    AlgebraMismatch,
    DoesNotFixE0,
    ImageNotInIdeal,
    NotADerivation,
    NotInSubalgebra,
    ZeroScale,
)
from .quadratic_space import Complement, Subspace, Vector, projection_matrix_diagonal
from .scalars import coerce, is_zero, one, zero

log = logging.getLogger(__name__)

_projection_cache: "weakref.WeakKeyDictionary[Complement, LinearEndo]" = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class PlayfairSplit:
    at_w: Multivector
    ideal_cofactor: Multivector

    def at_infinity(self) -> Multivector:
        """The ideal part Y*e0."""
        return geometric_product(self.ideal_cofactor, self.ideal_cofactor.algebra.e0())

    def reconstruct(self) -> Multivector:
        return self.at_w + self.at_infinity()


@dataclass(frozen=True)
class TwistedPair:
    r: Multivector
    m: Multivector

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedPair):
            return NotImplemented
        return self.r == other.r and self.m == other.m

    def isclose(self, other: "TwistedPair") -> bool:
        return self.r.isclose(other.r) and self.m.isclose(other.m)


# --- Helpers ---
def algebra_of(comp: Complement) -> CliffordAlgebra:
    return CliffordAlgebra.of(comp.form)


def _check(x: Multivector, comp: Complement):
    if x.algebra.form != comp.form:
        raise AlgebraMismatch(f"multivector in {x.algebra.name}, complement of {comp.form.name}")


def _e0_mask(algebra: CliffordAlgebra) -> int:
    if algebra.e0_index is None:
        raise AlgebraMismatch(f"algebra {algebra.name} has no degenerate generator")
    return 1 << algebra.e0_index


def strip_e0_right(x: Multivector) -> Multivector:
    """
    Some Z with Z*e0 = x, for x in the ideal: each blade containing e0 is
    rewritten as (sign) * (blade without e0) * e0.
    """
    k = x.algebra.e0_index
    bit = _e0_mask(x.algebra)
    out = {}
    for mask, c in x.terms.items():
        if not mask & bit:
            raise ImageNotInIdeal(f"{x} is not a multiple of e0")
        later = (mask >> (k + 1)).bit_count()
        out[mask ^ bit] = -c if later & 1 else c
    return Multivector(x.algebra, out)


# --- Projections ---
def projection_endo(comp: Complement) -> LinearEndo:
    """Cl(pi_W), cached per complement."""
    endo = _projection_cache.get(comp)
    if endo is None:
        endo = clifford_extend(projection_matrix_diagonal(comp), algebra_of(comp))
        _projection_cache[comp] = endo
        log.debug("built Cl(pi_W) for a complement of %s", comp.form.name)
    return endo


def derivation_endo(comp: Complement) -> LinearEndo:
    """D_W = id - Cl(pi_W)."""
    alg = algebra_of(comp)
    return LinearEndo.identity(alg) - projection_endo(comp)


def decompose(x: Multivector, comp: Complement) -> PlayfairSplit:
    _check(x, comp)
    proj = projection_endo(comp)
    at_w = proj(x)
    cofactor = proj(strip_e0_right(x - at_w))
    return PlayfairSplit(at_w, cofactor)


def derivation_d(comp: Complement, x: Multivector) -> Multivector:
    _check(x, comp)
    return x - projection_endo(comp)(x)


def in_subalgebra(x: Multivector, comp: Complement) -> bool:
    """True iff x lies in Cl(W), the image of the idempotent Cl(pi_W)."""
    _check(x, comp)
    return projection_endo(comp)(x).isclose(x)


# --- The ideal and the quotient ---
def is_in_ideal(x: Multivector) -> bool:
    bit = _e0_mask(x.algebra)
    return all(mask & bit for mask in x.terms)


def quotient_project(x: Multivector) -> Multivector:
    """Cl(pi): drop blades containing e0 and renumber the rest into Cl(V/F e0)."""
    alg = x.algebra
    k = alg.e0_index
    bit = _e0_mask(alg)
    low = bit - 1
    out = {}
    for mask, c in x.terms.items():
        if mask & bit:
            continue
        out[(mask & low) | ((mask >> (k + 1)) << k)] = c
    return Multivector(alg.quotient(), out)


def section_lift(q: Multivector, comp: Complement) -> Multivector:
    """Cl(omega_W): the canonical isomorphism Cl(V/F e0) -> Cl(W)."""
    alg = algebra_of(comp)
    quotient = alg.quotient()
    if q.algebra.form != quotient.form:
        raise AlgebraMismatch(f"{q.algebra.name} is not the quotient of {alg.name}")
    k, n = alg.e0_index, alg.dim
    omega = [[zero(alg.mode)] * (n - 1) for _ in range(n)]
    for col, i in enumerate(i for i in range(n) if i != k):
        omega[i][col] = one(alg.mode)
        omega[k][col] = comp.offsets[i]
    return clifford_extend(omega, quotient, target=alg)(q)


# --- Twisted trivial extension ---
def to_twisted_pair(x: Multivector, comp: Complement) -> TwistedPair:
    split = decompose(x, comp)
    return TwistedPair(split.at_w, split.ideal_cofactor)


def from_twisted_pair(p: TwistedPair, comp: Complement) -> Multivector:
    for part in (p.r, p.m):
        if not in_subalgebra(part, comp):
            raise NotInSubalgebra(f"{part} is not in Cl(W)")
    return p.r + geometric_product(p.m, algebra_of(comp).e0())


def twisted_mul(p: TwistedPair, q: TwistedPair) -> TwistedPair:
    """(r1, m1)(r2, m2) = (r1 r2, r1 m2 + m1 alpha(r2))."""
    return TwistedPair(
        geometric_product(p.r, q.r),
        geometric_product(p.r, q.m) + geometric_product(p.m, grade_involution(q.r)),
    )


def right_mul_e0(x: Multivector, lam=1, comp: Complement = None) -> Multivector:
    """lam * x * e0; injective on Cl(W) with image the whole ideal."""
    lam = coerce(lam, x.algebra.mode)
    if is_zero(lam):
        raise ZeroScale("right multiplication by 0*e0 is not injective")
    if comp is not None and not in_subalgebra(x, comp):
        raise NotInSubalgebra(f"{x} is not in Cl(W)")
    return geometric_product(x, x.algebra.e0()).scale(lam)


# --- Derivations ---
def extend_derivation(algebra: CliffordAlgebra, images: Sequence[Multivector]) -> LinearEndo:
    """The derivation with d(e_i) = images[i], extended by the Leibniz rule."""
    if len(images) != algebra.dim:
        raise NotADerivation(f"{len(images)} generator images for a {algebra.dim}-dimensional algebra")
    for i, img in enumerate(images):
        if img.algebra.form != algebra.form:
            raise AlgebraMismatch(f"image of e{i} lives in {img.algebra.name}")
    gens = [algebra.generator(i) for i in range(algebra.dim)]
    columns = []
    for mask in range(algebra.blade_count):
        factors = blade_indices(mask)
        total = algebra.zero()
        for t, i in enumerate(factors):
            term = algebra.one()
            for s, j in enumerate(factors):
                term = geometric_product(term, images[j] if s == t else gens[j])
            total = total + term
        columns.append(total.terms)
    return LinearEndo(algebra, columns)


def _leibniz_failure(d: LinearEndo):
    alg = d.source
    blades = list(alg.all_blades())
    for a in blades:
        da = d(a)
        for b in blades:
            lhs = d(geometric_product(a, b))
            rhs = geometric_product(a, d(b)) + geometric_product(da, b)
            if not lhs.isclose(rhs):
                return a, b
    return None


def complement_from_derivation(d: LinearEndo) -> Complement:
    """
    The complement W with D_W = d: W is spanned by e_i - d(e_i) for the
    generators other than e0.
    """
    alg = d.source
    e0 = alg.e0()
    if not d(e0).isclose(e0):
        raise DoesNotFixE0(f"d(e0) = {d(e0)}")
    for mask, col in enumerate(d.columns):
        if not is_in_ideal(Multivector(alg, col)):
            raise ImageNotInIdeal(f"image of blade {mask} is {Multivector(alg, col)}")
    for i in range(alg.dim):
        if not d(alg.generator(i)).is_homogeneous(1):
            raise NotADerivation(f"d(e{i}) is not a vector")
    failure = _leibniz_failure(d)
    if failure is not None:
        raise NotADerivation(f"Leibniz rule fails on ({failure[0]}, {failure[1]})")
    diag = alg.form.diagonalization
    basis = []
    for i in (i for i in range(alg.dim) if i != alg.e0_index):
        coords = (alg.generator(i) - d(alg.generator(i))).vector_coords()
        basis.append(Vector(tuple(diag.from_diagonal(coords))))
    return Complement(alg.form, Subspace(tuple(basis)))


# --- Even and odd parts ---
def even_odd_split(x: Multivector) -> Tuple[Multivector, Multivector]:
    return even_part(x), odd_part(x)


def even_odd_twisted(x: Multivector, comp: Complement) -> Tuple[TwistedPair, TwistedPair]:
    """
    Twisted pairs of the even and odd parts of x. The even part maps to
    (even, odd) in Cl+(W) x Cl-(W); the odd part to (odd, even).
    """
    even, odd = even_odd_split(x)
    return to_twisted_pair(even, comp), to_twisted_pair(odd, comp)

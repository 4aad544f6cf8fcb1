# gacalc/verification.py
"""
Executable checks of the algebraic laws the library is built on.

Each suite is a function registered under a short name. It draws seeded
random rational data, asserts one law (or a small family of laws), and
returns how many individual checks it made. `run_suites` turns the outcome
into `LemmaReport`s for the `check` command and the HTTP surface.
"""

import logging
import math
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from fuzzywuzzy import process

from . import config, linalg
from .clifford_core import (
    CliffordAlgebra,
    LinearEndo,
    Multivector,
    clifford_extend,
    grade_involution,
    grade_of,
    wedge,
)
from .errors import GacalcError, NotAUnit, NotRadical, ZeroScale
from .models import LemmaReport
from .parser import evaluate, parse
from .pga3d import (
    Plane,
    PointP,
    are_parallel,
    dihedral_angle,
    incidence_shift,
    incident,
    magnitude,
    parallel_through,
    point_complement,
)
from .playfair import (
    complement_from_derivation,
    decompose,
    derivation_d,
    derivation_endo,
    even_odd_split,
    even_odd_twisted,
    extend_derivation,
    from_twisted_pair,
    in_subalgebra,
    is_in_ideal,
    projection_endo,
    quotient_project,
    right_mul_e0,
    section_lift,
    to_twisted_pair,
    twisted_mul,
)
from .quadratic_space import (
    Complement,
    QuadraticForm,
    Subspace,
    Vector,
    bilinear,
    canonical_section,
    playfair_project_vector,
    quotient_form,
    quotient_project_vector,
)
from .scalars import ScalarMode, is_zero
from .structure import (
    bivector_split,
    commutator,
    compose_units,
    inverse,
    is_unit,
    lie_structure_table,
    lie_tau,
    pga3_bivector_basis,
    pga3_table_in_se3_signs,
    se3_oracle_table,
    simple_bivector_decomposition,
    unit_decompose,
)

log = logging.getLogger(__name__)

RATIONAL = ScalarMode.RATIONAL


class LemmaViolation(AssertionError):
    """Raised inside a suite when a law fails on a concrete input."""


def expect(condition: bool, detail: str):
    if not condition:
        raise LemmaViolation(detail)


# --- Random data ---
@dataclass
class CheckContext:
    rng: np.random.Generator
    scale: float = 1.0

    def count(self, n: int) -> int:
        return max(1, int(round(n * self.scale)))

    def scalar(self, nonzero: bool = False) -> Fraction:
        while True:
            value = Fraction(int(self.rng.integers(-5, 6)), int(self.rng.integers(1, 4)))
            if value or not nonzero:
                return value

    def multivector(self, alg: CliffordAlgebra, density: float = 0.5) -> Multivector:
        terms = {m: self.scalar(nonzero=True) for m in range(alg.blade_count) if self.rng.random() < density}
        return alg.multivector(terms)

    def homogeneous(self, alg: CliffordAlgebra, k: int) -> Multivector:
        return alg.multivector({m: self.scalar() for m in alg.blades_of_grade(k)})

    def point(self) -> PointP:
        return PointP(self.scalar(), self.scalar(), self.scalar())

    def plane(self) -> Plane:
        while True:
            coords = [self.scalar() for _ in range(4)]
            if any(coords[1:]):
                return Plane(Vector(tuple(coords)))

    def in_w(self, comp: Complement) -> Multivector:
        return projection_endo(comp)(self.multivector(CliffordAlgebra.of(comp.form)))

    def w_vector(self, comp: Complement) -> Multivector:
        alg = CliffordAlgebra.of(comp.form)
        total = alg.zero()
        for w in comp.subspace.basis:
            total = total + alg.vector_from_working(w.coords).scale(self.scalar())
        return total

    def unit(self, comp: Complement) -> Multivector:
        """A product of nonnull vectors of W times (1 + m e0)."""
        alg = CliffordAlgebra.of(comp.form)
        r = alg.one()
        for _ in range(int(self.rng.integers(1, 4))):
            while True:
                v = self.w_vector(comp)
                if not is_zero((v * v).scalar_part()):
                    break
            r = r * v
        return r * (alg.one() + self.in_w(comp) * alg.e0())


# Gram matrices whose blade literals differ from the diagonal generators.
NON_DIAGONAL_GRAMS = (
    ((0, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (0, 0, 0, 1)),
    ((0, 0, 0, 0), (0, 2, 1, 0), (0, 1, -1, 3), (0, 0, 3, 1)),
    ((1, 1, 0), (1, 1, 0), (0, 0, 2)),
)


def pga3_algebra() -> CliffordAlgebra:
    return CliffordAlgebra.of(QuadraticForm.pga3(RATIONAL))


def signatures(max_dim: int) -> List[Tuple[int, int, int]]:
    return [(p, q, r) for p, q, r in product(range(max_dim + 1), repeat=3) if 1 <= p + q + r <= max_dim]


def rewrite_word(word: Sequence[int], metric: Sequence) -> Tuple[Fraction, int]:
    """
    Reduces a word in basis vectors by the Clifford relations: adjacent
    unequal letters swap with a sign, equal ones contract to their square.
    """
    letters = list(word)
    coeff = Fraction(1)
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(letters) - 1:
            if letters[i] == letters[i + 1]:
                coeff *= metric[letters[i]]
                del letters[i:i + 2]
                changed = True
            elif letters[i] > letters[i + 1]:
                letters[i], letters[i + 1] = letters[i + 1], letters[i]
                coeff = -coeff
                changed = True
                i += 1
            else:
                i += 1
    mask = 0
    for i in letters:
        mask |= 1 << i
    return coeff, mask


# --- Registry ---
@dataclass(frozen=True)
class Suite:
    name: str
    statement: str
    run: Callable[[CheckContext], int]


SUITES: Dict[str, Suite] = {}


def suite(name: str, statement: str):
    def register(fn: Callable[[CheckContext], int]):
        SUITES[name] = Suite(name, statement, fn)
        return fn
    return register


def suggest_suite(name: str) -> Optional[str]:
    guess = process.extractOne(name, list(SUITES))
    return guess[0] if guess and guess[1] >= 60 else None


# --- Clifford core ---
@suite("oracle-product", "blade table product equals the tensor-rewrite oracle (p+q+r <= 4)")
def check_oracle_product(ctx: CheckContext) -> int:
    checks = 0
    for p, q, r in signatures(4):
        alg = CliffordAlgebra.of(QuadraticForm.from_signature(p, q, r, RATIONAL))
        for a in range(alg.blade_count):
            for b in range(alg.blade_count):
                word = [i for i in range(alg.dim) if a >> i & 1] + [i for i in range(alg.dim) if b >> i & 1]
                expected = rewrite_word(word, alg.metric)
                got = alg.blade_product(a, b)
                if expected[0] == 0:
                    expect(got[0] == 0, f"{p},{q},{r}: blades {a}*{b} should vanish")
                else:
                    expect(got == expected, f"{p},{q},{r}: blades {a}*{b} gave {got}, oracle {expected}")
                checks += 1
    return checks


@suite("anticommutation", "e_i e_j + e_j e_i = 2 B(e_i, e_j) for every signature up to dimension 6 and for non-diagonal grams")
def check_anticommutation(ctx: CheckContext) -> int:
    checks = 0
    for p, q, r in signatures(6):
        form = QuadraticForm.from_signature(p, q, r, RATIONAL)
        alg = CliffordAlgebra.of(form)
        for i in range(alg.dim):
            for j in range(alg.dim):
                ei, ej = alg.generator(i), alg.generator(j)
                lhs = ei * ej + ej * ei
                b = bilinear(form, Vector.basis(alg.dim, i, RATIONAL).coords, Vector.basis(alg.dim, j, RATIONAL).coords)
                expect(lhs == alg.scalar(2 * b), f"{p},{q},{r}: e{i}, e{j}")
                checks += 1
    for rows in NON_DIAGONAL_GRAMS:
        form = QuadraticForm.from_gram(rows, RATIONAL)
        alg = CliffordAlgebra.of(form)
        for i in range(alg.dim):
            for j in range(alg.dim):
                ei, ej = alg.working_blade([i]), alg.working_blade([j])
                b = bilinear(form, Vector.basis(alg.dim, i, RATIONAL).coords, Vector.basis(alg.dim, j, RATIONAL).coords)
                expect(ei * ej + ej * ei == alg.scalar(2 * b), f"gram {form.name}: e{i}, e{j}")
                checks += 1
    return checks


@suite("associativity", "(xy)z = x(yz) on all PGA3 blade triples and random multivectors")
def check_associativity(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    blades = list(alg.all_blades())
    checks = 0
    for x in blades:
        for y in blades:
            xy = x * y
            for z in blades:
                expect((xy * z) == x * (y * z), f"blades {x}, {y}, {z}")
                checks += 1
    for _ in range(ctx.count(200)):
        x, y, z = (ctx.multivector(alg) for _ in range(3))
        expect((x * y) * z == x * (y * z), f"{x}; {y}; {z}")
        checks += 1
    return checks


@suite("commuting-e0", "e0 X = alpha(X) e0")
def check_commuting_e0(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    e0 = alg.e0()
    samples = list(alg.all_blades()) + [ctx.multivector(alg) for _ in range(ctx.count(1000))]
    for x in samples:
        expect(e0 * x == grade_involution(x) * e0, f"fails for {x}")
    return len(samples)


@suite("grade-involution", "alpha is an involutive automorphism and alpha = Cl(-id)")
def check_grade_involution(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    minus_id = [[-1 if i == j else 0 for j in range(alg.dim)] for i in range(alg.dim)]
    expect(clifford_extend(minus_id, alg) == LinearEndo.from_function(alg, grade_involution),
           "Cl(-id) differs from the grade involution")
    checks = 1
    for _ in range(ctx.count(300)):
        x, y = ctx.multivector(alg), ctx.multivector(alg)
        expect(grade_involution(x * y) == grade_involution(x) * grade_involution(y), f"{x}; {y}")
        expect(grade_involution(grade_involution(x)) == x, f"alpha^2 on {x}")
        checks += 2
    return checks


@suite("wedge", "the wedge is associative and graded-anticommutative on blades")
def check_wedge(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    blades = list(alg.all_blades())
    checks = 0
    for a in blades:
        for b in blades:
            ga, gb = grade_of(next(iter(a.terms))), grade_of(next(iter(b.terms)))
            sign = -1 if (ga * gb) & 1 else 1
            expect(wedge(a, b) == wedge(b, a).scale(sign), f"{a} ^ {b}")
            for c in blades:
                expect(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)), f"({a} ^ {b}) ^ {c}")
                checks += 1
    return checks


# --- Quadratic spaces ---
@suite("playfair-vector", "v = w + lam e0 with w in W, unique, and pi o omega_W = id")
def check_playfair_vector(ctx: CheckContext) -> int:
    checks = 0
    for _ in range(ctx.count(20)):
        comp = point_complement(ctx.point())
        form = comp.form
        section = canonical_section(comp)
        for i in range(form.dim - 1):
            column = [row[i] for row in section]
            image = quotient_project_vector(column, comp)
            expect(list(image.coords) == [1 if j == i else 0 for j in range(form.dim - 1)],
                   f"pi(omega(class {i})) = {image.coords}")
            expect(comp.contains(column), "section leaves W")
            checks += 2
        e0 = form.e0()
        for _ in range(10):
            v = Vector(tuple(ctx.scalar() for _ in range(form.dim)))
            w, lam = playfair_project_vector(v.coords, comp)
            expect(w + e0.scale(lam) == v, f"reconstruction of {v.coords}")
            expect(comp.contains(w.coords), f"{w.coords} not in W")
            rows = comp.subspace.rows() + [list(e0.coords)]
            coords = linalg.solve(linalg.transpose(rows), list(v.coords), len(rows), RATIONAL)
            expect(coords is not None and coords[-1] == lam, f"lambda not unique for {v.coords}")
            checks += 3
    return checks


@suite("quotient-form", "B descends to V/U exactly when U is radical")
def check_quotient_form(ctx: CheckContext) -> int:
    form = QuadraticForm.pga3(RATIONAL)
    quotient = quotient_form(form, Subspace((form.e0(),)))
    expect(quotient.gram == tuple(tuple(1 if i == j else 0 for j in range(3)) for i in range(3)),
           f"PGA3 / R e0 has gram {quotient.gram}")
    expect(quotient_form(form, Subspace()) == form, "trivial quotient changed the form")
    try:
        quotient_form(form, Subspace((Vector.basis(4, 1, RATIONAL),)))
        expect(False, "U = R e1 was accepted")
    except NotRadical as exc:
        u, w = exc.witness
        expect(not is_zero(bilinear(form, u, w)), "witness does not pair nonzero")
    checks = 3
    for _ in range(ctx.count(20)):
        u, v = ([ctx.scalar() for _ in range(4)] for _ in range(2))
        shifted = [u[0] + ctx.scalar()] + u[1:]
        expect(bilinear(form, shifted, v) == bilinear(form, u, v), "B depends on the e0 coordinate")
        expect(bilinear(form, u, v) == bilinear(form, v, u), "B is not symmetric")
        checks += 2
    return checks


# --- Playfair decomposition ---
@suite("playfair-decomposition", "X = Cl(pi_W)(X) + Y e0 with both parts in Cl(W), uniquely")
def check_playfair_decomposition(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    for _ in range(20):
        comp = point_complement(ctx.point())
        for _ in range(ctx.count(200)):
            x = ctx.multivector(alg)
            split = decompose(x, comp)
            expect(split.reconstruct() == x, f"reconstruction of {x}")
            expect(in_subalgebra(split.at_w, comp), f"at_w of {x} leaves Cl(W)")
            expect(in_subalgebra(split.ideal_cofactor, comp), f"cofactor of {x} leaves Cl(W)")
            again = decompose(split.at_w, comp)
            expect(not again.ideal_cofactor and again.at_w == split.at_w, f"split of {x} not unique")
            checks += 4
    return checks


@suite("derivation", "D_W is a derivation, fixes e0, lands in the ideal and is idempotent")
def check_derivation(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    comps = [Complement.coordinate(alg.form)] + [point_complement(ctx.point()) for _ in range(4)]
    for comp in comps:
        d = derivation_endo(comp)
        expect(d.compose(d) == d, "D_W is not idempotent")
        expect(derivation_d(comp, alg.e0()) == alg.e0(), "D_W(e0) != e0")
        checks += 2
        for _ in range(ctx.count(1000) // len(comps)):
            x, y = ctx.multivector(alg), ctx.multivector(alg)
            dx, dy = derivation_d(comp, x), derivation_d(comp, y)
            expect(derivation_d(comp, x * y) == x * dy + dx * y, f"Leibniz on {x}; {y}")
            expect(is_in_ideal(dx), f"D_W({x}) outside the ideal")
            checks += 2
    return checks


@suite("twisted-extension", "phi(xy) = phi(x) phi(y) in Cl(W) x_alpha Cl(W); the ideal squares to zero")
def check_twisted_extension(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    e0 = alg.e0()
    checks = 0
    for a in alg.all_blades():
        for b in alg.all_blades():
            expect((a * e0) * (b * e0) == alg.zero(), f"({a} e0)({b} e0) != 0")
            checks += 1
    comps = [Complement.coordinate(alg.form)] + [point_complement(ctx.point()) for _ in range(4)]
    for n in range(ctx.count(1000)):
        comp = comps[n % len(comps)]
        x, y = ctx.multivector(alg), ctx.multivector(alg)
        lhs = to_twisted_pair(x * y, comp)
        expect(lhs == twisted_mul(to_twisted_pair(x, comp), to_twisted_pair(y, comp)), f"phi on {x}; {y}")
        expect(from_twisted_pair(to_twisted_pair(x, comp), comp) == x, f"round trip of {x}")
        checks += 2
    return checks


@suite("quotient-algebra", "Cl(pi) is multiplicative with kernel Cl(V)e0, and Cl(W) = Cl(V/F e0)")
def check_quotient_algebra(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    for x in alg.all_blades():
        expect(is_in_ideal(x) == (not quotient_project(x)), f"kernel test on {x}")
        checks += 1
    comp = point_complement(ctx.point())
    for _ in range(ctx.count(500)):
        x, y = ctx.multivector(alg), ctx.multivector(alg)
        expect(is_in_ideal(x) == (not quotient_project(x)), f"kernel test on {x}")
        shifted = x * alg.e0() + ctx.multivector(alg)
        expect(is_in_ideal(shifted) == (not quotient_project(shifted)), f"kernel test on {shifted}")
        expect(quotient_project(x * y) == quotient_project(x) * quotient_project(y), f"{x}; {y}")
        ideal = x * alg.e0()
        expect(is_in_ideal(ideal) and not quotient_project(ideal), f"{ideal} escapes the kernel")
        expect(derivation_d(comp, ideal) == ideal, f"D_W does not fix {ideal}")
        expect(quotient_project(decompose(x, comp).at_w) == quotient_project(x), f"pi_P changes the class of {x}")
        q = quotient_project(x)
        expect(quotient_project(section_lift(q, comp)) == q, f"section lift of {q}")
        checks += 7
    return checks


@suite("complement-derivation", "complements of F e0 correspond one-to-one with derivations fixing e0")
def check_complement_derivation(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    for _ in range(20):
        comp = point_complement(ctx.point())
        d = derivation_endo(comp)
        back = complement_from_derivation(d)
        expect(all(comp.contains(w.coords) for w in back.subspace.basis), "recovered W differs")
        expect(derivation_endo(back) == d, "D of the recovered complement differs")
        images = [alg.e0() if i == alg.e0_index else alg.e0().scale(ctx.scalar()) for i in range(alg.dim)]
        d2 = extend_derivation(alg, images)
        expect(derivation_endo(complement_from_derivation(d2)) == d2, "derivation round trip")
        checks += 3
    return checks


@suite("right-mul-e0", "x -> lam x e0 is a linear isomorphism from Cl(W) onto Cl(V)e0")
def check_right_mul_e0(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    for _ in range(5):
        comp = point_complement(ctx.point())
        lam = ctx.scalar(nonzero=True)
        w_basis = [projection_endo(comp)(b) for b in alg.all_blades() if not next(iter(b.terms)) & (1 << alg.e0_index)]
        images = [right_mul_e0(w, lam, comp) for w in w_basis]
        columns = [[img.coefficient(m) for img in images] for m in range(alg.blade_count)]
        expect(linalg.rank(columns, len(images), RATIONAL) == alg.blade_count // 2, "not injective onto the ideal")
        expect(all(is_in_ideal(img) for img in images), "image leaves the ideal")
        checks += 2
    try:
        right_mul_e0(alg.one(), 0)
        expect(False, "lambda = 0 was accepted")
    except ZeroScale:
        checks += 1
    return checks


@suite("even-odd", "Cl+(V) = Cl+(W) x Cl-(W) untwisted and Cl-(V) = Cl-(W) + Cl+(W)")
def check_even_odd(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    expect(sum(1 for m in range(alg.blade_count) if grade_of(m) % 2 == 0) == 8, "even dimension is not 8")
    checks = 1
    comp = point_complement(ctx.point())
    for _ in range(ctx.count(200)):
        x = ctx.multivector(alg)
        even, odd = even_odd_split(x)
        expect(even + odd == x and grade_involution(even) == even, f"parity split of {x}")
        pe, po = even_odd_twisted(x, comp)
        expect(pe.r == grade_involution(pe.r) and pe.m == -grade_involution(pe.m), "even part is not (even, odd)")
        expect(po.r == -grade_involution(po.r) and po.m == grade_involution(po.m), "odd part is not (odd, even)")
        y = even_odd_split(ctx.multivector(alg))[0]
        py = to_twisted_pair(y, comp)
        product_pair = twisted_mul(pe, py)
        expect(product_pair.m == pe.r * py.m + pe.m * py.r, "twist is not trivial on even elements")
        checks += 4
    return checks


# --- Structure ---
@suite("units", "x is a unit iff its Cl(W) component is; units compose as a semidirect product")
def check_units(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    comps = [point_complement(ctx.point()) for _ in range(5)]
    decomposed = []
    for n in range(ctx.count(500)):
        comp = comps[n % len(comps)]
        x = ctx.unit(comp)
        u = unit_decompose(x, comp)
        expect(u.reconstruct() == x, f"unit {x} does not reconstruct")
        expect(in_subalgebra(u.r, comp) and in_subalgebra(u.tail, comp), "components leave Cl(W)")
        decomposed.append((comp, x, u))
        checks += 2
    for n in range(ctx.count(100)):
        comp = comps[n % len(comps)]
        bad = ctx.multivector(alg) * alg.e0()
        expect(not is_unit(bad), f"ideal element {bad} is invertible")
        w = projection_endo(comp)(alg.generator((n % 3) + 1))
        non_unit = alg.one() + w + ctx.in_w(comp) * alg.e0()
        expect(not is_unit(non_unit), f"{non_unit} is invertible")
        try:
            unit_decompose(non_unit, comp)
            expect(False, f"{non_unit} decomposed as a unit")
        except NotAUnit as exc:
            expect(exc.detail is not None and "r-component" in exc.detail, "missing r-component detail")
        checks += 3
    for n in range(ctx.count(500)):
        comp, x1, u1 = decomposed[n % len(decomposed)]
        x2 = ctx.unit(comp)
        u2 = unit_decompose(x2, comp)
        composed = compose_units(u1, u2)
        direct = unit_decompose(x1 * x2, comp)
        expect(composed.r == direct.r and composed.tail == direct.tail, "group law fails")
        expect(inverse(x1) * x1 == alg.one(), f"inverse of {x1}")
        checks += 2
    return checks


@suite("bivector-split", "Cl2(V) = Cl2(W) x W e0; B x X keeps grades; bivectors are sums of orthogonal products")
def check_bivector_split(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    for b_mask in alg.blades_of_grade(2):
        b = alg.multivector({b_mask: 1})
        for x in alg.all_blades():
            k = grade_of(next(iter(x.terms)))
            expect(commutator(b, x).is_homogeneous(k), f"{b} x {x} leaves grade {k}")
            checks += 1
    for _ in range(ctx.count(200)):
        comp = point_complement(ctx.point())
        b = ctx.homogeneous(alg, 2)
        split = bivector_split(b, comp)
        expect(split.reconstruct() == b, f"split of {b}")
        expect(comp.contains(split.ideal_vector) and in_subalgebra(split.ideal_part(), comp),
               "ideal vector is not in W")
        rot = split.rotational
        w = ctx.w_vector(comp)
        expect(commutator(rot, w * alg.e0()) == lie_tau(rot, w) * alg.e0(), "B x W e0 != tau(B)(W) e0")
        pairs = simple_bivector_decomposition(b)
        expect(len(pairs) <= alg.dim // 2, f"{len(pairs)} simple parts for {b}")
        total = alg.zero()
        for u, v in pairs:
            expect(is_zero((u * v + v * u).scalar_part()), f"{u}, {v} not orthogonal")
            total = total + u * v
        expect(total == b, f"simple parts of {b} sum to {total}")
        checks += 5
    return checks


@suite("lie-algebra", "Jacobi identity, tau homomorphism and the abelian ideal W e0")
def check_lie_algebra(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    for _ in range(ctx.count(200)):
        b1, b2, b3 = (ctx.homogeneous(alg, 2) for _ in range(3))
        jacobi = commutator(b1, commutator(b2, b3)) + commutator(b2, commutator(b3, b1)) + commutator(b3, commutator(b1, b2))
        expect(not jacobi, f"Jacobi fails: {b1}; {b2}; {b3}")
        expect(commutator(b1, b2) == -commutator(b2, b1), "bracket not antisymmetric")
        checks += 2
    comp = point_complement(ctx.point())
    for _ in range(ctx.count(100)):
        b1 = projection_endo(comp)(ctx.homogeneous(alg, 2))
        b2 = projection_endo(comp)(ctx.homogeneous(alg, 2))
        w = ctx.w_vector(comp)
        lhs = lie_tau(commutator(b1, b2), w)
        rhs = lie_tau(b1, lie_tau(b2, w)) - lie_tau(b2, lie_tau(b1, w))
        expect(lhs == rhs, "tau is not a Lie homomorphism")
        checks += 1
    ideal = [alg.blade([0, i]) for i in (1, 2, 3)]
    for a in ideal:
        for b in ideal:
            expect(not commutator(a, b), f"{a} x {b} != 0")
            checks += 1
    return checks


@suite("se3", "the PGA3 bivector brackets are the structure constants of se(3)")
def check_se3(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    table = lie_structure_table(pga3_bivector_basis(alg))
    ours = pga3_table_in_se3_signs(table)
    oracle = se3_oracle_table()
    mismatch = np.argwhere(ours != oracle)
    expect(mismatch.size == 0, f"structure constants differ at {mismatch[:3].tolist()}")
    return int(oracle.size)


# --- PGA3 geometry ---
@suite("playfair-axiom", "through a point passes exactly one plane parallel to a given plane")
def check_playfair_axiom(ctx: CheckContext) -> int:
    checks = 0
    for _ in range(ctx.count(100)):
        p, plane = ctx.point(), ctx.plane()
        par = parallel_through(p, plane)
        expect(incident(p, par), f"{par.v.coords} misses {p}")
        expect(are_parallel(par, plane) and par.normal == plane.normal, "parallel class or orientation changed")
        lam = incidence_shift(p, plane)
        expect(par.v == plane.v + Vector.basis(4, 0, RATIONAL).scale(lam), "plane is not the lam-shift")
        mu = ctx.scalar(nonzero=True)
        other = Plane(plane.v + Vector.basis(4, 0, RATIONAL).scale(lam + mu))
        expect(not incident(p, other), "a second shift also passes through the point")
        s = ctx.scalar(nonzero=True)
        expect(parallel_through(p, plane.scale(s)).v == par.v.scale(s), "not homogeneous")
        checks += 5
    return checks


@suite("cosine-law", "B(u, v) = |u||v| cos(theta) against the Euclidean normal vectors")
def check_cosine_law(ctx: CheckContext) -> int:
    checks = 0
    for _ in range(ctx.count(100)):
        u, v = ctx.plane(), ctx.plane()
        nu = np.array([float(c) for c in u.normal])
        nv = np.array([float(c) for c in v.normal])
        cos = float(np.clip(nu @ nv / (np.linalg.norm(nu) * np.linalg.norm(nv)), -1.0, 1.0))
        expect(math.isclose(math.cos(dihedral_angle(u, v)), cos, abs_tol=1e-12),
               f"angle between {u.v.coords} and {v.v.coords}")
        mu = ctx.scalar()
        shifted = Plane(u.v + Vector.basis(4, 0, RATIONAL).scale(mu))
        expect(magnitude(shifted) == magnitude(u), "magnitude depends on the e0 coordinate")
        checks += 2
    return checks


# --- Expression language ---
@suite("parse-roundtrip", "parse(print(m)) evaluates to m; products share one left-associative tier")
def check_parse_roundtrip(ctx: CheckContext) -> int:
    alg = pga3_algebra()
    checks = 0
    for _ in range(ctx.count(1000)):
        m = ctx.multivector(alg)
        expect(evaluate(parse(m.to_text(), alg.dim), alg) == m, f"round trip of {m.to_text()}")
        checks += 1
    for rows in NON_DIAGONAL_GRAMS:
        gram_alg = CliffordAlgebra.of(QuadraticForm.from_gram(rows, RATIONAL))
        for _ in range(ctx.count(100)):
            m = ctx.multivector(gram_alg)
            expect(evaluate(parse(m.to_text(), gram_alg.dim), gram_alg) == m, f"round trip of {m.to_text()}")
            checks += 1
    fixtures = [("e1 + e2*e3", "e1 + (e2*e3)"), ("e1*e2^e3", "(e1*e2)^e3"),
                ("e12 x e1 * e2", "(e12 x e1) * e2"), ("-e1*e2", "(-e1)*e2")]
    for left, right in fixtures:
        expect(evaluate(parse(left), alg) == evaluate(parse(right), alg), f"{left} != {right}")
        checks += 1
    return checks


# --- Runner ---
def run_suite(name: str, seed: Optional[int] = None, scale: Optional[float] = None) -> LemmaReport:
    entry = SUITES[name]
    seed = config.CHECK_SEED if seed is None else seed
    offset = list(SUITES).index(name)
    ctx = CheckContext(np.random.default_rng(seed + offset), config.CHECK_SCALE if scale is None else scale)
    start = time.perf_counter()
    try:
        checks = entry.run(ctx)
        report = LemmaReport(suite=name, statement=entry.statement, passed=True, checked=checks,
                             seconds=time.perf_counter() - start)
    except (LemmaViolation, GacalcError) as exc:
        report = LemmaReport(suite=name, statement=entry.statement, passed=False,
                             detail=f"{type(exc).__name__}: {exc}", seconds=time.perf_counter() - start)
    log.debug("suite %s finished in %.2fs", name, report.seconds)
    return report


def run_suites(names: Sequence[str], seed: Optional[int] = None, scale: Optional[float] = None) -> List[LemmaReport]:
    return [run_suite(name, seed, scale) for name in names]

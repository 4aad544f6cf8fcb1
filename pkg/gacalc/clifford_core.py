# gacalc/clifford_core.py
"""
Blade-indexed multivector arithmetic over a diagonalized quadratic form.

A blade is a bitmask over the algebra generators (bit i set means e_i is a
factor, factors in ascending order). Multivectors are sparse maps from
blade masks to nonzero scalars.
"""

import logging
from functools import lru_cache
from numbers import Number
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .errors import AlgebraMismatch, DimensionMismatch, GradeOutOfRange, NotAnIsometry, UnknownBlade
from .quadratic_space import QuadraticForm, is_isometry
from .scalars import Scalar, ScalarMode, coerce, format_scalar, is_close, is_zero, one, zero

log = logging.getLogger(__name__)

# Product tables up to this dimension are built when the algebra is created;
# larger algebras compute blade products on the fly.
EAGER_TABLE_DIM = 6

# Algebras kept alive by CliffordAlgebra.of.
ALGEBRA_CACHE_SIZE = 64


def reorder_sign(a: int, b: int) -> int:
    """Sign of the permutation sorting the factors of blade a followed by blade b."""
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return -1 if swaps & 1 else 1


def grade_of(mask: int) -> int:
    return mask.bit_count()


def blade_indices(mask: int) -> List[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


def blade_name(mask: int) -> str:
    indices = blade_indices(mask)
    if not indices:
        return "1"
    if any(i > 9 for i in indices):
        return "e" + "_".join(str(i) for i in indices)
    return "e" + "".join(str(i) for i in indices)


# --- Algebra ---
class CliffordAlgebra:
    """
    Cl(V) for a quadratic form, generated by its diagonal basis.

    Multivectors are stored on blades of the diagonal basis. Blade literals
    and printed forms use the gram matrix's own (working) basis; for a
    non-diagonal gram the two are related by the exterior powers of the
    cached change of basis P and its inverse.
    """

    def __init__(self, form: QuadraticForm):
        self.form = form
        self.mode: ScalarMode = form.mode
        self.dim: int = form.dim
        self.metric: Tuple[Scalar, ...] = form.diagonalization.entries
        self.e0_index: Optional[int] = form.e0_index
        self.blade_count = 1 << self.dim
        # column i: coordinates of working e_i in the diagonal basis, and back
        self._to_diagonal: Optional[Tuple[Tuple[Scalar, ...], ...]] = None
        self._to_working: Optional[Tuple[Tuple[Scalar, ...], ...]] = None
        if not form.is_diagonal:
            diag = form.diagonalization
            self._to_diagonal = tuple(zip(*diag.inverse))
            self._to_working = tuple(zip(*diag.change_of_basis))
        self._table: Optional[Tuple[Tuple[Tuple[Scalar, int], ...], ...]] = None
        if self.dim <= EAGER_TABLE_DIM:
            self._table = tuple(tuple(self._compute_blade_product(a, b) for b in range(self.blade_count))
                                for a in range(self.blade_count))
            log.debug("built %d-entry product table for %s", self.blade_count ** 2, form.name)

    @classmethod
    def of(cls, form: QuadraticForm) -> "CliffordAlgebra":
        return _algebra_for(form, form.label)

    @property
    def name(self) -> str:
        return self.form.name

    def __repr__(self) -> str:
        return f"CliffordAlgebra({self.name})"

    # --- Blade table ---
    def blade_product(self, a: int, b: int) -> Tuple[Scalar, int]:
        """(coefficient, mask) of the geometric product of blades a and b."""
        if self._table is not None:
            return self._table[a][b]
        return self._compute_blade_product(a, b)

    def _compute_blade_product(self, a: int, b: int) -> Tuple[Scalar, int]:
        coeff = one(self.mode) * reorder_sign(a, b)
        for i in blade_indices(a & b):
            coeff *= self.metric[i]
        return coeff, a ^ b

    def blade_wedge(self, a: int, b: int) -> int:
        return 0 if a & b else reorder_sign(a, b)

    # --- Element constructors ---
    def multivector(self, terms: Optional[Dict[int, Scalar]] = None) -> "Multivector":
        return Multivector(self, terms or {})

    def scalar(self, value) -> "Multivector":
        return Multivector(self, {0: coerce(value, self.mode)})

    def zero(self) -> "Multivector":
        return Multivector(self, {})

    def one(self) -> "Multivector":
        return self.scalar(1)

    def blade(self, indices: Sequence[int], coeff=1) -> "Multivector":
        mask = 0
        for i in indices:
            if not 0 <= i < self.dim:
                raise UnknownBlade(f"index {i} out of range for a {self.dim}-dimensional algebra")
            mask |= 1 << i
        sign = reorder_sign_of_sequence(list(indices))
        if sign == 0:
            raise UnknownBlade(f"repeated index in blade {list(indices)}")
        return Multivector(self, {mask: coerce(coeff, self.mode) * sign})

    def generator(self, i: int) -> "Multivector":
        return self.blade([i])

    def e0(self) -> "Multivector":
        if self.e0_index is None:
            raise UnknownBlade(f"algebra {self.name} has no degenerate generator")
        return self.generator(self.e0_index)

    def vector(self, coords: Sequence) -> "Multivector":
        """Grade-1 element from coordinates in the generator (diagonal) basis."""
        if len(coords) != self.dim:
            raise DimensionMismatch(f"vector of length {len(coords)} in a {self.dim}-dimensional algebra")
        return Multivector(self, {1 << i: coerce(c, self.mode) for i, c in enumerate(coords)})

    def vector_from_working(self, coords: Sequence) -> "Multivector":
        """Grade-1 element from coordinates in the gram matrix's own basis."""
        values = [coerce(c, self.mode) for c in coords]
        return self.vector(self.form.diagonalization.to_diagonal(values))

    # --- Working basis ---
    def working_blade(self, indices: Sequence[int], coeff=1) -> "Multivector":
        """e_i1 ^ ... ^ e_ik over the gram matrix's own basis vectors."""
        blade = self.blade(indices, coeff)
        if self._to_diagonal is None:
            return blade
        return Multivector(self, exterior_map(blade.terms, self._to_diagonal))

    def working_terms(self, x: "Multivector") -> Dict[int, Scalar]:
        """Coefficients of x on the wedge blades of the working basis."""
        if self._to_working is None:
            return dict(x.terms)
        return {m: c for m, c in exterior_map(x.terms, self._to_working).items() if not is_zero(c)}

    def blades_of_grade(self, k: int) -> List[int]:
        return [m for m in range(self.blade_count) if grade_of(m) == k]

    def all_blades(self) -> Iterator["Multivector"]:
        for mask in range(self.blade_count):
            yield Multivector(self, {mask: one(self.mode)})

    def quotient(self) -> "CliffordAlgebra":
        """Cl(V/F e0): the diagonal metric with the e0 entry removed."""
        if self.e0_index is None:
            raise UnknownBlade(f"algebra {self.name} has no degenerate generator")
        entries = [d for i, d in enumerate(self.metric) if i != self.e0_index]
        n = len(entries)
        rows = [[entries[i] if i == j else zero(self.mode) for j in range(n)] for i in range(n)]
        return CliffordAlgebra.of(QuadraticForm(tuple(map(tuple, rows)), self.mode))

    @property
    def diagonal_form(self) -> QuadraticForm:
        """The form in generator coordinates (the form itself when already diagonal)."""
        if self.form.is_diagonal:
            return self.form
        n = self.dim
        rows = [[self.metric[i] if i == j else zero(self.mode) for j in range(n)] for i in range(n)]
        return QuadraticForm(tuple(map(tuple, rows)), self.mode, self.form.e0_choice)


@lru_cache(maxsize=ALGEBRA_CACHE_SIZE)
def _algebra_for(form: QuadraticForm, label: Optional[str]) -> CliffordAlgebra:
    # label is part of the key: equal forms may print under different names
    return CliffordAlgebra(form)


def exterior_map(terms: Dict[int, Scalar], columns: Sequence[Sequence[Scalar]]) -> Dict[int, Scalar]:
    """
    Applies the exterior power of a linear map to blade coefficients.

    columns[i] holds the coordinates of the image of generator i; the blade
    e_i1...e_ik goes to the wedge of the images of its factors. Entries that
    cancel are left in as zeros.
    """
    images = [{1 << r: c for r, c in enumerate(col) if not is_zero(c)} for col in columns]
    out: Dict[int, Scalar] = {}
    for mask, coeff in terms.items():
        acc: Dict[int, Scalar] = {0: coeff}
        for i in blade_indices(mask):
            step: Dict[int, Scalar] = {}
            for a, ca in acc.items():
                for b, cb in images[i].items():
                    if not a & b:
                        step[a | b] = step.get(a | b, 0) + reorder_sign(a, b) * ca * cb
            acc = step
        for m, c in acc.items():
            out[m] = out.get(m, 0) + c
    return out


def reorder_sign_of_sequence(indices: List[int]) -> int:
    """Sign sorting a list of distinct indices into ascending order; 0 on repeats."""
    if len(set(indices)) != len(indices):
        return 0
    inversions = sum(1 for i in range(len(indices)) for j in range(i + 1, len(indices))
                     if indices[i] > indices[j])
    return -1 if inversions & 1 else 1


# --- Multivectors ---
class Multivector:
    """Sparse element of Cl(V); no zero coefficient is ever stored."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: CliffordAlgebra, terms: Dict[int, Scalar]):
        self.algebra = algebra
        self.terms: Dict[int, Scalar] = {m: c for m, c in terms.items() if not is_zero(c)}
        for m in self.terms:
            if m >= algebra.blade_count:
                raise UnknownBlade(f"blade {blade_name(m)} out of range for {algebra.name}")

    # --- Inspection ---
    def __iter__(self) -> Iterator[Tuple[int, Scalar]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, mask: int) -> Scalar:
        return self.terms.get(mask, zero(self.algebra.mode))

    def scalar_part(self) -> Scalar:
        return self.coefficient(0)

    def grades(self) -> List[int]:
        return sorted({grade_of(m) for m in self.terms})

    def is_homogeneous(self, k: int) -> bool:
        return all(grade_of(m) == k for m in self.terms)

    def vector_coords(self) -> List[Scalar]:
        """Generator coordinates of the grade-1 part."""
        return [self.coefficient(1 << i) for i in range(self.algebra.dim)]

    # --- Arithmetic ---
    def _check(self, other: "Multivector"):
        if self.algebra is not other.algebra and self.algebra.form != other.algebra.form:
            raise AlgebraMismatch(f"{self.algebra.name} and {other.algebra.name} do not match")

    def _lift(self, other) -> "Multivector":
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if isinstance(other, Number):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Multivector(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return Multivector(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, s) -> "Multivector":
        s = coerce(s, self.algebra.mode)
        return Multivector(self.algebra, {m: s * c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Number):
            return self.scale(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return geometric_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, Number):
            return self.scale(other)
        return NotImplemented

    def __xor__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if isinstance(other, Number):
            other = self.algebra.scalar(other)
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.algebra.form == other.algebra.form and self.terms == other.terms

    __hash__ = None

    def isclose(self, other: "Multivector") -> bool:
        self._check(other)
        masks = set(self.terms) | set(other.terms)
        return all(is_close(self.coefficient(m), other.coefficient(m)) for m in masks)

    def grade(self, k: int) -> "Multivector":
        return grade_part(self, k)

    def involute(self) -> "Multivector":
        return grade_involution(self)

    # --- Text and JSON forms ---
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for i, (mask, c) in enumerate(sorted(self.algebra.working_terms(self).items())):
            negative = c < 0
            mag = -c if negative else c
            if mask == 0:
                body = format_scalar(mag)
            elif mag == 1:
                body = blade_name(mask)
            else:
                body = f"{format_scalar(mag)}*{blade_name(mask)}"
            if i == 0:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append(("- " if negative else "+ ") + body)
        return " ".join(parts)

    def to_json(self) -> dict:
        terms = sorted(self.algebra.working_terms(self).items())
        return {"terms": {blade_name(m): format_scalar(c) for m, c in terms},
                "algebra": self.algebra.name}

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Multivector({self.to_text()!r}, algebra={self.algebra.name!r})"


# --- Products and involutions ---
def geometric_product(x: Multivector, y: Multivector) -> Multivector:
    x._check(y)
    alg = x.algebra
    out: Dict[int, Scalar] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            coeff, mask = alg.blade_product(a, b)
            if coeff:
                out[mask] = out.get(mask, 0) + coeff * ca * cb
    return Multivector(alg, out)


def wedge(x: Multivector, y: Multivector) -> Multivector:
    x._check(y)
    alg = x.algebra
    out: Dict[int, Scalar] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            sign = alg.blade_wedge(a, b)
            if sign:
                out[a | b] = out.get(a | b, 0) + sign * ca * cb
    return Multivector(alg, out)


def grade_part(x: Multivector, k: int) -> Multivector:
    if not 0 <= k <= x.algebra.dim:
        raise GradeOutOfRange(f"grade {k} outside 0..{x.algebra.dim}")
    return Multivector(x.algebra, {m: c for m, c in x.terms.items() if grade_of(m) == k})


def grade_involution(x: Multivector) -> Multivector:
    return Multivector(x.algebra, {m: -c if grade_of(m) & 1 else c for m, c in x.terms.items()})


def even_part(x: Multivector) -> Multivector:
    return Multivector(x.algebra, {m: c for m, c in x.terms.items() if not grade_of(m) & 1})


def odd_part(x: Multivector) -> Multivector:
    return Multivector(x.algebra, {m: c for m, c in x.terms.items() if grade_of(m) & 1})


# --- Linear maps on Cl(V) ---
class LinearEndo:
    """
    A linear map on Cl(V) (or between two Clifford algebras), stored
    column-sparse: `columns[b]` is the image of blade b.
    """

    def __init__(self, source: CliffordAlgebra, columns: Sequence[Dict[int, Scalar]],
                 target: Optional[CliffordAlgebra] = None):
        self.source = source
        self.target = target or source
        if len(columns) != source.blade_count:
            raise DimensionMismatch(f"{len(columns)} columns for {source.blade_count} blades")
        self.columns: Tuple[Dict[int, Scalar], ...] = tuple(
            {m: c for m, c in col.items() if not is_zero(c)} for col in columns)

    @classmethod
    def from_function(cls, source: CliffordAlgebra, fn, target: Optional[CliffordAlgebra] = None) -> "LinearEndo":
        cols = [fn(Multivector(source, {b: one(source.mode)})).terms for b in range(source.blade_count)]
        return cls(source, cols, target)

    @classmethod
    def identity(cls, algebra: CliffordAlgebra) -> "LinearEndo":
        return cls(algebra, [{b: one(algebra.mode)} for b in range(algebra.blade_count)])

    @classmethod
    def zero_map(cls, algebra: CliffordAlgebra) -> "LinearEndo":
        return cls(algebra, [{} for _ in range(algebra.blade_count)])

    def apply(self, x: Multivector) -> Multivector:
        if x.algebra.form != self.source.form:
            raise AlgebraMismatch(f"map on {self.source.name} applied to {x.algebra.name}")
        out: Dict[int, Scalar] = {}
        for b, c in x.terms.items():
            for m, v in self.columns[b].items():
                out[m] = out.get(m, 0) + v * c
        return Multivector(self.target, out)

    __call__ = apply

    def compose(self, other: "LinearEndo") -> "LinearEndo":
        """self o other."""
        cols = [self.apply(Multivector(other.target, col)).terms for col in other.columns]
        return LinearEndo(other.source, cols, self.target)

    def __matmul__(self, other: "LinearEndo") -> "LinearEndo":
        return self.compose(other)

    def _combine(self, other: "LinearEndo", sign: int) -> "LinearEndo":
        if self.source.form != other.source.form or self.target.form != other.target.form:
            raise AlgebraMismatch("linear maps between different algebras")
        cols = []
        for a, b in zip(self.columns, other.columns):
            col = dict(a)
            for m, c in b.items():
                col[m] = col.get(m, 0) + sign * c
            cols.append(col)
        return LinearEndo(self.source, cols, self.target)

    def __add__(self, other: "LinearEndo") -> "LinearEndo":
        return self._combine(other, 1)

    def __sub__(self, other: "LinearEndo") -> "LinearEndo":
        return self._combine(other, -1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinearEndo):
            return NotImplemented
        return (self.source.form == other.source.form and self.target.form == other.target.form
                and self.columns == other.columns)

    __hash__ = None

    def is_zero(self) -> bool:
        return not any(self.columns)

    def to_matrix(self) -> List[List[Scalar]]:
        """Dense matrix with M[i][j] the coefficient of blade i in the image of blade j."""
        z = zero(self.source.mode)
        rows = [[z] * self.source.blade_count for _ in range(self.target.blade_count)]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                rows[i][j] = c
        return rows


def left_mul_matrix(x: Multivector) -> LinearEndo:
    """The left-regular representation y -> x*y."""
    return LinearEndo.from_function(x.algebra, lambda y: geometric_product(x, y))


def right_mul_matrix(x: Multivector) -> LinearEndo:
    return LinearEndo.from_function(x.algebra, lambda y: geometric_product(y, x))


def clifford_extend(f: Sequence[Sequence[Scalar]], algebra: CliffordAlgebra,
                    target: Optional[CliffordAlgebra] = None) -> LinearEndo:
    """
    Cl(f): the unital algebra map with Cl(f)(v) = f(v) on vectors.

    f is a target.dim x algebra.dim matrix in generator coordinates and must
    be an isometry of the diagonal forms.
    """
    target = target or algebra
    f = [[coerce(c, algebra.mode) for c in row] for row in f]
    if not is_isometry(f, algebra.diagonal_form, target.diagonal_form):
        raise NotAnIsometry("the map does not preserve the bilinear form")
    images = [target.vector([f[r][i] for r in range(target.dim)]) for i in range(algebra.dim)]
    blade_images: List[Multivector] = [target.one()]
    for mask in range(1, algebra.blade_count):
        top = mask.bit_length() - 1
        blade_images.append(geometric_product(blade_images[mask ^ (1 << top)], images[top]))
    return LinearEndo(algebra, [img.terms for img in blade_images], target)

# gacalc/quadratic_space.py
"""
Quadratic spaces: symmetric bilinear forms, radicals, quotients and the
vector-level Playfair projection onto a complement of the degenerate line.

Coordinates come in two flavours. *Working* coordinates are the ones the
gram matrix is written in. *Diagonal* coordinates refer to the basis that
diagonalizes the form; that basis is what the Clifford algebra uses as its
generators. For a gram matrix that is already diagonal the two coincide.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from . import config, linalg
from .errors import ConfigError, DimensionMismatch, InvalidComplement, NotRadical
from .scalars import Scalar, ScalarMode, coerce, is_close, is_zero, one, zero

log = logging.getLogger(__name__)


# --- Value types ---
@dataclass(frozen=True)
class Vector:
    coords: Tuple[Scalar, ...]

    @classmethod
    def of(cls, values: Sequence, mode: ScalarMode) -> "Vector":
        return cls(tuple(coerce(v, mode) for v in values))

    @classmethod
    def basis(cls, dim: int, index: int, mode: ScalarMode) -> "Vector":
        return cls(tuple(one(mode) if i == index else zero(mode) for i in range(dim)))

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __add__(self, other: "Vector") -> "Vector":
        _check_length(self, len(other))
        return Vector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        _check_length(self, len(other))
        return Vector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vector":
        return Vector(tuple(-a for a in self.coords))

    def scale(self, s: Scalar) -> "Vector":
        return Vector(tuple(s * a for a in self.coords))

    def is_zero(self) -> bool:
        return all(is_zero(a) for a in self.coords)

    def isclose(self, other: "Vector") -> bool:
        return len(self) == len(other) and all(is_close(a, b) for a, b in zip(self, other))


@dataclass(frozen=True)
class Subspace:
    basis: Tuple[Vector, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.basis)

    def rows(self) -> List[List[Scalar]]:
        return [list(v.coords) for v in self.basis]


@dataclass(frozen=True)
class Diagonalization:
    """
    Congruence diagonalization of a gram matrix G.

    `change_of_basis` is P with Pᵀ·G·P = diag(entries); its columns are the
    diagonal basis written in working coordinates.
    """
    change_of_basis: Tuple[Tuple[Scalar, ...], ...]
    inverse: Tuple[Tuple[Scalar, ...], ...]
    entries: Tuple[Scalar, ...]
    e0_index: Optional[int]

    @property
    def signature(self) -> Tuple[int, int, int]:
        pos = sum(1 for d in self.entries if not is_zero(d) and d > 0)
        neg = sum(1 for d in self.entries if not is_zero(d) and d < 0)
        return pos, neg, len(self.entries) - pos - neg

    def to_diagonal(self, v: Sequence[Scalar]) -> List[Scalar]:
        return linalg.matvec(self.inverse, list(v))

    def from_diagonal(self, c: Sequence[Scalar]) -> List[Scalar]:
        return linalg.matvec(self.change_of_basis, list(c))


@dataclass(frozen=True)
class QuadraticForm:
    gram: Tuple[Tuple[Scalar, ...], ...]
    mode: ScalarMode = ScalarMode.RATIONAL
    # which zero diagonal entry plays e0 when the radical has dimension > 1
    e0_choice: int = 0
    label: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.gram)
        if n == 0 or n > config.MAX_DIM:
            raise ConfigError(f"dimension must be between 1 and {config.MAX_DIM}, got {n}")
        for i, row in enumerate(self.gram):
            if len(row) != n:
                raise DimensionMismatch(f"gram row {i} has length {len(row)}, expected {n}")
            for j in range(i):
                if not is_close(row[j], self.gram[j][i]):
                    raise ConfigError(f"gram matrix is not symmetric at ({i}, {j})")

    # --- Constructors ---
    @classmethod
    def from_gram(cls, rows: Sequence[Sequence], mode: ScalarMode = ScalarMode.RATIONAL,
                  e0_choice: int = 0, label: Optional[str] = None) -> "QuadraticForm":
        gram = tuple(tuple(coerce(x, mode) for x in row) for row in rows)
        return cls(gram, mode, e0_choice, label)

    @classmethod
    def from_signature(cls, p: int, q: int, r: int, mode: ScalarMode = ScalarMode.RATIONAL,
                       e0_choice: int = 0) -> "QuadraticForm":
        """Diagonal form with r zeros first, then p ones, then q minus ones."""
        if min(p, q, r) < 0:
            raise ConfigError(f"signature entries must be nonnegative: {p},{q},{r}")
        entries = [0] * r + [1] * p + [-1] * q
        n = len(entries)
        rows = [[entries[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return cls.from_gram(rows, mode, e0_choice, label=f"{p},{q},{r}")

    @classmethod
    def pga3(cls, mode: ScalarMode = ScalarMode.RATIONAL) -> "QuadraticForm":
        form = cls.from_signature(3, 0, 1, mode)
        return cls(form.gram, mode, 0, "pga3")

    # --- Properties ---
    @property
    def dim(self) -> int:
        return len(self.gram)

    @property
    def is_diagonal(self) -> bool:
        return all(is_zero(self.gram[i][j]) for i in range(self.dim) for j in range(self.dim) if i != j)

    @property
    def name(self) -> str:
        if self.label:
            return self.label
        return ",".join(str(s) for s in self.diagonalization.signature)

    @cached_property
    def diagonalization(self) -> Diagonalization:
        return diagonalize(self)

    @property
    def e0_index(self) -> Optional[int]:
        return self.diagonalization.e0_index

    def e0(self) -> Vector:
        """The degenerate generator in working coordinates."""
        k = self.e0_index
        if k is None:
            raise InvalidComplement(f"form {self.name} is nondegenerate; it has no e0")
        return Vector(tuple(row[k] for row in self.diagonalization.change_of_basis))

    def vector(self, values: Sequence) -> Vector:
        v = Vector.of(values, self.mode)
        _check_length(v, self.dim)
        return v


def _check_length(v, dim: int):
    if len(v) != dim:
        raise DimensionMismatch(f"vector of length {len(v)} where {dim} was expected")


# --- Diagonalization ---
def diagonalize(form: QuadraticForm) -> Diagonalization:
    """
    Symmetric Gaussian elimination: pivot on a nonzero diagonal entry, or
    when none remains, on an off-diagonal pair via x -> x + y. Zero entries
    are moved to the front of the basis so that e0 comes first.
    """
    n, mode = form.dim, form.mode
    if form.is_diagonal:
        entries = tuple(form.gram[i][i] for i in range(n))
        ident = tuple(tuple(row) for row in linalg.identity(n, mode))
        return Diagonalization(ident, ident, entries, _pick_e0(entries, form.e0_choice))

    a = [list(row) for row in form.gram]
    p = linalg.identity(n, mode)

    def add_multiple(target: int, source: int, factor: Scalar):
        # column op then the matching row op keeps `a` congruent
        for row in a:
            row[target] += factor * row[source]
        for c in range(n):
            a[target][c] += factor * a[source][c]
        for row in p:
            row[target] += factor * row[source]

    def swap(i: int, j: int):
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in p:
            row[i], row[j] = row[j], row[i]

    for s in range(n):
        pivot = next((i for i in range(s, n) if not is_zero(a[i][i])), None)
        if pivot is None:
            pair = next(((i, j) for i in range(s, n) for j in range(i + 1, n)
                         if not is_zero(a[i][j])), None)
            if pair is None:
                break
            log.debug("hyperbolic pivot on (%d, %d)", *pair)
            add_multiple(pair[0], pair[1], one(mode))
            pivot = pair[0]
        swap(s, pivot)
        for t in range(s + 1, n):
            if not is_zero(a[t][s]):
                add_multiple(t, s, -a[t][s] / a[s][s])

    entries = [a[i][i] for i in range(n)]
    order = [i for i in range(n) if is_zero(entries[i])] + [i for i in range(n) if not is_zero(entries[i])]
    entries = tuple(zero(mode) if is_zero(entries[i]) else entries[i] for i in order)
    change = [[row[i] for i in order] for row in p]
    inverse = linalg.inverse(change, mode)
    return Diagonalization(tuple(map(tuple, change)), tuple(map(tuple, inverse)), entries,
                           _pick_e0(entries, form.e0_choice))


def _pick_e0(entries: Sequence[Scalar], choice: int) -> Optional[int]:
    zeros = [i for i, d in enumerate(entries) if is_zero(d)]
    if not zeros:
        return None
    if not 0 <= choice < len(zeros):
        raise ConfigError(f"e0 choice {choice} out of range for a radical of dimension {len(zeros)}")
    return zeros[choice]


def signature(form: QuadraticForm) -> Tuple[int, int, int]:
    return form.diagonalization.signature


# --- Bilinear form and radical ---
def bilinear(form: QuadraticForm, u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    _check_length(u, form.dim)
    _check_length(v, form.dim)
    total = zero(form.mode)
    for i in range(form.dim):
        if is_zero(u[i]):
            continue
        for j in range(form.dim):
            total += u[i] * form.gram[i][j] * v[j]
    return total


def radical(form: QuadraticForm) -> Subspace:
    rows = [list(r) for r in form.gram]
    return Subspace(tuple(Vector(tuple(v)) for v in linalg.nullspace(rows, form.dim, form.mode)))


def quotient_form(form: QuadraticForm, u_sub: Subspace) -> QuadraticForm:
    """
    The form induced on V/U, written on a transversal of standard basis
    vectors. Raises NotRadical unless U is contained in the radical.
    """
    for u in u_sub.basis:
        _check_length(u, form.dim)
        for j in range(form.dim):
            e_j = Vector.basis(form.dim, j, form.mode)
            if not is_zero(bilinear(form, u, e_j)):
                raise NotRadical(f"B({_fmt(u)}, e{j}) != 0, so the form is not well defined on the quotient",
                                 witness=(u, e_j))
    transversal = _transversal(form, u_sub)
    gram = [[bilinear(form, a, b) for b in transversal] for a in transversal]
    return QuadraticForm(tuple(map(tuple, gram)), form.mode)


def _transversal(form: QuadraticForm, u_sub: Subspace) -> List[Vector]:
    rows = u_sub.rows()
    chosen = []
    current = linalg.rank(rows, form.dim, form.mode)
    for j in range(form.dim):
        e_j = Vector.basis(form.dim, j, form.mode)
        candidate = rows + [list(e_j.coords)]
        r = linalg.rank(candidate, form.dim, form.mode)
        if r > current:
            rows, current = candidate, r
            chosen.append(e_j)
    return chosen


def _fmt(v: Vector) -> str:
    return "(" + ", ".join(str(c) for c in v) + ")"


# --- Complements ---
@dataclass(frozen=True, eq=False)
class Complement:
    """
    A complement W of the degenerate line F·e0, given by a basis in working
    coordinates (or, for PGA, by the point whose planes it contains).
    """
    form: QuadraticForm
    subspace: Subspace
    point: Optional[Tuple[Scalar, Scalar, Scalar]] = None

    def __post_init__(self):
        n = self.form.dim
        if self.form.e0_index is None:
            raise InvalidComplement(f"form {self.form.name} has no degenerate generator")
        if self.subspace.dim != n - 1:
            raise InvalidComplement(f"a complement needs {n - 1} vectors, got {self.subspace.dim}")
        e0 = self.form.e0()
        for w in self.subspace.basis:
            _check_length(w, n)
            if not is_zero(bilinear(self.form, w, e0)):
                raise InvalidComplement(f"{_fmt(w)} is not orthogonal to e0")
        rows = self.subspace.rows() + [list(e0.coords)]
        if linalg.rank(rows, n, self.form.mode) != n:
            raise InvalidComplement("subspace together with e0 does not span V")

    @classmethod
    def coordinate(cls, form: QuadraticForm) -> "Complement":
        """W spanned by the diagonal basis vectors other than e0."""
        k = form.e0_index
        if k is None:
            raise InvalidComplement(f"form {form.name} has no degenerate generator")
        p = form.diagonalization.change_of_basis
        basis = tuple(Vector(tuple(row[i] for row in p)) for i in range(form.dim) if i != k)
        return cls(form, Subspace(basis))

    @classmethod
    def spanned_by(cls, form: QuadraticForm, vectors: Sequence[Sequence]) -> "Complement":
        return cls(form, Subspace(tuple(form.vector(v) for v in vectors)))

    @property
    def e0_index(self) -> int:
        return self.form.e0_index

    @property
    def dim(self) -> int:
        return self.form.dim

    @cached_property
    def offsets(self) -> Tuple[Scalar, ...]:
        """
        mu_i with omega_W([f_i]) = f_i + mu_i f_k in diagonal coordinates,
        one per generator (mu_k is zero).
        """
        n, k, mode = self.dim, self.e0_index, self.form.mode
        diag = self.form.diagonalization
        w_rows = [diag.to_diagonal(w.coords) for w in self.subspace.basis]
        reduced = [[row[i] for i in range(n) if i != k] for row in w_rows]
        inv = linalg.inverse(reduced, mode)
        section = linalg.matmul(inv, w_rows)
        others = [i for i in range(n) if i != k]
        mu = [zero(mode)] * n
        for row, i in zip(section, others):
            mu[i] = row[k]
        return tuple(mu)

    def contains(self, v: Sequence[Scalar]) -> bool:
        """True iff the working-coordinate vector v lies in W."""
        return linalg.in_span(self.subspace.rows(), list(v), self.form.mode)


# --- Sections and projections ---
def quotient_project_vector(v: Sequence[Scalar], comp: Complement) -> Vector:
    """pi(v): coordinates on the transversal (diagonal coordinates without e0)."""
    _check_length(v, comp.dim)
    c = comp.form.diagonalization.to_diagonal(v)
    return Vector(tuple(c[i] for i in range(comp.dim) if i != comp.e0_index))


def canonical_section(comp: Complement) -> List[List[Scalar]]:
    """
    omega_W as a dim x (dim - 1) matrix from transversal coordinates to
    working coordinates; column i is the unique vector of W over the i-th
    transversal class.
    """
    n, k, mode = comp.dim, comp.e0_index, comp.form.mode
    diag = comp.form.diagonalization
    columns = []
    for i in (i for i in range(n) if i != k):
        c = [zero(mode)] * n
        c[i] = one(mode)
        c[k] = comp.offsets[i]
        columns.append(diag.from_diagonal(c))
    return linalg.transpose(columns)


def projection_matrix_diagonal(comp: Complement) -> List[List[Scalar]]:
    """pi_W = omega_W o pi in diagonal coordinates."""
    n, k, mode = comp.dim, comp.e0_index, comp.form.mode
    m = [[zero(mode)] * n for _ in range(n)]
    for i in range(n):
        if i == k:
            continue
        m[i][i] = one(mode)
        m[k][i] = comp.offsets[i]
    return m


def playfair_projection(comp: Complement) -> List[List[Scalar]]:
    """pi_W = omega_W o pi as a matrix on V in working coordinates."""
    diag = comp.form.diagonalization
    return linalg.matmul(linalg.matmul([list(r) for r in diag.change_of_basis],
                                       projection_matrix_diagonal(comp)),
                         [list(r) for r in diag.inverse])


def playfair_project_vector(v: Sequence[Scalar], comp: Complement) -> Tuple[Vector, Scalar]:
    """The unique w in W and scalar lam with v = w + lam*e0."""
    _check_length(v, comp.dim)
    k = comp.e0_index
    diag = comp.form.diagonalization
    c = diag.to_diagonal(v)
    shifted = sum((comp.offsets[i] * c[i] for i in range(comp.dim) if i != k), zero(comp.form.mode))
    w_diag = list(c)
    w_diag[k] = shifted
    return Vector(tuple(diag.from_diagonal(w_diag))), c[k] - shifted


# --- Maps ---
def _coerce_matrix(f: Sequence[Sequence], mode: ScalarMode) -> List[List[Scalar]]:
    # raises ScalarModeError for float entries against a rational form
    return [[coerce(c, mode) for c in row] for row in f]


def is_isometry(f: Sequence[Sequence[Scalar]], src: QuadraticForm, dst: QuadraticForm) -> bool:
    """True iff fᵀ·G_dst·f = G_src, f being a dst.dim x src.dim matrix."""
    f = _coerce_matrix(f, src.mode)
    if len(f) != dst.dim or any(len(row) != src.dim for row in f):
        raise DimensionMismatch(f"map of shape {len(f)}x{len(f[0]) if f else 0} "
                                f"between dimensions {src.dim} and {dst.dim}")
    pulled = linalg.matmul(linalg.matmul(linalg.transpose(f), [list(r) for r in dst.gram]), f)
    return all(is_close(pulled[i][j], src.gram[i][j]) for i in range(src.dim) for j in range(src.dim))


def is_weak_orthogonal(f: Sequence[Sequence[Scalar]], form: QuadraticForm) -> bool:
    """Invertible isometry of V fixing the radical elementwise."""
    f = _coerce_matrix(f, form.mode)
    if not is_isometry(f, form, form):
        return False
    if linalg.rank([list(r) for r in f], form.dim, form.mode) < form.dim:
        return False
    for r in radical(form).basis:
        if not Vector(tuple(linalg.matvec(f, r.coords))).isclose(r):
            return False
    return True

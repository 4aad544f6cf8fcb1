# gacalc/utils.py

from pathlib import Path
from typing import List, Optional, Sequence

from .errors import ConfigError, DimensionMismatch, ScalarModeError
from .pga3d import Plane, PointP, point_complement
from .quadratic_space import Complement, QuadraticForm
from .scalars import Scalar, ScalarMode, parse_scalar


def load_gram_file(path: str, mode: ScalarMode) -> List[List[Scalar]]:
    """
    Reads a symmetric gram matrix from a text file.

    Rows are separated by newlines and entries by whitespace. Blank lines
    and lines starting with '#' are skipped.

    Args:
        path (str): Location of the matrix file.
        mode (ScalarMode): Scalar mode the entries are parsed in.

    Returns:
        list of lists: the matrix rows.

    Raises:
        ConfigError: If the file is missing, the rows are ragged or an entry
            is not a scalar.
    """
    file_path = Path(path)
    if not file_path.is_file():
        raise ConfigError(f"gram file not found: {path}")
    with open(file_path, encoding="utf-8") as f:
        lines = [line for line in f.readlines() if line.strip() and not line.lstrip().startswith("#")]
    rows = []
    for i, line in enumerate(lines):
        try:
            rows.append([parse_scalar(n, mode) for n in line.split()])
        except ScalarModeError:
            # the entry itself is not echoed back
            raise ConfigError(f"gram file {path}: row {i + 1} holds an entry that is not a "
                              f"{mode.value} scalar") from None
    if not rows:
        raise ConfigError(f"gram file {path} is empty")
    if any(len(row) != len(rows) for row in rows):
        raise ConfigError(f"gram file {path} is not a square matrix")
    return rows


def parse_scalar_list(text: str, mode: ScalarMode, expected: Optional[int] = None) -> List[Scalar]:
    """Parses comma-separated scalars such as a point "1,0,0" or a plane "0,1,0,0"."""
    values = [parse_scalar(part, mode) for part in text.split(",") if part.strip()]
    if expected is not None and len(values) != expected:
        raise DimensionMismatch(f"expected {expected} comma-separated values, got {len(values)} in {text!r}")
    return values


def parse_signature(text: str) -> Optional[Sequence[int]]:
    """'3,0,1' -> (3, 0, 1); None when the text is not a signature."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3 or not all(p.isdigit() for p in parts):
        return None
    return tuple(int(p) for p in parts)


def parse_point(text: str, mode: ScalarMode) -> PointP:
    return PointP.of(parse_scalar_list(text, mode, expected=3), mode)


def parse_plane(text: str, mode: ScalarMode) -> Plane:
    return Plane.of(parse_scalar_list(text, mode, expected=4), mode)


def complement_for(form: QuadraticForm, point: Optional[str] = None) -> Complement:
    """V_P for a PGA3 point given as "x,y,z"; the coordinate complement otherwise."""
    if point is None:
        return Complement.coordinate(form)
    if form != QuadraticForm.pga3(form.mode):
        raise ConfigError(f"--point needs the pga3 algebra, not {form.name}")
    return point_complement(parse_point(point, form.mode))

"""
cli/formats.py

File loaders for the command line. Every error is a FormatError carrying
the file path and, when known, the 1-based line number.

  *.gauss    Gauss code text (see knots/gauss.py)
  biquandle  n=<size>, then "circ:" and "star:" each followed by n rows
  coeffs     key=value header (ring, X, delta, w) then tables "A:" .. "F:",
             each followed by n rows. Row entries are separated by commas
             when the row has one, by whitespace otherwise, so Laurent
             entries such as "1*x^1 + -1*x^0" go in comma-separated rows.
             A 1x1 table row is read whole

A coefficients file holding only A and B tables is NOR data; δ and w are
derived from the (0, 0) entries when absent.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from invariants.biquandle import Biquandle, BiquandleError, builtin_biquandles, get_biquandle
from invariants.relations import TABLES, BracketCoefficients, NorCoefficients
from knots.gauss import GaussCodeError, LinkDiagram, parse_gauss_code
from rings import NonUnitError, Ring, get_ring

PathLike = Union[str, Path]


class FormatError(ValueError):
    """Malformed input file."""

    def __init__(self, message: str, path: PathLike, line: Optional[int] = None):
        self.path = str(path)
        self.line = line
        where = f"{self.path}:{line}" if line is not None else self.path
        super().__init__(f"{where}: {message}")


def _read(path: PathLike) -> List[str]:
    try:
        return Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise FormatError(f"cannot read file ({exc.strerror})", path) from None


def _content(lines: List[str]) -> List[Tuple[int, str]]:
    """(line number, text) for non-blank lines, comments stripped."""
    out = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if text:
            out.append((lineno, text))
    return out


# ─────────────────────────────────────────────────────────────────────────────
# Gauss code
# ─────────────────────────────────────────────────────────────────────────────

def load_diagram(path: PathLike) -> LinkDiagram:
    text = "\n".join(_read(path))
    try:
        return parse_gauss_code(text)
    except GaussCodeError as exc:
        message = str(exc)
        if exc.line is not None:
            message = message.split(": ", 1)[-1]
        raise FormatError(message, path, exc.line) from None


# ─────────────────────────────────────────────────────────────────────────────
# Biquandles
# ─────────────────────────────────────────────────────────────────────────────

def _read_table(rows: List[Tuple[int, str]], start: int, n: int, path: PathLike, name: str) -> List[List[str]]:
    if start + n > len(rows):
        last = rows[-1][0] if rows else None
        raise FormatError(f"table {name} needs {n} rows", path, last)
    table = []
    for lineno, text in rows[start:start + n]:
        if "," in text:
            cells = [c.strip() for c in text.split(",")]
        else:
            cells = [text] if n == 1 else text.split()
        if len(cells) != n:
            raise FormatError(f"table {name}: expected {n} entries, got {len(cells)}", path, lineno)
        table.append(cells)
    return table


def parse_biquandle(lines: List[str], path: PathLike = "<string>", name: str = "") -> Biquandle:
    rows = _content(lines)
    if not rows or not rows[0][1].startswith("n="):
        raise FormatError("biquandle file must start with n=<size>", path, rows[0][0] if rows else None)
    lineno, header = rows[0]
    try:
        n = int(header[2:])
    except ValueError:
        raise FormatError(f"bad size '{header[2:]}'", path, lineno) from None

    tables: Dict[str, List[List[int]]] = {}
    i = 1
    while i < len(rows):
        lineno, text = rows[i]
        label = text.rstrip(":")
        if not text.endswith(":") or label not in ("circ", "star"):
            raise FormatError(f"expected 'circ:' or 'star:', got '{text}'", path, lineno)
        raw = _read_table(rows, i + 1, n, path, label)
        try:
            tables[label] = [[int(v) for v in row] for row in raw]
        except ValueError:
            raise FormatError(f"table {label} has a non-integer entry", path, lineno) from None
        i += 1 + n

    missing = [t for t in ("circ", "star") if t not in tables]
    if missing:
        raise FormatError(f"missing table(s) {', '.join(missing)}", path)
    try:
        return Biquandle(
            tuple(tuple(r) for r in tables["circ"]),
            tuple(tuple(r) for r in tables["star"]),
            name,
        )
    except BiquandleError as exc:
        raise FormatError(str(exc), path) from None


def load_biquandle(ref: str, relative_to: Optional[PathLike] = None) -> Biquandle:
    """A built-in name (singleton, z2flip, z3dihedral) or a biquandle file path."""
    if ref.strip().lower() in builtin_biquandles():
        return get_biquandle(ref)
    path = Path(ref)
    if not path.is_absolute() and relative_to is not None and not path.exists():
        path = Path(relative_to).parent / path
    return parse_biquandle(_read(path), path, path.stem)


# ─────────────────────────────────────────────────────────────────────────────
# Coefficients
# ─────────────────────────────────────────────────────────────────────────────

def _parse_coefficients(path: PathLike) -> Tuple[Dict[str, Tuple[int, str]], Dict[str, Tuple[int, List[List[str]]]], Biquandle, Ring]:
    rows = _content(_read(path))
    header: Dict[str, Tuple[int, str]] = {}
    i = 0
    while i < len(rows) and "=" in rows[i][1]:
        lineno, text = rows[i]
        key, _, value = text.partition("=")
        header[key.strip()] = (lineno, value.strip())
        i += 1

    for key in ("ring", "X"):
        if key not in header:
            raise FormatError(f"missing '{key}=' header", path)
    try:
        ring = get_ring(header["ring"][1])
    except ValueError as exc:
        raise FormatError(str(exc), path, header["ring"][0]) from None
    X = load_biquandle(header["X"][1], relative_to=path)
    n = X.size

    tables: Dict[str, Tuple[int, List[List[str]]]] = {}
    while i < len(rows):
        lineno, text = rows[i]
        label = text.rstrip(":")
        if not text.endswith(":") or label not in TABLES:
            raise FormatError(f"expected a table header A: .. F:, got '{text}'", path, lineno)
        if label in tables:
            raise FormatError(f"table {label} given twice", path, lineno)
        tables[label] = (lineno, _read_table(rows, i + 1, n, path, label))
        i += 1 + n
    return header, tables, X, ring


def _element(ring: Ring, text: str, path: PathLike, lineno: int) -> Any:
    try:
        return ring.parse(text)
    except ValueError as exc:
        raise FormatError(str(exc), path, lineno) from None


def _table_values(ring: Ring, entry: Tuple[int, List[List[str]]], path: PathLike) -> Tuple[Tuple[Any, ...], ...]:
    lineno, raw = entry
    return tuple(
        tuple(_element(ring, v, path, lineno + 1 + r) for v in row)
        for r, row in enumerate(raw)
    )


def load_nor_coefficients(path: PathLike) -> NorCoefficients:
    header, tables, X, ring = _parse_coefficients(path)
    for name in ("A", "B"):
        if name not in tables:
            raise FormatError(f"missing table {name}", path)
    A = _table_values(ring, tables["A"], path)
    B = _table_values(ring, tables["B"], path)
    try:
        if "delta" in header and "w" in header:
            delta = _element(ring, header["delta"][1], path, header["delta"][0])
            w = _element(ring, header["w"][1], path, header["w"][0])
            return NorCoefficients(ring, X, A, B, delta, w)
        return NorCoefficients.derived(ring, X, A, B)
    except NonUnitError as exc:
        raise FormatError(str(exc), path) from None


def load_coefficients(path: PathLike) -> BracketCoefficients:
    """Parity-biquandle bracket coefficients. A file with only A and B is read as NOR data."""
    header, tables, X, ring = _parse_coefficients(path)
    if set(tables) <= {"A", "B"}:
        return BracketCoefficients.from_nor(load_nor_coefficients(path))
    missing = [t for t in TABLES if t not in tables]
    if missing:
        raise FormatError(f"missing table(s) {', '.join(missing)}", path)
    for key in ("delta", "w"):
        if key not in header:
            raise FormatError(f"missing '{key}=' header", path)
    values = {name: _table_values(ring, tables[name], path) for name in TABLES}
    delta = _element(ring, header["delta"][1], path, header["delta"][0])
    w = _element(ring, header["w"][1], path, header["w"][0])
    try:
        return BracketCoefficients(ring, X, values, delta, w)
    except NonUnitError as exc:
        raise FormatError(str(exc), path, header["w"][0]) from None


def format_coefficients(beta: BracketCoefficients, x_ref: str) -> str:
    """Coefficients file text; `x_ref` is what goes after "X="."""
    fmt = beta.ring.format
    lines = [f"ring={beta.ring.name}", f"X={x_ref}", f"delta={fmt(beta.delta)}", f"w={fmt(beta.w)}"]
    sep = " " if all(" " not in fmt(v) for t in beta.tables.values() for row in t for v in row) else ", "
    for name in TABLES:
        lines.append(f"{name}:")
        lines += [sep.join(fmt(v) for v in row) for row in beta.tables[name]]
    return "\n".join(lines) + "\n"

"""Canonical JSON documents for generated squares.

A square document records the field (q, p, k, modulus), the generator
matrix c as a 2x2 array of element indices, and the full grid.  Keys are
emitted in that fixed order and all values are integers, so serialization
is byte-stable and documents round-trip exactly.  Deserialization
revalidates everything, including that rebuilding the grid from c
reproduces the stored grid cell for cell.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .gf import DegreeTooSmall, Field, NotOddPrime, OrderTooLarge
from .planes import Mat2, is_valid_generator
from .sudoku import SudokuGrid, build_from_canonical

KEY_ORDER = ("q", "p", "k", "modulus", "c", "grid")


class SchemaViolation(ValueError):
    """A document field is missing, malformed or inconsistent."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")


def _require_int(value, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise SchemaViolation(path, f"expected an integer, got {value!r}")
    return value


def _require_int_matrix(value, path: str, nrows: int, ncols: int,
                        upper: int) -> list[list[int]]:
    if not isinstance(value, list) or len(value) != nrows:
        raise SchemaViolation(path, f"expected {nrows} rows")
    out = []
    for r, row in enumerate(value):
        if not isinstance(row, list) or len(row) != ncols:
            raise SchemaViolation(f"{path}[{r}]", f"expected {ncols} entries")
        for c, cell in enumerate(row):
            v = _require_int(cell, f"{path}[{r}][{c}]")
            if not 0 <= v < upper:
                raise SchemaViolation(f"{path}[{r}][{c}]",
                                      f"value {v} out of range [0, {upper})")
        out.append(list(row))
    return out


@dataclass
class SquareDocument:
    """One generated square: field parameters, generator matrix and grid."""

    q: int
    p: int
    k: int
    modulus: tuple[int, ...]
    c: tuple[tuple[int, int], tuple[int, int]]
    grid: list[list[int]]

    @classmethod
    def from_matrix(cls, c: Mat2) -> "SquareDocument":
        field = c.field
        grid = build_from_canonical(c)
        return cls(q=field.q, p=field.p, k=field.k, modulus=field.modulus,
                   c=c.indices(), grid=[list(row) for row in grid.rows])

    def to_field(self) -> Field:
        return Field(self.p, self.k, modulus=self.modulus)

    def to_matrix(self, field: Field | None = None) -> Mat2:
        return Mat2.from_indices(field or self.to_field(), self.c)

    def to_grid(self) -> SudokuGrid:
        field = self.to_field()
        return SudokuGrid(self.q, [list(row) for row in self.grid],
                          generator=self.to_matrix(field))

    def to_json(self) -> str:
        payload = {
            "q": self.q,
            "p": self.p,
            "k": self.k,
            "modulus": list(self.modulus),
            "c": [list(row) for row in self.c],
            "grid": [list(row) for row in self.grid],
        }
        return json.dumps(payload, separators=(",", ":")) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SquareDocument":
        """Parse and fully validate a document.

        Raises json.JSONDecodeError for text that is not JSON at all, and
        SchemaViolation (with the offending field path) for anything that
        parses but breaks the schema.
        """
        data = json.loads(text, parse_float=_reject_float)
        return cls._validate(data)

    @classmethod
    def _validate(cls, data) -> "SquareDocument":
        if not isinstance(data, dict):
            raise SchemaViolation("$", "expected a JSON object")
        for key in KEY_ORDER:
            if key not in data:
                raise SchemaViolation(key, "missing")
        for key in data:
            if key not in KEY_ORDER:
                raise SchemaViolation(key, "unexpected key")

        q = _require_int(data["q"], "q")
        p = _require_int(data["p"], "p")
        k = _require_int(data["k"], "k")
        if k < 1 or p < 2 or p ** k != q:
            raise SchemaViolation("q", f"q = {q} is not p^k = {p}^{k}")

        modulus = data["modulus"]
        if not isinstance(modulus, list):
            raise SchemaViolation("modulus", "expected a list")
        modulus = tuple(_require_int(m, f"modulus[{i}]") for i, m in enumerate(modulus))
        try:
            field = Field(p, k, modulus=modulus)
        except NotOddPrime as exc:
            raise SchemaViolation("p", str(exc)) from None
        except DegreeTooSmall as exc:
            raise SchemaViolation("k", str(exc)) from None
        except OrderTooLarge as exc:
            raise SchemaViolation("q", str(exc)) from None
        except ValueError as exc:
            raise SchemaViolation("modulus", str(exc)) from None

        c_rows = _require_int_matrix(data["c"], "c", 2, 2, q)
        matrix = Mat2.from_indices(field, c_rows)
        if not is_valid_generator(matrix):
            raise SchemaViolation("c", "not a valid generator (singular or lower triangular)")

        grid_rows = _require_int_matrix(data["grid"], "grid", q * q, q * q, q * q)
        rebuilt = build_from_canonical(matrix)
        if rebuilt.rows != grid_rows:
            raise SchemaViolation("grid", "grid disagrees with the square rebuilt from c")

        return cls(q=q, p=p, k=k, modulus=modulus,
                   c=((c_rows[0][0], c_rows[0][1]), (c_rows[1][0], c_rows[1][1])),
                   grid=grid_rows)


def _reject_float(text: str):
    raise SchemaViolation("$", f"float {text} not allowed, integers only")

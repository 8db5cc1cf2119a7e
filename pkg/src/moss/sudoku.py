"""Order-q^2 sudoku grids built from planes of GF(q)^4 by coset labeling.

Every cell of the grid has an address (x1, x2, x3, x4) in F^4: x1 is the
large row (the row of subsquares), x2 the mini row within it, x3 the large
column and x4 the mini column, all counted from zero in increasing
lexicographic order, top to bottom and left to right.  The rendered cell of
an address is therefore row q*index(x1) + index(x2) and column
q*index(x3) + index(x4).

A generating plane g assigns one symbol per coset of g.  Symbols are fixed
by the coset's unique representative (0, a, 0, b) inside the top-left
subsquare: the coset gets symbol q*index(a) + index(b).  Any other choice
of symbols is a relabeling of the same square.
"""

from __future__ import annotations

from .gf import Field, FieldElement
from .planes import Mat2, Plane, is_sudoku_generator, is_valid_generator


class NotAGenerator(ValueError):
    """The plane or matrix does not generate a sudoku square."""


class MalformedGrid(ValueError):
    """Grid dimensions or symbols are out of contract."""


class OrderMismatch(ValueError):
    """The two grids have different orders."""


class SudokuGrid:
    """A q^2 x q^2 array of symbols 0..q^2-1 with q x q subsquare structure."""

    __slots__ = ("q", "rows", "generator", "_flat")

    def __init__(self, q: int, rows: list[list[int]], generator: Mat2 | None = None):
        self.q = q
        self.rows = rows
        self.generator = generator
        self._flat: tuple[int, ...] | None = None

    @property
    def order(self) -> int:
        return self.q * self.q

    def flat(self) -> tuple[int, ...]:
        if self._flat is None:
            self._flat = tuple(s for row in self.rows for s in row)
        return self._flat

    def symbol_at(self, x1: FieldElement, x2: FieldElement, x3: FieldElement,
                  x4: FieldElement) -> int:
        """Symbol housed at address (x1, x2, x3, x4)."""
        q = self.q
        return self.rows[q * x1.index + x2.index][q * x3.index + x4.index]

    def __eq__(self, other):
        return isinstance(other, SudokuGrid) and self.q == other.q and self.rows == other.rows

    def __repr__(self):
        return f"SudokuGrid(order={self.order}, generator={self.generator!r})"


class SudokuReport:
    """Outcome of the three exactly-once checks on a grid."""

    __slots__ = ("latin_rows", "latin_cols", "subsquares")

    def __init__(self, latin_rows: bool, latin_cols: bool, subsquares: bool):
        self.latin_rows = latin_rows
        self.latin_cols = latin_cols
        self.subsquares = subsquares

    @property
    def ok(self) -> bool:
        return self.latin_rows and self.latin_cols and self.subsquares

    def __repr__(self):
        return (f"SudokuReport(latin_rows={self.latin_rows}, "
                f"latin_cols={self.latin_cols}, subsquares={self.subsquares})")


def _span_offsets(field: Field, plane: Plane) -> list[tuple[int, int, int, int]]:
    """All q^2 elements of the plane, as index vectors u*v1 + w*v2."""
    add, mul = field.add_table, field.mul_table
    v1 = tuple(x.index for x in plane.v1)
    v2 = tuple(x.index for x in plane.v2)
    offsets = []
    for u in range(field.q):
        uv = [mul[u][x] for x in v1]
        for w in range(field.q):
            offsets.append(tuple(add[uv[i]][mul[w][v2[i]]] for i in range(4)))
    return offsets


def build_from_plane(plane: Plane) -> SudokuGrid:
    """Sudoku grid generated by a plane, symbols fixed by top-left-subsquare cosets.

    Raises NotAGenerator when the plane fails the generator criterion.
    """
    field = plane.field
    if not is_sudoku_generator(plane):
        raise NotAGenerator(f"{plane!r} does not generate a sudoku square")
    q, n = field.q, field.q * field.q
    add = field.add_table
    offsets = _span_offsets(field, plane)
    rows = [[0] * n for _ in range(n)]
    for a in range(q):
        for b in range(q):
            symbol = q * a + b
            for x1, o2, x3, o4 in offsets:
                rows[q * x1 + add[a][o2]][q * x3 + add[b][o4]] = symbol
    return SudokuGrid(q, rows)


def build_from_canonical(c: Mat2) -> SudokuGrid:
    """Sudoku grid generated by the column span of [I; C].

    Raises NotAGenerator when C is singular or lower triangular.
    """
    if not is_valid_generator(c):
        raise NotAGenerator(f"{c!r} is singular or lower triangular")
    grid = build_from_plane(Plane.from_generator(c))
    grid.generator = c
    return grid


def grid_from_cosets(plane: Plane) -> SudokuGrid:
    """Label the cosets of any plane with symbols in first-encounter order.

    No generator precondition: the result passes verify_sudoku exactly when
    the plane satisfies the generator criterion, which makes this the
    brute-force counterpart of is_sudoku_generator.
    """
    field = plane.field
    q, n = field.q, field.q * field.q
    add = field.add_table
    offsets = _span_offsets(field, plane)
    rows: list[list[int | None]] = [[None] * n for _ in range(n)]
    symbol = 0
    for r in range(n):
        for col in range(n):
            if rows[r][col] is None:
                x1, x2, x3, x4 = r // q, r % q, col // q, col % q
                for o1, o2, o3, o4 in offsets:
                    rows[q * add[x1][o1] + add[x2][o2]][q * add[x3][o3] + add[x4][o4]] = symbol
                symbol += 1
    return SudokuGrid(q, rows)


def verify_sudoku(grid: SudokuGrid) -> SudokuReport:
    """Exactly-once checks for rows, columns and aligned subsquares.

    Raises MalformedGrid on wrong dimensions or out-of-range symbols.
    """
    q, n = grid.q, grid.order
    rows = grid.rows
    if len(rows) != n or any(len(row) != n for row in rows):
        raise MalformedGrid(f"grid must be {n}x{n}")
    for row in rows:
        for s in row:
            if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s < n:
                raise MalformedGrid(f"symbol {s!r} out of range [0, {n})")
    full = set(range(n))
    latin_rows = all(set(row) == full for row in rows)
    latin_cols = all({rows[r][col] for r in range(n)} == full for col in range(n))
    subsquares = all(
        {rows[r][col] for r in range(br, br + q) for col in range(bc, bc + q)} == full
        for br in range(0, n, q)
        for bc in range(0, n, q)
    )
    return SudokuReport(latin_rows, latin_cols, subsquares)


def verify_orthogonal_bruteforce(a: SudokuGrid, b: SudokuGrid) -> bool:
    """True iff superimposing the grids yields every ordered symbol pair once."""
    if a.order != b.order:
        raise OrderMismatch(f"order {a.order} vs {b.order}")
    return len(set(zip(a.flat(), b.flat()))) == a.order * a.order


def render_grid(grid: SudokuGrid, style: str = "text") -> str:
    """Render as text (blocks separated by | and rules) or csv (one row per line)."""
    q, n = grid.q, grid.order
    if style == "csv":
        return "\n".join(",".join(str(s) for s in row) for row in grid.rows)
    if style != "text":
        raise ValueError(f"unknown style {style!r}")
    width = len(str(n - 1))
    block_width = q * width + q - 1
    rule = "-+-".join("-" * block_width for _ in range(q))
    lines = []
    for r, row in enumerate(grid.rows):
        if r and r % q == 0:
            lines.append(rule)
        blocks = [
            " ".join(f"{s:>{width}}" for s in row[bc:bc + q])
            for bc in range(0, n, q)
        ]
        lines.append(" | ".join(blocks))
    return "\n".join(lines)

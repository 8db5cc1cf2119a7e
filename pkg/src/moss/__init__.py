"""moss: complete families of mutually orthogonal sudoku squares.

For every odd prime power q the library constructs q(q-1) pairwise
orthogonal sudoku squares of order q^2 (the maximum possible) by
representing each square as a 2x2 matrix over GF(q), and checks every
claim with independent brute-force verifiers at small scale.
"""

from .gf import (
    DEFAULT_MAX_ORDER,
    Field,
    FieldElement,
    FieldMismatch,
    GF,
    NoSquareRoot,
    NotOddPrime,
    OrderTooLarge,
)
from .planes import (
    Mat2,
    NotCanonicalizable,
    Plane,
    all_planes,
    all_valid_generators,
    canonicalize,
    column_plane,
    format_mat2,
    is_sudoku_generator,
    is_valid_generator,
    meets_trivially,
    parse_mat2,
    planes_intersect_trivially,
    rank,
    row_plane,
    subsquare_plane,
)
from .sudoku import (
    MalformedGrid,
    NotAGenerator,
    OrderMismatch,
    SudokuGrid,
    SudokuReport,
    build_from_canonical,
    build_from_plane,
    grid_from_cosets,
    render_grid,
    verify_orthogonal_bruteforce,
    verify_sudoku,
)
from .family import (
    Family,
    FamilyReport,
    alpha_census,
    build_family,
    count_alphas,
    derive_lambda,
    find_alpha,
    verify_family,
)
from .serialize import SchemaViolation, SquareDocument

__version__ = "0.1.0"

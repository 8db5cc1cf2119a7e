"""Complete orthogonal families of sudoku generator matrices.

For odd q there is always a quadratic residue alpha whose successor
alpha + 1 is a non-residue.  Fixing lambda with lambda^2 = 4*alpha, the
q(q-1) matrices

    [[v, w],
     [w, lambda*w + v]]      for v in F, w in F*

are pairwise "difference-invertible": subtracting two distinct members
yields either another matrix of the same shape (w1 != w2) or a nonzero
diagonal matrix (w1 == w2), both invertible.  Each member is itself
invertible and non-lower-triangular, so the family generates q(q-1)
mutually orthogonal sudoku squares of order q^2, the maximum possible.
"""

from __future__ import annotations

from .gf import Field, FieldElement
from .planes import Mat2, is_valid_generator
from .sudoku import NotAGenerator, build_from_canonical, verify_orthogonal_bruteforce, verify_sudoku

DEFAULT_BRUTEFORCE_CAP = 9


def alpha_census(field: Field) -> list[FieldElement]:
    """All elements that are squares while their successor is not, in index order."""
    one = field.one
    return [a for a in field.elements()
            if field.is_square(a) and not field.is_square(a + one)]


def find_alpha(field: Field) -> FieldElement:
    """Smallest-index square whose successor is a non-square.

    Existence is guaranteed for every odd prime power order.
    """
    one = field.one
    for a in field.elements():
        if field.is_square(a) and not field.is_square(a + one):
            return a
    raise AssertionError(f"{field} has no square with non-square successor")


def count_alphas(field: Field) -> int:
    """Exhaustive count of qualifying residues; roughly (q - 1)/4 of them."""
    return len(alpha_census(field))


def derive_lambda(field: Field, alpha: FieldElement) -> FieldElement:
    """The smaller-index root of lambda^2 = 4*alpha; nonzero for nonzero alpha."""
    if not alpha or not field.is_square(alpha):
        raise ValueError("alpha must be a nonzero square")
    return field.sqrt(field.const(4) * alpha)


class Family:
    """An ordered family of generator matrices [[v, w], [w, lambda*w + v]]."""

    __slots__ = ("field", "alpha", "lam", "matrices")

    def __init__(self, field: Field, alpha: FieldElement, lam: FieldElement,
                 matrices: list[Mat2]):
        self.field = field
        self.alpha = alpha
        self.lam = lam
        self.matrices = matrices

    @property
    def size(self) -> int:
        return len(self.matrices)

    def __iter__(self):
        return iter(self.matrices)

    def __len__(self):
        return len(self.matrices)

    def __repr__(self):
        return (f"Family({self.field!r}, alpha={self.alpha.index}, "
                f"lambda={self.lam.index}, size={self.size})")


def build_family(field: Field) -> Family:
    """The full family of q(q-1) generator matrices, deterministically ordered.

    v runs over the field and, inside, w over the nonzero elements, both in
    lexicographic order.
    """
    alpha = find_alpha(field)
    lam = derive_lambda(field, alpha)
    elements = field.elements()
    matrices = [
        Mat2(v, w, w, lam * w + v)
        for v in elements
        for w in elements[1:]
    ]
    return Family(field, alpha, lam, matrices)


class FamilyReport:
    """Verification outcome: empty violations means the family checks out."""

    __slots__ = ("mode", "size", "pairs", "violations")

    def __init__(self, mode: str, size: int, pairs: int,
                 violations: list[tuple[str, tuple[int, ...]]]):
        self.mode = mode
        self.size = size
        self.pairs = pairs
        self.violations = violations

    @property
    def ok(self) -> bool:
        return not self.violations

    def __repr__(self):
        state = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"FamilyReport(mode={self.mode!r}, size={self.size}, pairs={self.pairs}, {state})"


def _orthogonality_violations(field: Field, matrices: list[Mat2]) -> list[tuple[int, int]]:
    """Pairs whose difference is singular, via det(C1-C2) on index tables."""
    sub, mul = field.sub_table, field.mul_table
    quads = [(m.a.index, m.b.index, m.c.index, m.d.index) for m in matrices]
    bad = []
    for i, (a1, b1, c1, d1) in enumerate(quads):
        sa, sb, sc, sd = sub[a1], sub[b1], sub[c1], sub[d1]
        for j in range(i + 1, len(quads)):
            a2, b2, c2, d2 = quads[j]
            if mul[sa[a2]][sd[d2]] == mul[sb[b2]][sc[c2]]:
                bad.append((i, j))
    return bad


def verify_family(family: Family, mode: str = "fast",
                  bruteforce_cap: int = DEFAULT_BRUTEFORCE_CAP) -> FamilyReport:
    """Check every member and every unordered pair of the family.

    Fast mode runs the determinant criteria only.  Bruteforce mode also
    builds all grids, verifies each sudoku property by inspection and each
    pair by full superimposition census; it is capped at q <= bruteforce_cap
    because its cost grows as q^4 per pair.
    """
    if mode not in ("fast", "bruteforce"):
        raise ValueError(f"unknown mode {mode!r}")
    field = family.field
    matrices = family.matrices
    n = len(matrices)
    violations: list[tuple[str, tuple[int, ...]]] = []

    for i, m in enumerate(matrices):
        if not is_valid_generator(m):
            violations.append(("invalid_generator", (i,)))
    violations.extend(
        ("not_orthogonal", pair)
        for pair in _orthogonality_violations(field, matrices)
    )

    if mode == "bruteforce":
        if field.q > bruteforce_cap:
            raise ValueError(
                f"bruteforce verification capped at q <= {bruteforce_cap}, got q = {field.q}")
        grids = []
        for i, m in enumerate(matrices):
            try:
                grid = build_from_canonical(m)
            except NotAGenerator:
                grids.append(None)
                continue
            grids.append(grid)
            if not verify_sudoku(grid).ok:
                violations.append(("not_sudoku", (i,)))
        for i in range(n):
            if grids[i] is None:
                continue
            for j in range(i + 1, n):
                if grids[j] is not None and not verify_orthogonal_bruteforce(grids[i], grids[j]):
                    violations.append(("not_orthogonal_bruteforce", (i, j)))

    violations.sort()
    return FamilyReport(mode, n, n * (n - 1) // 2, violations)

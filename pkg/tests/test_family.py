"""Residue search, the family template, and family verification."""

import math

import pytest

from moss.family import (
    Family,
    alpha_census,
    build_family,
    count_alphas,
    derive_lambda,
    find_alpha,
    verify_family,
)
from moss.gf import GF
from moss.planes import Mat2, all_valid_generators, is_valid_generator, meets_trivially
from oracles import ODD_PRIME_POWERS_49, get_field, squares_by_squaring


def test_find_alpha_spec_values():
    assert find_alpha(get_field(3)).index == 1
    assert find_alpha(get_field(7)).index == 2
    assert find_alpha(get_field(13)).index == 1


def test_alpha_census_spec_values():
    assert count_alphas(get_field(3)) == 1
    assert count_alphas(get_field(7)) == 2
    assert [a.index for a in alpha_census(get_field(7))] == [2, 4]
    assert count_alphas(get_field(13)) == 3 == (13 - 1) // 4
    assert [a.index for a in alpha_census(get_field(13))] == [1, 4, 10]


@pytest.mark.parametrize("q", ODD_PRIME_POWERS_49)
def test_alpha_against_squaring_oracle(q):
    field = get_field(q)
    squares = squares_by_squaring(field)
    expected = [i for i in range(q) if i in squares and field.add_table[i][1] not in squares]
    assert [a.index for a in alpha_census(field)] == expected
    assert find_alpha(field).index == expected[0]
    assert count_alphas(field) == len(expected)


@pytest.mark.parametrize("q", ODD_PRIME_POWERS_49)
def test_alpha_count_tracks_quarter(q):
    count = count_alphas(get_field(q))
    assert math.floor((q - 1) / 4) - 2 <= count <= math.ceil((q - 1) / 4) + 2


def test_derive_lambda_spec_values():
    f3 = get_field(3)
    assert derive_lambda(f3, f3(1)).index == 1
    f7 = get_field(7)
    assert derive_lambda(f7, f7(2)).index == 1  # 4*2 = 1 mod 7, roots {1, 6}
    f13 = get_field(13)
    assert derive_lambda(f13, f13(1)).index == 2


@pytest.mark.parametrize("q", ODD_PRIME_POWERS_49)
def test_derive_lambda_properties(q):
    field = get_field(q)
    alpha = find_alpha(field)
    lam = derive_lambda(field, alpha)
    assert lam
    assert lam * lam == field.const(4) * alpha


def test_derive_lambda_rejects_bad_alpha():
    f3 = get_field(3)
    with pytest.raises(ValueError):
        derive_lambda(f3, f3.zero)
    with pytest.raises(ValueError):
        derive_lambda(f3, f3(2))  # 2 is a non-square mod 3


def test_build_family_q3_frozen():
    fam = build_family(get_field(3))
    assert fam.alpha.index == 1
    assert fam.lam.index == 1
    assert [m.indices() for m in fam.matrices] == [
        ((0, 1), (1, 1)),
        ((0, 2), (2, 2)),
        ((1, 1), (1, 2)),
        ((1, 2), (2, 0)),
        ((2, 1), (1, 0)),
        ((2, 2), (2, 1)),
    ]


@pytest.mark.parametrize("q", [3, 5, 9, 13])
def test_build_family_structure(q):
    field = get_field(q)
    fam = build_family(field)
    assert fam.size == len(fam.matrices) == q * (q - 1)
    assert len({m.indices() for m in fam.matrices}) == fam.size
    lam = fam.lam
    seen = []
    for m in fam.matrices:
        assert m.b == m.c, "off-diagonal entries must both equal w"
        assert m.b, "w must be nonzero"
        assert m.d == lam * m.b + m.a
        assert is_valid_generator(m)
        seen.append((m.a.index, m.b.index))
    # v runs in the outer loop, w in the inner one, both lexicographically
    assert seen == [(v, w) for v in range(q) for w in range(1, q)]


def test_golden_generator_uses_the_other_root():
    """[[0,2],[2,1]] fits the template with the larger root of lambda^2 = 4*alpha."""
    f3 = get_field(3)
    fam = build_family(f3)
    golden = Mat2.from_indices(f3, ((0, 2), (2, 1)))
    assert golden not in fam.matrices
    other_root = -fam.lam
    v, w = f3(0), f3(2)
    assert Mat2(v, w, w, other_root * w + v) == golden


def test_verify_family_bruteforce_q3():
    report = verify_family(build_family(get_field(3)), "bruteforce")
    assert report.ok
    assert report.size == 6
    assert report.pairs == 15


def test_verify_family_fast_q13():
    report = verify_family(build_family(get_field(13)), "fast")
    assert report.ok
    assert report.size == 156
    assert report.pairs == 12090


def test_verify_family_flags_duplicates():
    field = get_field(3)
    fam = build_family(field)
    spiked = Family(field, fam.alpha, fam.lam, fam.matrices + [fam.matrices[0]])
    report = verify_family(spiked, "fast")
    assert not report.ok
    assert ("not_orthogonal", (0, 6)) in report.violations
    bruteforce = verify_family(spiked, "bruteforce")
    assert ("not_orthogonal", (0, 6)) in bruteforce.violations
    assert ("not_orthogonal_bruteforce", (0, 6)) in bruteforce.violations


def test_verify_family_flags_invalid_members():
    field = get_field(3)
    fam = build_family(field)
    matrices = list(fam.matrices)
    matrices[2] = Mat2.from_indices(field, ((1, 0), (0, 1)))  # lower triangular
    report = verify_family(Family(field, fam.alpha, fam.lam, matrices), "fast")
    assert ("invalid_generator", (2,)) in report.violations


def test_verify_family_guards():
    fam = build_family(get_field(11))
    with pytest.raises(ValueError):
        verify_family(fam, "bruteforce")  # default cap is q <= 9
    with pytest.raises(ValueError):
        verify_family(fam, "thorough")


def test_fast_scan_agrees_with_meets_trivially_q3():
    field = get_field(3)
    fam = build_family(field)
    spiked = Family(field, fam.alpha, fam.lam, fam.matrices + [fam.matrices[3]])
    report = verify_family(spiked, "fast")
    expected = {
        (i, j)
        for i in range(spiked.size)
        for j in range(i + 1, spiked.size)
        if not meets_trivially(spiked.matrices[i], spiked.matrices[j])
    }
    assert {v for kind, v in report.violations if kind == "not_orthogonal"} == expected


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_difference_case_split(q):
    """Differences of distinct members are template matrices or nonzero diagonals."""
    field = get_field(q)
    fam = build_family(field)
    lam = fam.lam
    mats = fam.matrices
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            d = mats[i] - mats[j]
            if d.b:
                assert d.b == d.c
                assert d.d == lam * d.b + d.a  # same template shape, so invertible
            else:
                assert d.c.index == 0
                assert d.a == d.d
                assert d.a  # nonzero diagonal
            assert d.det()


def test_family_is_maximal_at_q3():
    field = get_field(3)
    members = build_family(field).matrices
    extensions = [
        c for c in all_valid_generators(field)
        if all(meets_trivially(c, m) for m in members)
    ]
    assert extensions == []


def test_family_repr_mentions_parameters():
    fam = build_family(get_field(3))
    assert "alpha=1" in repr(fam)
    assert "size=6" in repr(fam)
    assert len(fam) == 6
    assert list(fam)[0].indices() == ((0, 1), (1, 1))

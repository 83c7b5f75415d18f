from fractions import Fraction

import pytest

from chocgame.core import pattern
from chocgame.enumeration import g
from chocgame.errors import CapacityError, DomainError
from chocgame.sierpinski import (ROOT, Octa, Section, SimilarityMap,
                                 SimilarityMismatch, build, check_corner_center,
                                 check_half_congruence, check_refinement,
                                 fit_similarity, half_section, integer_section,
                                 section, subdivide)


def test_subdivide_root():
    kids = subdivide(ROOT)
    assert {(k.cx, k.cy, k.cz) for k in kids} == {
        (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)}
    assert all(k.order == 1 and k.denominator == 2 for k in kids)


@pytest.mark.parametrize("n", range(0, 6))
def test_build_piece_count(n):
    pieces = build(n)
    assert len(pieces) == 6 ** n
    assert len(set(pieces)) == 6 ** n
    for o in pieces:
        assert max(abs(o.cx), abs(o.cy), abs(o.cz)) <= 2 ** n - 1


def test_build_capacity():
    with pytest.raises(CapacityError):
        build(4, max_order=3)


def test_section_validation():
    with pytest.raises(DomainError):
        section(2, 1, 3)  # denominator not 2^n or 2^(n+1)
    with pytest.raises(DomainError):
        section(2, 0, 4)  # plane misses the solid
    with pytest.raises(DomainError):
        section(2, 8, 4)


def test_known_small_sections():
    s11 = integer_section(1, 1)
    assert s11.count == 1 == g(1)
    assert s11.centers == {(0, 0)} and s11.den == 2 and s11.r_num == 1

    s22 = integer_section(2, 2)
    assert s22.centers == {(1, 0), (-1, 0), (0, 1), (0, -1)}
    assert s22.den == 4 and s22.radius == Fraction(1, 4)

    s23 = integer_section(2, 3)
    assert s23.centers == {(0, 0), (2, 0), (-2, 0), (0, 2), (0, -2)}


def test_equator_excludes_point_contacts():
    s12 = integer_section(1, 2)  # z = 0 grazes the two polar octahedra
    assert s12.count == g(2) == 4
    assert s12.centers == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_half_section_radius_and_denominator():
    for n in range(1, 5):
        for m in range(1, 2 ** n):
            sec = half_section(n, m)
            assert sec.radius == Fraction(1, 2 ** (n + 1))
            assert sec.den == 2 ** (n + 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_count_law_and_similarity(n):
    for m in range(1, 2 ** n + 1):
        sec = integer_section(n, m)
        assert sec.count == g(m)
        fit = fit_similarity(sec, pattern(m))
        assert isinstance(fit, SimilarityMap), (n, m, fit)
        # the returned transform really maps every diamond center onto
        # some pattern cell center
        targets = {(Fraction(2 * i - 1, 2), Fraction(2 * j - 1, 2)) for i, j in pattern(m)}
        mapped = {fit.apply(Fraction(cx, sec.den), Fraction(cy, sec.den))
                  for cx, cy in sec.centers}
        assert mapped == targets


def test_similarity_scale_tracks_radius():
    fit = fit_similarity(integer_section(4, 11), pattern(11))
    assert isinstance(fit, SimilarityMap)
    assert fit.scale == Fraction(2 ** 4, 2)  # 1 / (2 r) with r = 1/2^4


def test_fit_similarity_mismatches():
    bad_count = fit_similarity(integer_section(3, 3), pattern(4))
    assert isinstance(bad_count, SimilarityMismatch)
    assert "count" in bad_count.reason

    sec = integer_section(2, 3)
    broken = Section(sec.order, sec.level_num, sec.level_den, sec.r_num, sec.den,
                     frozenset({(0, 0), (2, 0), (-2, 0), (0, 2), (1, 1)}))
    res = fit_similarity(broken, pattern(3))
    assert isinstance(res, SimilarityMismatch)
    assert res.counterexample is not None


@pytest.mark.parametrize("n", range(1, 5))
def test_half_congruence(n):
    for m in range(1, 2 ** n):
        assert check_half_congruence(n, m), (n, m)
    with pytest.raises(DomainError):
        check_half_congruence(n, 2 ** n)


def test_half_congruence_spec_case():
    assert check_half_congruence(3, 2)


@pytest.mark.parametrize("n", range(1, 5))
def test_refinement_and_corner_center(n):
    for m in range(1, 2 ** n + 1):
        assert check_refinement(n, m), (n, m)
        if m >= 2:
            assert check_corner_center(n, m), (n, m)


def test_sections_are_pairwise_disjoint():
    for n, m in [(3, 5), (4, 11), (4, 16)]:
        sec = integer_section(n, m)
        pts = sorted(sec.centers)
        for a in range(len(pts)):
            for b in range(a + 1, len(pts)):
                d = abs(pts[a][0] - pts[b][0]) + abs(pts[a][1] - pts[b][1])
                assert d >= 2 * sec.r_num


def test_fig_section_case():
    # order-4 solid sliced at level 11 reproduces the side-11 pattern
    sec = integer_section(4, 11)
    assert sec.count == g(11) == 29
    assert isinstance(fit_similarity(sec, pattern(11)), SimilarityMap)

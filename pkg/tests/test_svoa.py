import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from shadowforge import svoa
from shadowforge.modforms import chi8, chi_fermi_shadow, chi_half
from shadowforge.qseries import QSeries
from shadowforge.svoa import CharacterPoly

HALF = Fraction(1, 2)
TABLE_RANKS = [Fraction(k, 2) for k in (16, 24, 28, 30, 31, 32, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47)]


def poly(c, *A, voa=False):
    return CharacterPoly(Fraction(c), tuple(Fraction(a) for a in A), voa)


def at(s, c, weight):
    """Coefficient of the state of conformal weight ``weight`` in a rank-c character."""
    return s[weight - Fraction(c) / 24]


# character


def test_character_single_fermion():
    assert svoa.character(poly(HALF, 1), 8) == chi_half(8)


def test_character_e8():
    s = svoa.character(poly(8, 0, 1), 6)
    assert s == chi8(6)
    assert s.valuation == Fraction(-1, 3) and at(s, 8, 1) == 248


def test_character_rank16_long_shadow():
    s = svoa.character(poly(16, -1, 2, 0), 6)
    assert s.valuation == Fraction(-2, 3) and s.leading_coefficient == 1
    assert at(s, 16, HALF) == 0 and at(s, 16, 1) == 240


def test_character_normalization_error():
    with pytest.raises(ValueError, match="not a character normalization"):
        poly(16, 1, 1, 0)


def test_character_poly_validation():
    with pytest.raises(ValueError):
        poly(16, 1, 0)
    with pytest.raises(ValueError):
        poly(12, 1, 0, voa=True)
    with pytest.raises(ValueError):
        svoa.as_rank("1/3")


def test_as_rank_spellings():
    assert svoa.as_rank("23.5") == svoa.as_rank("47/2") == svoa.as_rank("23½") == Fraction(47, 2)


def test_json_round_trip():
    p = poly(Fraction(47, 2), Fraction(-31, 16), Fraction(47, 16), 0)
    data = p.to_json()
    assert data["c"] == [47, 2] and data["A"][0] == [-31, 16] and data["is_voa"] is False
    assert CharacterPoly.from_json(data) == p


# decompose


def test_decompose_e8_prefix():
    assert svoa.decompose(8, [1, 0, 248]).A == (0, 1)


def test_decompose_single_fermion():
    assert svoa.decompose(HALF, [1]).A == (1,)


def test_decompose_rank_23_5_matches_three_term():
    got = svoa.decompose(Fraction(47, 2), [1, 0, 0])
    assert got == svoa.three_term(Fraction(47, 2), 0)
    assert got.A == (Fraction(-31, 16), Fraction(47, 16), 0)


def test_decompose_too_short_and_inconsistent():
    with pytest.raises(ValueError):
        svoa.decompose(16, [1, 0])
    with pytest.raises(ValueError, match="inconsistent"):
        svoa.decompose(8, [1, 0, 248, 1, 999])
    with pytest.raises(ValueError, match="inconsistent"):
        svoa.decompose(8, [2, 0])


def test_decompose_series_round_trip():
    for p in [poly(16, -1, 2, 0), poly(Fraction(47, 2), Fraction(-31, 16), Fraction(47, 16), 0), poly(13, 1, 0)]:
        assert svoa.decompose_series(p.c, svoa.character(p, 6)) == p


def test_decompose_series_voa_flag():
    p = svoa.decompose_series(8, chi8(5), is_voa=True)
    assert p.is_voa and p.A == (0, 1)


# three_term


@pytest.mark.parametrize(
    "c, dim1, A",
    [
        (16, 240, (-1, 2, 0)),
        (8, 248, (0, 1)),
        (12, 276, (Fraction(-1, 2), Fraction(3, 2))),
        (Fraction(47, 2), 0, (Fraction(-31, 16), Fraction(47, 16), 0)),
    ],
)
def test_three_term_examples(c, dim1, A):
    assert svoa.three_term(c, dim1).A == A


def test_three_term_out_of_range():
    with pytest.raises(ValueError, match="formula out of range"):
        svoa.three_term(24, 0)


def test_three_term_unrealizable_below_16():
    with pytest.raises(ValueError):
        svoa.three_term(12, 277)


def test_three_term_series_route_matches_polynomial_route():
    for c, d in [(16, 240), (16, 300), (20, 140), (Fraction(47, 2), 5), (12, 276)]:
        p = svoa.three_term(c, d)
        assert svoa.three_term_character(c, d, 5) == svoa.character(p, 5)
        assert svoa.three_term_shadow(c, d, 5) == svoa.shadow_character(p, 5)


@pytest.mark.parametrize("c", TABLE_RANKS)
def test_three_term_character_leading_terms(c):
    bound = svoa.long_shadow_dim1(c)
    for d in (bound, bound + 3):
        s = svoa.three_term_character(c, d, 3)
        assert at(s, c, 0) == 1 and at(s, c, HALF) == 0 and at(s, c, 1) == d


# shadow_character, minimal_weight, shadow_report


def test_shadow_single_fermion():
    s = svoa.shadow_character(poly(HALF, 1), 8)
    assert s == chi_fermi_shadow(8) and s.valuation == Fraction(1, 24)


def test_shadow_rank16():
    rep = svoa.shadow_report(poly(16, -1, 2, 0), 6)
    assert rep.h == 1 and rep.dim_at_h == 512 and rep.shadow_char.valuation == Fraction(1, 3)
    data = rep.to_json()
    assert data["h"] == [1, 1] and data["dim_at_h"] == [512, 1]


def test_shadow_e8_is_itself():
    assert svoa.shadow_character(poly(8, 0, 1), 6) == chi8(6)
    assert svoa.shadow_character(poly(8, 0, 1, voa=True), 6) == chi8(6)


def test_shadow_rank_23_5():
    rep = svoa.shadow_report(svoa.three_term(Fraction(47, 2), 0), 6)
    assert rep.h == Fraction(47, 16) - 1 and rep.dim_at_h == 96256


@pytest.mark.parametrize("c", [HALF, 1, 8, 16, Fraction(47, 2)])
def test_minimal_weight_of_pure_fermions(c):
    p = CharacterPoly.fermions(int(2 * c))
    assert svoa.minimal_weight(svoa.shadow_character(p, 6), c) == Fraction(c) / 8
    assert svoa.minimal_weight(svoa.character(p, 6), c) == 0


def test_minimal_weight_zero_series():
    with pytest.raises(ValueError, match="minimal weight exceeds precision"):
        svoa.minimal_weight(QSeries.zero(3), 8)


def test_multiplier_identity():
    # (alpha * sqrt(2)^(2c-16i))^2 = alpha^2 * 2^(2c-16i), checked exactly in the squares
    for twice_c in range(0, 60):
        c = Fraction(twice_c, 2)
        for i in range(svoa.top_index(c) + 1):
            m = svoa.shadow_multiplier(c, i)
            assert m**2 == svoa.alpha_squared(c) * Fraction(2) ** int(2 * c - 16 * i)


# theorem checks


def test_theorem1_examples():
    v = svoa.theorem1_check(poly(16, 1, 0, 0), 6)
    assert v.h == 2 and v.extremal and v.pure_fermion and v.holds
    v = svoa.theorem1_check(poly(16, -1, 2, 0), 6)
    assert v.h == 1 and not v.extremal and v.holds
    v = svoa.theorem1_check(poly(8, 0, 1), 6)
    assert v.h == 0 and v.vanishing_ok and v.holds


def test_long_shadow_bounds():
    assert svoa.long_shadow_bounds(8) == (248, 1)
    assert svoa.long_shadow_bounds(Fraction(47, 2)) == (0, 96256)
    assert svoa.long_shadow_bounds(22) == (66, 45056)


def test_shadow_deficit_examples():
    assert svoa.shadow_deficit(16, 240) == 0
    assert svoa.shadow_deficit(16, 240 + 256) == 1
    assert svoa.shadow_deficit(Fraction(47, 2), 0) == 0


# tensor and strip


def test_tensor_examples():
    f = poly(HALF, 1)
    assert svoa.tensor(f, f) == poly(1, 1)
    unit = poly(0, 1)
    p = poly(16, -1, 2, 0)
    assert svoa.tensor(p, unit) == p
    e8 = poly(8, 0, 1, voa=True)
    both = svoa.tensor(e8, e8)
    assert both.A == (0, 0, 1) and both.is_voa
    assert svoa.lemma_factor(HALF, HALF) == 2 and svoa.lemma_factor(8, 8) == 1 and svoa.lemma_factor(HALF, 8) == 1


def test_tensor_shadow_lemma_fermions():
    f = poly(HALF, 1)
    lhs = svoa.shadow_character(svoa.tensor(f, f), 6)
    assert lhs == (chi_fermi_shadow(6) ** 2).scale(2)


def test_strip_examples():
    for c in (HALF, 8, 16):
        p = CharacterPoly.fermions(int(2 * c))
        assert svoa.strip_fermions(p, int(2 * c)) == poly(0, 1)
    p = poly(16, -1, 2, 0)
    assert svoa.strip_fermions(p, 0) == p
    v = poly(16, 0, 1, 0)
    w = svoa.strip_fermions(v, 16)
    assert w == poly(8, 0, 1)
    hv = svoa.shadow_report(v, 6).h
    hw = svoa.shadow_report(w, 6).h
    assert hv - hw == 1


def test_strip_errors():
    with pytest.raises(ValueError, match="fermion count exceeded"):
        svoa.strip_fermions(poly(16, 0, 0, 1), 1)
    with pytest.raises(ValueError, match="fermion count exceeded"):
        svoa.strip_fermions(poly(1, 1), 3)


# properties

half_ranks = st.integers(1, 47).map(lambda k: Fraction(k, 2))


@settings(max_examples=40, deadline=None)
@given(half_ranks, st.integers(-300, 300))
def test_theorem3_property(c, offset):
    # shadow of the three-term character: leading weight c/8 - 2 exactly when dim V_1 is off the bound
    bound = svoa.long_shadow_dim1(c)
    d = bound + offset
    assume(d >= 0)
    s = svoa.three_term_shadow(c, d, 4)
    deficit = svoa.shadow_deficit(c, d)
    assert at(s, c, c / 8 - 2) == deficit
    h = svoa.minimal_weight(s, c)
    if d == bound:
        assert h == c / 8 - 1
        assert at(s, c, h) == Fraction(2) ** (math.floor(c) - 11) * c
    else:
        assert h == c / 8 - 2
    if deficit >= 0:
        assert d >= bound


physical_blocks = st.sampled_from(
    [
        CharacterPoly.fermions(1),
        CharacterPoly.fermions(2),
        CharacterPoly.e8(),
        svoa.three_term(16, 240),
        svoa.three_term(12, 276),
        svoa.three_term(Fraction(47, 2), 0),
    ]
)


@settings(max_examples=25, deadline=None)
@given(st.lists(physical_blocks, min_size=1, max_size=3))
def test_theorem1_property_on_products(blocks):
    p = blocks[0]
    for b in blocks[1:]:
        p = svoa.tensor(p, b)
    prec = math.ceil(p.c / 8) + 2  # h can reach c/8
    chi = svoa.character(p, prec)
    sh = svoa.shadow_character(p, prec)
    assert all(x >= 0 for x in chi.coeffs) and all(x >= 0 for x in sh.coeffs)
    v = svoa.theorem1_check(p, prec)
    assert v.holds and v.h <= p.c / 8


@settings(max_examples=40, deadline=None)
@given(
    st.integers(0, 40).map(lambda k: Fraction(k, 2)),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
)
def test_theorem1_property_random(c, raw):
    m = svoa.top_index(c) + 1
    A = [Fraction(a) for a in raw[: m - 1]] if m > 1 else []
    A = [1 - sum(A)] + A
    p = CharacterPoly(c, tuple(A))
    chi = svoa.character(p, 4)
    sh = svoa.shadow_character(p, 4)
    if all(x >= 0 for x in chi.coeffs) and all(x >= 0 for x in sh.coeffs):
        assert svoa.minimal_weight(sh, c) <= c / 8


@settings(max_examples=30, deadline=None)
@given(half_ranks)
def test_three_term_boundary_identity(c):
    assume(c < 24)
    s = svoa.three_term_character(c, svoa.long_shadow_dim1(c), 3)
    assert s.valuation == -c / 24 and s.leading_coefficient == 1
    assert at(s, c, HALF) == 0 and at(s, c, 1) == svoa.long_shadow_dim1(c)

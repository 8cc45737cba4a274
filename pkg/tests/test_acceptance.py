"""Acceptance criteria 1-12, all checked by exact equality.

Each criterion is one test named ``test_criterion_NN_*``; the summary hook
in ``conftest.py`` prints one PASS/FAIL line per criterion.
"""

import math
from fractions import Fraction

from shadowforge import codes, lattice, liedata, svoa
from shadowforge.modforms import chi8, chi_fermi_shadow, eta, theta_e8, theta_z
from shadowforge.svoa import CharacterPoly

HALF = Fraction(1, 2)
TABLE_DIMS = [248, 276, 266, 255, 248, 240, 221, 210, 198, 185, 171, 156, 140, 123, 105, 86, 66, 45, 23, 0]


def at(s, c, weight):
    return s[weight - Fraction(c) / 24]


def table_polys():
    return [(e.c, e.dim_v1, svoa.three_term(e.c, e.dim_v1)) for e in liedata.TABLE]


def test_criterion_01_fermi_shadow_expansion():
    f = chi_fermi_shadow(6)
    assert f.valuation == Fraction(1, 24)
    assert [f[Fraction(1, 24) + k] for k in range(4)] == [1, 1, 1, 2]


def test_criterion_02_chi8_expansion():
    y = chi8(6)
    assert y.valuation == Fraction(-1, 3)
    assert [y[Fraction(-1, 3) + k] for k in range(3)] == [1, 248, 4124]


def test_criterion_03_theorem1():
    for c in (HALF, 1, 8, 16, Fraction(47, 2)):
        p = CharacterPoly.fermions(int(2 * c))
        assert svoa.shadow_report(p, 6).h == c / 8
    for c, _, p in table_polys():
        h = svoa.shadow_report(p, 6).h
        assert h == c / 8 - 1 < c / 8


def test_criterion_04_boundary_character():
    assert [e.dim_v1 for e in liedata.TABLE] == TABLE_DIMS
    for c, dim1, _ in table_polys():
        s = svoa.character(svoa.three_term(c, svoa.long_shadow_dim1(c)), 3)
        assert at(s, c, 0) == 1
        assert at(s, c, HALF) == 0
        assert at(s, c, 1) == dim1


def test_criterion_05_shadow_leading_coefficient():
    expected = {Fraction(16): 512, Fraction(47, 2): 96256, Fraction(8): 1}
    for c, _, p in table_polys():
        rep = svoa.shadow_report(p, 6)
        assert rep.dim_at_h == Fraction(2) ** (math.floor(c) - 11) * c
        if c in expected:
            assert rep.dim_at_h == expected[c]


def test_criterion_06_shadow_deficit_sign():
    prec = 6
    for c in (Fraction(12), Fraction(16), Fraction(20), Fraction(47, 2)):
        bound = svoa.long_shadow_dim1(c)
        ok = svoa.three_term_shadow(c, bound, prec)
        assert all(a >= 0 for a in ok.coeffs)
        assert svoa.shadow_deficit(c, bound) == 0
        bad = svoa.three_term_shadow(c, bound - 1, prec)
        assert svoa.shadow_deficit(c, bound - 1) < 0
        assert any(a < 0 for a in bad.coeffs)
        assert at(bad, c, c / 8 - 2) == svoa.shadow_deficit(c, bound - 1)


def test_criterion_07_lattice_route_matches_polynomial_route():
    prec = 11
    for name in ("z1", "z2", "e8", "d12plus"):
        lat = lattice.builtin(name)
        n = lat.n
        p = svoa.decompose_series(n, lattice.lattice_character(lat, prec), is_voa=lat.is_even)
        poly_route = svoa.shadow_character(p, prec)
        lattice_route = lattice.shadow_theta(lat, prec) * eta(prec).inv() ** n
        base = poly_route.valuation
        assert base == lattice_route.valuation
        assert poly_route.agrees_with(lattice_route, int(48 * (base + 10)))


def test_criterion_08_corollary():
    e8 = lattice.corollary_check(lattice.e8_lattice())
    assert e8.norm2 == 240 == 2 * 8 * (23 - 8)
    assert (e8.char_min, e8.char_count) == (0, 1) and e8.passed
    d12 = lattice.corollary_check(lattice.builtin("d12plus"))
    assert d12.norm2 == 264 == 2 * 12 * (23 - 12)
    assert d12.char_min == 4 == 12 - 8
    assert d12.char_count == 24 == 2 ** (12 - 11) * 12 and d12.passed
    for n in range(1, 13):
        cv = lattice.characteristic_vectors(lattice.z_lattice(n))
        assert (cv.min_norm, cv.min_count) == (n, 2**n)


def test_criterion_09_construction_a():
    assert lattice.theta(codes.construction_a(codes.repetition2()), 8) == theta_z(8) ** 2
    assert lattice.theta(codes.construction_a(codes.extended_hamming8()), 6) == theta_e8(6)


def test_criterion_10_table():
    checks = liedata.verify_table()
    assert len(checks) == 20
    for ch in checks:
        assert ch.expected == ch.entry.dim_v1 == ch.lie_sum


def test_criterion_11_tensor_lemma():
    prec = 6
    fermion = CharacterPoly.fermions(1)
    e8 = CharacterPoly.e8()
    pairs = [
        (fermion, fermion),
        (e8, e8),
        (CharacterPoly.fermions(16), e8),
        (CharacterPoly.fermions(16), CharacterPoly.fermions(16)),
        (fermion, e8),
        (fermion, CharacterPoly.fermions(16)),
        (svoa.three_term(Fraction(47, 2), 0), fermion),
    ]
    seen = set()
    for p, q in pairs:
        seen.add((p.c, q.c))
        m = svoa.lemma_factor(p.c, q.c)
        lhs = svoa.shadow_character(svoa.tensor(p, q), prec)
        rhs = (svoa.shadow_character(p, prec) * svoa.shadow_character(q, prec)).scale(m)
        assert lhs == rhs
    assert {(HALF, HALF), (8, 8), (HALF, 8), (Fraction(47, 2), HALF)} <= seen


def test_criterion_12_fermion_stripping():
    prec = 6
    bases = [svoa.three_term(Fraction(47, 2), 0), svoa.three_term(16, 240), CharacterPoly.fermions(3)]
    for r in (1, 2, 16):
        for w in bases:
            v = svoa.tensor(w, CharacterPoly.fermions(r))
            stripped = svoa.strip_fermions(v, r)
            assert stripped == w
            again = svoa.tensor(stripped, CharacterPoly.fermions(r))
            assert svoa.character(again, prec) == svoa.character(v, prec)
            hv = svoa.shadow_report(v, prec).h
            hw = svoa.shadow_report(w, prec).h
            assert hv == hw + Fraction(r, 16)

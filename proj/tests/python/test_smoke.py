"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import jumpform as jf


def test_standard_forms_and_inertia():
    e8 = jf.e8_form()
    assert e8.rank == 8
    i = jf.inertia(e8)
    assert (i.b_plus, i.b_minus, i.b_zero) == (8, 0, 0)
    assert jf.determinant(e8) == 1
    assert jf.parity(e8) == "even"
    assert jf.is_unimodular(jf.hyperbolic_form())
    assert jf.determinant(jf.hyperbolic_form()) == -1


def test_pairing_and_big_integers():
    h = jf.hyperbolic_form()
    assert jf.pairing(h, [1, 0], [0, 1]) == 1
    big = 10**30
    form = jf.IntegerForm([[1]])
    assert jf.self_intersection(form, [big]) == big * big


def test_form_constructor_validates():
    with pytest.raises(jf.MalformedInputError):
        jf.IntegerForm([[0, 1], [2, 0]])


def test_classification():
    dec = jf.classify_indefinite_unimodular(jf.diagonal_form(1, 1))
    assert dec.parity == "odd"
    assert (dec.diag_plus, dec.diag_minus) == (1, 1)
    with pytest.raises(jf.UnsupportedClassificationError):
        jf.classify_indefinite_unimodular(jf.e8_form())


def test_characteristic():
    coset = jf.find_characteristic(jf.diagonal_form(1, 1))
    assert coset.base == [1, 1]
    assert coset.unimodular
    assert jf.is_characteristic(jf.diagonal_form(1, 0), [1])
    assert jf.enumerate_characteristic(jf.diagonal_form(1, 0), 1) == [[-1], [1]]
    rep = jf.validate_c1_almost_complex(jf.diagonal_form(1, 0), [3])
    assert rep.characteristic and rep.wu_identity


def test_adjunction_identity():
    assert jf.jump_count(0, 1, 3) == 0
    assert jf.genus_from(0, 0, 0) == 1
    assert jf.self_int_from_geometry(jf.SurfaceGeometry(0, 3, 0)) == 1
    assert jf.lai_dim4_check(0, 1, 3, 0)
    with pytest.raises(jf.ParityError):
        jf.jump_count(0, 0, 1)


def test_reconstruction():
    torus = jf.SurfaceGeometry(1, 0, 0)
    res = jf.reconstruct_gram([torus, torus], {(0, 1): jf.SurfaceGeometry(2, 0, 0)})
    assert res.form == jf.hyperbolic_form()
    assert res.unimodular


def test_bounds_are_exact_fractions():
    iv = jf.jump_bounds(3, 19, 0, "negative")
    assert iv.lo == Fraction(-79)
    assert iv.hi == Fraction(-1, 9)
    assert jf.check_bounds(0, 1, 0, 3, "positive")
    si = jf.char_sphere_selfint_bounds(1, 0, "positive")
    assert (si.lo, si.hi) == (Fraction(1), Fraction(1))
    rng = jf.integer_feasible(iv, True)
    assert rng.empty


def test_detector():
    j = jf.AlmostComplexStructure.standard()
    sphere = jf.round_sphere()
    rep = jf.find_jump_points(sphere, j, 64)
    assert len(rep.points) == 2
    assert sorted(p.index for p in rep.points) == [-1, 1]
    assert rep.total_index == 0
    assert jf.total_algebraic_count(jf.clifford_torus(), j, 32) == 0
    assert abs(abs(jf.defect(jf.clifford_torus(), j, 0, 0.5, 1.0)) - 1) < 1e-12
    with pytest.raises(jf.IdenticallyComplexError):
        jf.find_jump_points(jf.holomorphic_graph(2), j, 32)

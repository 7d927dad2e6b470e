"""Exact integration, Gram matrices, positivity, indecomposability, numerics."""

from fractions import Fraction as F

import pytest

from bc2mvop.leading import C_VARS, X_VARS
from bc2mvop.lie import MsfLabel, PairParams, label_weight, weyl_dim
from bc2mvop.orthogonality import (beta_moment, gram, in_region,
                                   indecomposability_check,
                                   indecomposability_suite,
                                   integrate_against_delta, numeric_crosscheck,
                                   numeric_suite, orthogonality_suite,
                                   positivity_check, region_grid,
                                   region_integral, total_mass_check)
from bc2mvop.poly import MultiPoly


def test_beta_moments_by_hand():
    # B(p) = p! (m-2)! / (2 (p+m-1)!)
    assert beta_moment(3, 0) == F(1, 4)
    assert beta_moment(3, 1) == F(1, 12)
    assert beta_moment(3, 2) == F(1, 24)
    assert beta_moment(4, 0) == F(1, 6)


def test_delta_integral_of_one():
    # quarter-torus mass of the squared vandermonde density
    assert integrate_against_delta(PairParams(3, 0, 0), MultiPoly.one(C_VARS)) \
        == F(1, 36)


def test_delta_integral_even_monomial():
    p = PairParams(3, 0, 0)
    c1 = MultiPoly.var(C_VARS, "c1")
    c2 = MultiPoly.var(C_VARS, "c2")
    assert integrate_against_delta(p, (c1 ** 2) * (c2 ** 4)) == F(1, 720)
    with pytest.raises(ValueError):
        integrate_against_delta(p, c1)


def test_region_integral_of_one():
    assert region_integral(PairParams(3, 0, 0), MultiPoly.one(X_VARS)) == F(8, 9)


def test_total_mass_reported_with_reciprocal():
    r = total_mass_check(3)
    assert r.status == "REPORTED"
    assert "4/9" in r.detail


def test_in_region_corners_and_samples():
    assert in_region(F(2), F(1))
    assert in_region(F(-2), F(1))
    assert in_region(F(0), F(-1))
    assert in_region(F(0), F(0))
    assert in_region(F(1), F(0))
    assert not in_region(F(0), F(1))
    assert not in_region(F(-2), F(-1))
    assert not in_region(F(3), F(1))


def test_gram_diagonal_and_kappa_small_case():
    p = PairParams(3, 1, 0)
    G = gram(p, (0, 0), (0, 0))
    assert G[0][1] == 0 and G[1][0] == 0
    assert G[0][0] == F(32, 45)
    assert G[1][1] == F(32, 405)
    for k in range(2):
        dim = weyl_dim(label_weight(p, MsfLabel(k, 0, 0)))
        assert G[k][k] * dim == F(32, 9)


def test_gram_off_pair_vanishes():
    p = PairParams(3, 1, 0)
    G = gram(p, (0, 0), (1, 0))
    assert all(v == 0 for row in G for v in row)


def test_orthogonality_suite_statuses():
    results = orthogonality_suite(PairParams(3, 1, 0), 2)
    by_status = {}
    for r in results:
        by_status.setdefault(r.status, []).append(r.name)
    assert "FAIL" not in by_status, by_status.get("FAIL")
    # exactly one reported item: the stored norm-constant closed form
    assert len(by_status.get("REPORTED", [])) == 1


def test_positivity():
    for params in (PairParams(3, 1, 0), PairParams(3, 2, 1), PairParams(4, 1, 2)):
        assert positivity_check(params).status == "PASS"


def test_indecomposability_dimensions():
    assert indecomposability_check(PairParams(3, 1, 0)) == (1, 1)
    assert indecomposability_check(PairParams(3, 2, 1)) == (1, 1)
    assert indecomposability_check(PairParams(4, 2, 0)) == (1, 1)
    results = indecomposability_suite(PairParams(3, 1, 0))
    assert all(r.status == "PASS" for r in results)


def test_numeric_crosscheck_diag_and_offdiag():
    p = PairParams(3, 1, 0)
    assert numeric_crosscheck(p, (0, 0), (0, 0)).status == "PASS"
    assert numeric_crosscheck(p, (1, 0), (0, 0)).status == "PASS"
    assert numeric_crosscheck(p, (1, 0), (1, 0)).status == "PASS"


def test_numeric_suite_green():
    results = numeric_suite(PairParams(3, 1, 1))
    assert all(r.status == "PASS" for r in results)


def test_region_grid_shape():
    rows = region_grid(PairParams(3, 1, 0))
    assert len(rows) == 1000
    x1, x2, vals, inside = rows[0]
    assert (x1, x2) == (F(-2), F(-1))
    assert len(vals) == 4
    assert inside in (True, False)
    assert any(r[3] for r in rows)
    assert not all(r[3] for r in rows)

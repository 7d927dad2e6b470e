"""Weights, labels, dimensions, and Casimir eigenvalues."""

from fractions import Fraction as F

import pytest

from bc2mvop.lie import (DualData, MsfLabel, PairParams, Weight, bottom_weight,
                         casimir_eigenvalue, casimir_eigenvalue_ip, dominance_leq,
                         dualize, fundamental, label_weight, labels_up_to,
                         root_coordinates, spherical_lambda1, spherical_lambda2,
                         tensor_fund_decomp, weyl_dim, zero_weight)


def test_params_validation():
    PairParams(3, 1, 0)
    PairParams(3, 1, -1)   # b = -a, the far regime
    PairParams(4, 2, -5)
    with pytest.raises(ValueError):
        PairParams(3, 2, -1)   # strictly between -a and 0
    with pytest.raises(ValueError):
        PairParams(3, 3, -2)


def test_params_regime_message_names_the_gap():
    with pytest.raises(ValueError, match="-a < b < 0"):
        PairParams(3, 2, -1)


def test_params_helpers():
    p = PairParams(3, 2, 1)
    assert p.size == 3
    assert p.tag() == "(m=3,a=2,b=1)"
    assert hash(p) == hash(PairParams(3, 2, 1))


def test_weyl_dim_small_cases():
    # SU(5): defining rep and adjoint
    assert weyl_dim(fundamental(3, 1)) == 5
    assert weyl_dim(spherical_lambda1(3)) == 24
    assert weyl_dim(zero_weight(3)) == 1


def test_tensor_decomposition_dimensions_add_up():
    for m in (3, 4):
        for i, j in ((1, 1), (1, 2), (2, 2), (1, m + 1), (2, m + 1)):
            total = weyl_dim(fundamental(m, i)) * weyl_dim(fundamental(m, j))
            parts = tensor_fund_decomp(m, i, j)
            assert sum(weyl_dim(w) for w in parts) == total


def test_spherical_eigenvalues():
    for m in (3, 4, 5):
        assert casimir_eigenvalue_ip(spherical_lambda1(m)) == 2 * m + 4
        assert casimir_eigenvalue_ip(spherical_lambda2(m)) == 4 * m + 4


def test_dominance_order():
    m = 3
    assert dominance_leq(zero_weight(m), spherical_lambda1(m))
    assert not dominance_leq(spherical_lambda1(m), zero_weight(m))
    # fundamental weights differ by a non-integral root combination
    coords = root_coordinates(fundamental(m, 2) - fundamental(m, 1))
    assert any(x.denominator != 1 for x in coords)
    assert not dominance_leq(fundamental(m, 1), fundamental(m, 2))


def test_closed_form_matches_inner_product_route():
    for params in (PairParams(3, 1, 0), PairParams(3, 2, 1), PairParams(4, 3, 2)):
        for label in labels_up_to(params, 2):
            got = casimir_eigenvalue(params, label)
            want = casimir_eigenvalue_ip(label_weight(params, label))
            assert got == want, (params, label)


def test_closed_form_refuses_far_regime():
    with pytest.raises(ValueError):
        casimir_eigenvalue(PairParams(3, 1, -1), MsfLabel(0, 0, 0))


def test_eigenvalue_ip_works_in_far_regime():
    p = PairParams(3, 1, -1)
    val = casimir_eigenvalue_ip(label_weight(p, MsfLabel(0, 0, 0)))
    assert val >= 0


def test_label_enumeration_count():
    p = PairParams(3, 1, 0)
    labels = labels_up_to(p, 1)
    # two bottom indices, three degree pairs with d1+d2 <= 1
    assert len(labels) == 6
    assert len(set(labels)) == 6
    assert MsfLabel(1, 0, 1) in labels


def test_zero_label_zero_weight():
    p = PairParams(3, 0, 0)
    w = label_weight(p, MsfLabel(0, 0, 0))
    assert w.is_zero()
    assert weyl_dim(w) == 1
    assert casimir_eigenvalue_ip(w) == 0


def test_bottom_weights_are_dominant():
    for params in (PairParams(3, 2, 0), PairParams(4, 3, 1), PairParams(3, 2, -2)):
        for i in range(params.a + 1):
            assert bottom_weight(params, i).is_dominant()


def test_dualize_involution():
    p = PairParams(3, 1, 0)
    q, data = dualize(p)
    assert q == PairParams(3, 1, -1)
    assert isinstance(data, DualData)
    back, _ = dualize(q)
    assert back == p


def test_dual_index_reversal():
    p = PairParams(3, 2, 1)
    _, data = dualize(p)
    assert [data.index(i) for i in range(3)] == [2, 1, 0]


def test_dual_weights_are_diagram_flips():
    p = PairParams(3, 2, 1)
    q, data = dualize(p)
    for i in range(p.a + 1):
        w = bottom_weight(p, i)
        wd = bottom_weight(q, data.index(i))
        assert wd == w.dual()
        assert weyl_dim(wd) == weyl_dim(w)


def test_weight_arithmetic():
    w = fundamental(3, 1) + 2 * fundamental(3, 2)
    assert w.omega == (1, 2, 0, 0)
    assert (w - w).is_zero()
    assert (-w).omega == (-1, -2, 0, 0)

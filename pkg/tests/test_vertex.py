import pytest
from hypothesis import given, settings, strategies as st

from extverts.algebra import FIELD, m, ratfun_equal, t1, t2
from extverts.geometry import euler_class, ext_character, nekrasov_sum, tangent_weights
from extverts.partitions import Partition, partitions_upto
from extverts.symfunc import SymFunc
from extverts.vertex import (
    EQUIV, fixed_point_class, gamma_apply, gamma_matrix_element, gamma_trace, geom_pairing,
    nakajima_adjoint, serre_partner, w_matrix_element,
)

p = SymFunc.p
VAC = SymFunc.one()


def test_geom_pairing_examples():
    assert geom_pairing(VAC, VAC) == 1
    assert ratfun_equal(geom_pairing(p(1), p(1)), 1 / (t1 * t2))
    f = fixed_point_class((1,))
    assert ratfun_equal(geom_pairing(f, f), t1 * t2)


def test_geom_pairing_sign_in_degree_two():
    assert ratfun_equal(geom_pairing(p(2), p(2)), -2 / (t1 * t2))
    assert ratfun_equal(geom_pairing(p(1, 1), p(1, 1)), 2 / (t1 * t2) ** 2)


def test_fixed_point_class_examples():
    assert fixed_point_class(()) == VAC
    assert fixed_point_class((1,)) == p(1).scale(t1 * t2)
    expected = (p(1, 1).scale(t1**2) - p(2).scale(t1)).scale(t2**2)
    assert fixed_point_class((1, 1)) == expected


@pytest.mark.parametrize("lam", partitions_upto(4), ids=str)
def test_norm_bridge(lam):
    f = fixed_point_class(lam)
    assert ratfun_equal(geom_pairing(f, f), tangent_weights(lam).value())


def test_fixed_points_orthogonal():
    ps = partitions_upto(4)
    for a in ps:
        for b in ps:
            if a != b and a.size == b.size:
                assert geom_pairing(fixed_point_class(a), fixed_point_class(b)) == 0


small = [Partition(x) for x in [(), (1,), (2,), (1, 1), (2, 1), (3,)]]


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3),
       st.lists(st.tuples(st.sampled_from(small), st.integers(-2, 2)), min_size=1, max_size=3),
       st.lists(st.tuples(st.sampled_from(small + [Partition((3, 1)), Partition((2, 2))]), st.integers(-2, 2)),
                min_size=1, max_size=3))
def test_nakajima_adjointness(n, fs, gs):
    f = SymFunc({lam: c * (m + 1) for lam, c in fs})
    g = SymFunc({lam: c * t1 for lam, c in gs})
    assert ratfun_equal(geom_pairing(p(n) * f, g), geom_pairing(f, nakajima_adjoint(n, g)))


def test_gamma_on_vacuum():
    out = gamma_apply(VAC, "both", degree_cap=1)
    assert out[1] == p(1).scale(m)
    assert gamma_apply(VAC, "annihilation") == {0: VAC}


def test_rank_one_matrix_elements():
    up = gamma_matrix_element(VAC, fixed_point_class((1,)))
    assert up.support() == [1] and ratfun_equal(up[1], m)
    down = gamma_matrix_element(fixed_point_class((1,)), VAC)
    assert down.support() == [-1] and ratfun_equal(down[-1], m + t1 + t2)


def test_w_examples():
    assert w_matrix_element((), ()) == {0: FIELD.one}
    assert ratfun_equal(w_matrix_element((), (1,))[1], m)
    assert ratfun_equal(w_matrix_element((1,), (1,))[0], (m + t1) * (m + t2))


@pytest.mark.parametrize("lam", partitions_upto(3), ids=str)
def test_theorem_small(lam):
    for mu in partitions_upto(3):
        w = w_matrix_element(lam, mu)
        assert w.support() == [mu.size - lam.size]
        assert ratfun_equal(w[mu.size - lam.size], euler_class(ext_character(lam, mu)).value())


def test_serre_matrix_small():
    for lam in partitions_upto(2):
        for mu in partitions_upto(2):
            w, s = w_matrix_element(lam, mu), serre_partner(lam, mu)
            assert w.support() == s.support()
            assert all(ratfun_equal(w[k], s[k]) for k in w.support())


def test_trace_examples_and_basis_independence():
    tr = gamma_trace(3)
    assert tr[0] == 1
    assert ratfun_equal(tr[1], (m + t1) * (m + t2) / EQUIV)
    assert tr == gamma_trace(3, basis="fixed") == nekrasov_sum(3)
    with pytest.raises(ValueError):
        gamma_trace(1, basis="schur")

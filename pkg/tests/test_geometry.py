import pytest

from extverts.algebra import FIELD, Laurent, laurent_extract, m, ratfun_equal, substitute, t1, t2
from extverts.geometry import (
    STRUCTURE_SHEAF, WeightProduct, ZeroWeightError, euler_class, euler_function, ext_character,
    ext_character_hooks, ext_character_hooks_swapped, ext_character_ratfun, ideal_character,
    ideal_character_columns, nekrasov_exponent, nekrasov_product, nekrasov_sum, nekrasov_term,
    serre_dual, sum_over_fixed_points, tangent_weights,
)
from extverts.partitions import enumerate_partitions, partitions_upto

Z1, Z2, ONE, Z1Z2 = (Laurent({k: 1}) for k in [(1, 0), (0, 1), (0, 0), (1, 1)])


def test_ideal_character_examples():
    assert ideal_character(()) == STRUCTURE_SHEAF
    assert ideal_character((1,)) == STRUCTURE_SHEAF - 1
    colength = laurent_extract(STRUCTURE_SHEAF - ideal_character((2, 1)))
    assert colength.mass() == 3 and len(colength.terms) == 3


@pytest.mark.parametrize("lam", partitions_upto(5), ids=str)
def test_row_and_column_summations_agree(lam):
    assert ideal_character(lam) == ideal_character_columns(lam)


def test_ext_character_examples():
    assert ext_character_ratfun((), ()) == Laurent()
    assert ext_character_ratfun((1,), (1,)) == Z1 + Z2
    assert ext_character_ratfun((1,), ()) == Z1Z2
    assert ext_character_hooks((), (1,)) == ONE
    assert ext_character_hooks((1,), (1,)) == Z1 + Z2
    expected = Laurent({(-1, 1): 1, (0, 1): 1, (2, 0): 1, (1, 0): 1})
    assert ext_character_hooks((2,), (2,)) == expected


@pytest.mark.parametrize("lam", partitions_upto(4), ids=str)
def test_two_routes_and_mass(lam):
    for mu in partitions_upto(4):
        c = ext_character_ratfun(lam, mu)
        assert c == ext_character_hooks(lam, mu)
        assert c.mass() == lam.size + mu.size and c.nonnegative()
        assert c == ext_character_hooks_swapped(lam, mu)
        assert c == serre_dual(ext_character(mu, lam))


def test_serre_dual_examples():
    assert serre_dual(ext_character((), (1,))) == ext_character((1,), ())
    assert serre_dual(Z1 + Z2) == Z1 + Z2
    assert serre_dual(Laurent()) == Laurent()


def test_euler_class_examples():
    assert ratfun_equal(euler_class(Z1 + Z2, True).value(), (m + t1) * (m + t2))
    assert ratfun_equal(euler_class(ONE, True).value(), m)
    assert euler_class(Laurent(), True).value() == 1
    assert euler_class(ONE, False).has_zero
    with pytest.raises(ValueError):
        euler_class(-ONE)


def test_zero_weight_is_poisoned():
    with pytest.raises(ZeroWeightError):
        WeightProduct([(1, 0, 0)]) / euler_class(ONE, False)


def test_tangent_weight_examples():
    assert ratfun_equal(tangent_weights((1,)).value(), t1 * t2)
    assert ratfun_equal(tangent_weights((2,)).value(), 2 * t1 * (t2 - t1) * t1 * t2)
    assert tangent_weights(()).value() == 1
    for lam in partitions_upto(6):
        assert tangent_weights(lam).degree == 2 * lam.size


def test_weight_product_json():
    w = euler_class(Z1 + Z2 * 2, True)
    assert WeightProduct.from_json(w.to_json()) == w
    assert w.to_json()[0] == {"m": 1, "t1": 0, "t2": 1}


def test_nekrasov_low_orders():
    s = nekrasov_sum(2)
    assert s[0] == 1
    assert ratfun_equal(s[1], (m + t1) * (m + t2) / (t1 * t2))
    brute = nekrasov_term((2,)) + nekrasov_term((1, 1))
    assert ratfun_equal(s[2], brute)


def test_factored_sum_matches_naive_sum():
    for n in range(5):
        naive = sum((nekrasov_term(lam) for lam in enumerate_partitions(n)), FIELD.zero)
        assert ratfun_equal(sum_over_fixed_points(n), naive)


def test_nekrasov_product_examples():
    p = nekrasov_product(3)
    assert p[0] == 1
    assert ratfun_equal(p[1], m * (m + t1 + t2) / (t1 * t2) + 1)
    assert ratfun_equal(p[1], (m + t1) * (m + t2) / (t1 * t2))
    massless = [substitute(c, {"m": 0}) for c in nekrasov_product(6).coeffs]
    assert all(ratfun_equal(a, b) for a, b in zip(massless, [1, 1, 2, 3, 5, 7, 11]))


def test_sum_equals_product_order_5():
    assert nekrasov_sum(5) == nekrasov_product(5)


def test_euler_function():
    assert [int(c.numer.LC) if c else 0 for c in euler_function(7).coeffs] == [1, -1, -1, 0, 0, 1, 0, 1]


def test_exponent_closed_form():
    assert ratfun_equal(nekrasov_exponent(), -m * (m + t1 + t2) / (t1 * t2) - 1)

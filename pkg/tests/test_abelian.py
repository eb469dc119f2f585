"""Closed-form tensor/Tor/divided-power calculus on cyclic direct sums."""

import math

import pytest

from derham import abelian as ab
from derham.intlinalg import GroupInvariants


Z = ab.Z
Zmod = ab.FgAbelian.cyclic


def test_tensor_unit():
    a = ab.FgAbelian((0, 4, 6))
    assert ab.tensor(Z, a) == a
    assert ab.tensor(a, Z) == a


def test_tensor_gcd():
    assert ab.tensor(Zmod(6), Zmod(4)) == Zmod(2)
    assert ab.tensor(Zmod(3), Zmod(4)).is_trivial


def test_tor_examples():
    assert ab.tor(Zmod(4), Zmod(4)) == Zmod(4)  # the 4-torsion seen by f_1^8
    assert ab.tor(Z, Zmod(5)).is_trivial
    assert ab.tor(Zmod(6), Zmod(15)) == Zmod(3)


def test_tensor_tor_commutative_associative():
    samples = [
        Z,
        Zmod(2),
        Zmod(4),
        ab.FgAbelian((0, 2)),
        ab.FgAbelian((2, 3, 4)),
    ]
    for a in samples:
        for b in samples:
            assert ab.tensor(a, b).invariants() == ab.tensor(b, a).invariants()
            assert ab.tor(a, b).invariants() == ab.tor(b, a).invariants()
            for c in samples:
                lhs = ab.tensor(ab.tensor(a, b), c)
                rhs = ab.tensor(a, ab.tensor(b, c))
                assert lhs.invariants() == rhs.invariants()
                lhs = ab.tor(ab.tor(a, b), c)
                rhs = ab.tor(a, ab.tor(b, c))
                assert lhs.invariants() == rhs.invariants()


def test_tor_power():
    assert ab.tor_power(2, ab.FgAbelian.free(3)).is_trivial
    got = ab.tor_power(2, ab.FgAbelian((2, 4)))
    assert got.invariants() == ab.FgAbelian((2, 2, 2, 4)).invariants()
    assert ab.tor_power(3, Zmod(2)) == Zmod(2)
    with pytest.raises(ab.DegreeTooSmallError):
        ab.tor_power(1, Zmod(2))


def test_gamma_cyclic_values():
    assert ab.gamma_cyclic(2, 2) == Zmod(4)
    assert ab.gamma_cyclic(3, 2) == Zmod(2)
    assert ab.gamma_cyclic(3, 3) == Zmod(9)
    assert ab.gamma_cyclic(1, 7) == Zmod(7)
    assert ab.gamma_cyclic(0, 5) == Z
    assert ab.gamma_cyclic(6, 12) == Zmod(72)  # 12 * (6, 12^inf) = 12 * 6


def test_gamma_group_rank_one_free():
    for n in range(5):
        assert ab.gamma_group(n, Z) == Z


def test_gamma_group_elementary_square():
    got = ab.gamma_group(2, ab.FgAbelian.elementary(2, 2))
    assert got.invariants() == ab.FgAbelian((4, 2, 4)).invariants()


def test_gamma_group_exponential_law():
    samples = [Z, Zmod(2), Zmod(4), ab.FgAbelian((2, 2)), ab.FgAbelian((0, 3))]
    for a in samples:
        for b in samples:
            for n in range(5):
                whole = ab.gamma_group(n, a.plus(b))
                split = ab.direct_sum(
                    ab.tensor(ab.gamma_group(i, a), ab.gamma_group(n - i, b))
                    for i in range(n + 1)
                )
                assert whole.invariants() == split.invariants()


def test_monomial_orders_refine_gamma_group():
    # the divided powers of (Z/p)^r decompose with one cyclic summand per
    # degree-n exponent vector
    from derham.bases import enumerate_basis

    for p in (2, 3):
        for r in (1, 2, 3):
            for n in range(1, 5):
                orders = [
                    ab.monomial_order_mod_p(e, p)
                    for e in enumerate_basis("gamma", n, r)
                ]
                built = ab.FgAbelian(tuple(orders))
                assert built.invariants() == ab.gamma_group(
                    n, ab.FgAbelian.elementary(p, r)
                ).invariants()


def test_expected_h0_rank_one_is_cyclic():
    for n in range(2, 13):
        assert ab.expected_h0(n, 1).invariants() == GroupInvariants(0, (n,))


def test_expected_h0_prime_degree():
    for p in (2, 3, 5, 7):
        for r in range(4):
            got = ab.expected_h0(p, r)
            assert got.invariants() == ab.FgAbelian.elementary(p, r).invariants()


def test_expected_h0_weight_four():
    got = ab.expected_h0(4, 2)
    assert got.invariants() == ab.FgAbelian((4, 2, 4)).invariants()


def test_table_zero_cells():
    assert ab.expected_table_entry(5, 1, 3).is_trivial
    for q in (2, 3, 5, 7):
        for i in (1, 2, 3):
            assert ab.expected_table_entry(q, i, 4).is_trivial
    assert ab.expected_table_entry(4, 2, 4).is_trivial
    assert ab.expected_table_entry(6, 3, 4).is_trivial


def test_table_wedge_cells():
    assert ab.expected_table_entry(4, 1, 2) == Zmod(2)  # one wedge pair mod 2
    assert ab.expected_table_entry(6, 2, 3) == Zmod(2)  # one wedge triple
    assert ab.expected_table_entry(4, 1, 4).invariants() == GroupInvariants(
        0, (2,) * math.comb(4, 2)
    )


def test_table_lie_cell_dimensions():
    # degree-3 Lie functor of an r-dimensional space has dim (r^3 - r)/3
    for r in range(1, 5):
        got = ab.expected_table_entry(6, 1, r)
        lie_dim = (r**3 - r) // 3
        expect = ab.FgAbelian.elementary(3, math.comb(r, 2)).plus(
            ab.FgAbelian.elementary(2, lie_dim)
        )
        assert got.invariants() == expect.invariants()


def test_table_out_of_range():
    with pytest.raises(ab.OutOfTableError):
        ab.expected_table_entry(8, 0, 2)
    with pytest.raises(ab.OutOfTableError):
        ab.expected_table_entry(6, 4, 2)


def test_rendering():
    assert str(ab.FgAbelian((0, 0, 2, 4))) == "Z^2 + Z/2 + Z/4"
    assert str(ab.ZERO_GROUP) == "0"
    assert ab.FgAbelian((2, 3)).invariants().as_dict() == {
        "free_rank": 0,
        "torsion": [6],
    }

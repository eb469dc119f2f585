"""The comparison maps: degree-0 structure, higher cycles, counterexample."""

import pytest

from derham import comparison as cmp
from derham import complexes as cx
from derham import intlinalg as la
from derham.bases import enumerate_basis
from derham.intlinalg import GroupInvariants


# -- the degree-0 map -----------------------------------------------------------


def test_h0_target_rank_one_weight_six():
    target = cmp.h0_target(6, 1)
    assert target.generators == ((2, (3,)), (3, (2,)))
    assert target.orders == (2, 3)


def test_h0_target_weight_four():
    target = cmp.h0_target(4, 2)
    # divided squares of (Z/2)^2: orders 4, 2, 4
    assert target.orders == (4, 2, 4)


def test_q_matrix_prime_weight():
    q = cmp.q_matrix(3, 2)
    monos = enumerate_basis("gamma", 3, 2)
    col_pure = monos.index((3, 0))
    col_mixed = monos.index((2, 1))
    assert q.matrix[:, col_pure].tolist() == [1, 0]
    assert q.matrix[:, col_mixed].tolist() == [0, 0]


def test_q_matrix_weight_four_rank_one():
    q = cmp.q_matrix(4, 1)
    assert q.matrix.tolist() == [[1]]
    assert q.target.orders == (4,)


def test_q_matrix_weight_six_rank_one():
    q = cmp.q_matrix(6, 1)
    assert q.matrix[:, 0].tolist() == [1, 1]


def test_q_matrix_entries_are_boolean():
    for n in (4, 6, 8):
        q = cmp.q_matrix(n, 2)
        assert set(int(x) for x in q.matrix.reshape(-1)) <= {0, 1}


def test_q_kills_boundaries_range():
    for n in range(2, 9):
        for r in (1, 2):
            assert cmp.q_kills_boundaries(cmp.q_matrix(n, r))


def test_q_value_merge_instance():
    # two divided squares merge with coefficient C(4,2) = 6 = 2 mod 4
    target = cmp.h0_target(4, 1)
    lhs = cmp._q_value([(2, (1,)), (2, (1,))], 4, 1, target)
    direct = cmp._q_value([(4, (1,))], 4, 1, target)
    assert lhs == (2,)
    assert tuple(6 * x % 4 for x in direct) == lhs


def test_verify_q_relations_zero_failures():
    for n in range(2, 7):
        for r in (1, 2):
            report = cmp.verify_q_relations(n, r)
            assert report.ok, report.failures[:3]
            assert report.total_checked > 0


def test_verify_h0_iso_examples():
    assert cmp.verify_h0_iso(4, 2)
    assert cmp.verify_h0_iso(6, 2)
    assert cmp.verify_h0_iso(12, 1)
    for n in range(2, 9):
        assert cmp.verify_h0_iso(n, 1)


# -- the comparison cycles ------------------------------------------------------


def test_eta_weight_four():
    cycle = cmp.eta(1, 2, 4, [1, 2], 2)
    vec = cycle.as_dict()
    pair = cx.build_C(4, 2).bases[1]
    labels = pair.labels()
    readable = {labels[k]: c for k, c in vec.items()}
    assert readable == {
        ((1,), (1, 2)): 1,   # x1 (x) x1 gamma_2(x2)
        ((2,), (2, 1)): -1,  # -x2 (x) x2 gamma_2(x1)
    }


def test_eta_weight_six_three_terms():
    cycle = cmp.eta(2, 2, 6, [1, 2, 3], 3)
    labels = cx.build_C(6, 3).bases[2].labels()
    readable = {labels[k]: c for k, c in cycle.as_dict().items()}
    assert readable == {
        ((2, 3), (2, 1, 1)): -1,  # -x2^x3 (x) x2 x3 gamma_2(x1)
        ((1, 3), (1, 2, 1)): 1,   # +x1^x3 (x) x1 x3 gamma_2(x2)
        ((1, 2), (1, 1, 2)): -1,  # -x1^x2 (x) x1 x2 gamma_2(x3)
    }


def test_eta_weight_six_prime_three():
    # x1 (x) gamma_2(x1) gamma_3(x2)  -  x2 (x) gamma_2(x2) gamma_3(x1)
    cycle = cmp.eta(1, 3, 6, [1, 2], 2)
    labels = cx.build_C(6, 2).bases[1].labels()
    readable = {labels[k]: c for k, c in cycle.as_dict().items()}
    assert readable == {
        ((1,), (2, 3)): 1,
        ((2,), (3, 2)): -1,
    }


def test_eta_repeated_lift_degenerates():
    cycle = cmp.eta(1, 2, 4, [1, 1], 2)
    assert cycle.as_dict() == {}


def test_eta_all_theorem_cells_are_cycles():
    # construction raises if the boundary of the cycle is nonzero
    for n in (4, 6):
        for p in (2, 3):
            if n % p:
                continue
            m = n // p
            for i in range(1, m):
                for lifts in [
                    tuple(range(1, m + 1)),
                    tuple(1 for _ in range(m)),
                ]:
                    cmp.eta(i, p, n, lifts, 3)


def test_eta_degree_mismatch():
    with pytest.raises(cmp.DegreeMismatchError):
        cmp.eta(1, 2, 6, [1, 2], 2)  # needs 3 arguments
    with pytest.raises(cmp.DegreeMismatchError):
        cmp.eta(3, 2, 4, [1, 2], 2)  # wedge part too long
    with pytest.raises(cmp.DegreeMismatchError):
        cmp.eta(1, 3, 4, [1, 2], 2)  # 3 does not divide 4


# -- well-definedness evidence ---------------------------------------------------


def test_scalings_are_boundaries_weight_four():
    report = cmp.verify_f_welldefined(1, 4, 2, 2)
    assert report["ok"]
    assert report["scalings"]["checked"] == report["scalings"]["boundary"]


def test_jacobi_images_vanish_weight_six():
    report = cmp.verify_f_welldefined(1, 6, 2, 3)
    assert report["ok"]
    assert report["jacobi"]["checked"] > 0
    assert report["jacobi"]["zero"] == report["jacobi"]["checked"]


def test_explicit_boundary_identity_weight_four():
    # d_2 of x1^x2 (x) x1 x2 is exactly twice the comparison cycle
    c4 = cx.build_C(4, 2)
    pair2 = c4.bases[2]
    labels2 = pair2.labels()
    col = labels2.index(((1, 2), (1, 1)))
    boundary = c4.d(2)[:, col]
    cycle = cmp.eta(1, 2, 4, [1, 2], 2).dense()
    assert la.is_zero(boundary - 2 * cycle)


def test_lift_changes_are_boundaries():
    assert cmp.lift_change_in_boundaries(1, 4, 2, 2)
    assert cmp.lift_change_in_boundaries(1, 6, 3, 2)


# -- the isomorphism range -------------------------------------------------------


def test_theorem_weight_four():
    for r in (1, 2, 3):
        assert cmp.verify_theorem(1, 4, r)


def test_theorem_weight_six_rank_two():
    for i in (1, 2, 3):
        assert cmp.verify_theorem(i, 6, 2)


def test_theorem_prime_weights():
    for n in (2, 3, 5):
        for i in (1, 2):
            assert cmp.verify_theorem(i, n, 2)


def test_f_matrix_weight_four():
    mat = cmp.f_matrix(1, 4, 2, 2)
    assert mat.shape[1] == 1  # one wedge pair over F_2
    # its class generates H_1 = Z/2: the assembled map is an isomorphism
    assert cmp.verify_theorem(1, 4, 2)


def test_f_matrix_weight_six_degree_two():
    # one wedge triple over F_2 onto H_2 = Z/2
    mat = cmp.f_matrix(2, 6, 2, 3)
    assert mat.shape[1] == 1
    assert cx.homology_of("C", 6, 3).invariants(2) == GroupInvariants(0, (2,))
    assert cmp.verify_theorem(2, 6, 3)


def test_f_matrix_weight_six_prime_three_part():
    # one wedge pair over F_3 onto the 3-torsion of H_1
    mat = cmp.f_matrix(1, 6, 3, 2)
    assert mat.shape[1] == 1
    h1 = cx.homology_of("C", 6, 2).invariants(1)
    assert any(t % 3 == 0 for t in h1.torsion)
    assert cmp.verify_theorem(1, 6, 2)


def test_c4iso_elementwise_on_sums():
    # the explicit degree-1 identification evaluated at a + b keeps the
    # class: eta(a+b, b) - eta(a, b) must be a boundary
    hom = cx.homology_of("C", 4, 2)
    boundaries = hom.boundary_solver(1)
    base = cmp.eta_vector(1, 2, 4, [(1, 0), (0, 1)], 2)
    shifted = cmp.eta_vector(1, 2, 4, [(1, 1), (0, 1)], 2)
    diff = dict(shifted)
    for pos, c in base.items():
        cmp.vec_add(diff, pos, -c)
    from derham.bases import to_dense

    assert boundaries.contains(to_dense(diff, hom.cx.dim(1)))


# -- the weight-8 counterexample ---------------------------------------------------


def test_f18_rank_one_no_4_torsion():
    report = cmp.f18_counterexample(1)
    assert report["contains_order4"] is False


def test_f18_rank_two():
    report = cmp.f18_counterexample(2)
    assert report["contains_order4"] is True
    assert report["source_exponent"] in (1, 2)
    assert report["source_exponent"] == 2
    assert report["map_well_defined"] is True
    assert report["map_is_iso"] is False
    torsion = report["target_invariants"]["torsion"]
    assert any(t % 4 == 0 for t in torsion)

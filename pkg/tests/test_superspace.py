import random

import pytest

from macdsuper.fermion import SubsetE, build_tau, jucys_murphy, mask_of
from macdsuper.qtfield import QTRat, RAT_ONE, RAT_T, rat_mono
from macdsuper.superspace import (
    DunklDivisionError,
    SuperPoly,
    affine_phi,
    apply_perm,
    b_stat,
    cherednik_xi,
    comp_before,
    comp_inv,
    compositions,
    demazure_T,
    demazure_T_inv,
    dunkl_D,
    order_key,
    phi_inverse,
    phi_step,
    random_superpoly,
    rank_perm,
    reduced_word,
    shift_w,
    shift_w_inv,
)

ONE = RAT_ONE
T = RAT_T


def polys(n, count=5, seed=0, deg=3):
    rng = random.Random(seed)
    return [random_superpoly(rng, n, rng.randint(0, n), deg) for _ in range(count)]


# --- compositions -----------------------------------------------------------


def test_rank_perm_paper_example():
    a = (1, 2, 0, 5, 4, 5)
    assert rank_perm(a) == (5, 4, 6, 1, 3, 2)
    assert apply_perm(rank_perm(a), a) == (5, 5, 4, 2, 1, 0)


def test_rank_perm_identity_iff_partition():
    assert rank_perm((3, 2, 2, 0)) == (1, 2, 3, 4)
    assert rank_perm((0, 3, 2)) != (1, 2, 3)


def test_inv_and_b():
    assert comp_inv((0, 0, 1)) == 2
    assert b_stat((3, 0, 1)) == 3


def test_phi_steps():
    assert phi_step((0, 0, 0)) == (0, 0, 1)
    assert phi_inverse((0, 0, 1)) == (0, 0, 0)
    with pytest.raises(ValueError):
        phi_inverse((1, 0, 0))


def test_dominance_order_consistency():
    # order_key is a linear extension of the dominance-derived order
    for total in range(4):
        comps = list(compositions(3, total))
        for a in comps:
            for b in comps:
                if comp_before(a, b):
                    assert order_key(a) < order_key(b)


def test_reduced_word_length_is_inversions():
    rng = random.Random(4)
    for _ in range(20):
        perm = list(range(1, 6))
        rng.shuffle(perm)
        u = tuple(perm)
        word = reduced_word(u)
        lengths = sum(
            1 for i in range(5) for j in range(i + 1, 5) if u[i] > u[j]
        )
        assert len(word) == lengths


# --- Demazure-Lusztig -------------------------------------------------------


def test_bold_quadratic_braid_inverse():
    n = 4
    for p in polys(n, seed=1):
        for i in range(1, n):
            quad = demazure_T(i, demazure_T(i, p))
            assert quad == demazure_T(i, p).scale(T - ONE) + p.scale(T)
            assert demazure_T_inv(i, demazure_T(i, p)) == p
            assert demazure_T(i, demazure_T_inv(i, p)) == p
        for i in range(1, n - 1):
            assert demazure_T(i, demazure_T(i + 1, demazure_T(i, p))) == demazure_T(
                i + 1, demazure_T(i, demazure_T(i + 1, p))
            )


def test_bold_reduces_to_theta_action_on_x_free():
    n, m = 4, 2
    tau = build_tau(SubsetE.of([1, 2, 4], n), m)
    pt = SuperPoly.from_fermion(tau, m)
    from macdsuper.superspace import _theta_op

    for i in range(1, n):
        assert demazure_T(i, pt) == _theta_op(i, pt)


# --- shift w ----------------------------------------------------------------


def test_w_inverse_and_intertwining():
    n = 4
    for p in polys(n, seed=2):
        assert shift_w_inv(shift_w(p)) == p
        assert shift_w(shift_w_inv(p)) == p
        for i in (1, 2):
            assert shift_w(demazure_T(i + 1, p)) == demazure_T(i, shift_w(p))
        assert shift_w(shift_w(demazure_T(1, p))) == demazure_T(
            n - 1, shift_w(shift_w(p))
        )


def test_w_on_x_free_is_theta_word():
    n, m = 4, 1
    tau = build_tau(SubsetE.of([2, 4], n), m)
    pt = SuperPoly.from_fermion(tau, m)
    from macdsuper.fermion import hecke_T

    expected = tau
    for j in range(1, n):
        expected = hecke_T(j, expected)
    assert shift_w(pt) == SuperPoly.from_fermion(expected, m)


# --- Cherednik operators ----------------------------------------------------


def test_xi_equals_omega_on_degree_zero():
    n = 4
    for m in range(n + 1):
        from macdsuper.fermion import all_labels

        for mask, _ in all_labels(n, m):
            tau = build_tau(SubsetE(mask, n), m)
            pt = SuperPoly.from_fermion(tau, m)
            for i in range(1, n + 1):
                assert cherednik_xi(i, pt) == SuperPoly.from_fermion(
                    jucys_murphy(i, tau), m
                )


def test_xi_commute_and_exchange():
    n = 4
    for p in polys(n, count=3, seed=3, deg=2):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                assert cherednik_xi(i, cherednik_xi(j, p)) == cherednik_xi(
                    j, cherednik_xi(i, p)
                )
        for j in range(1, n):
            lhs = demazure_T(j, cherednik_xi(j, p))
            rhs = cherednik_xi(j, p).scale(T - ONE) + cherednik_xi(
                j + 1, demazure_T(j, p)
            )
            assert lhs == rhs
            conj = demazure_T(j, cherednik_xi(j + 1, demazure_T(j, p))).scale(
                rat_mono(0, -1)
            )
            assert cherednik_xi(j, p) == conj


def test_xi_commutes_with_distant_T():
    n = 4
    for p in polys(n, count=3, seed=6, deg=2):
        for i in range(1, n + 1):
            for j in range(1, n):
                if abs(i - j) >= 2 and j + 1 != i:
                    assert cherednik_xi(i, demazure_T(j, p)) == demazure_T(
                        j, cherednik_xi(i, p)
                    )


# --- Dunkl operators ----------------------------------------------------------


def test_dunkl_commute():
    n = 3
    for p in polys(n, count=4, seed=5, deg=2):
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                assert dunkl_D(i, dunkl_D(j, p)) == dunkl_D(j, dunkl_D(i, p))


def test_dunkl_lowers_degree():
    rng = random.Random(9)
    p = random_superpoly(rng, 3, 1, 2, homogeneous_degree=2)
    img = dunkl_D(3, p)
    assert img.bosonic_degrees() <= {1}


def test_affine_phi_on_monomial():
    n, m = 3, 0
    p = SuperPoly.monomial((2, 1, 0), 0, n, m)
    out = affine_phi(p)
    # x^ (2,1,0) -> q^2 x^(1,0,3) times the theta word on phi_empty (t^{N-1})
    assert out == SuperPoly.monomial((1, 0, 3), 0, n, m, rat_mono(2, n - 1))


# --- subst / divide ----------------------------------------------------------


def test_subst_and_exact_division():
    n, m = 3, 0
    # p = (x1 - t x2)(x1 - 5) expanded
    p = SuperPoly.zero(n, m)
    p._add_term(((2, 0, 0), 0), ONE)
    p._add_term(((1, 1, 0), 0), -T)
    p._add_term(((1, 0, 0), 0), QTRat.from_int(-5))
    p._add_term(((0, 1, 0), 0), T.scale(5))
    q1 = p.divide_exact(1, T, 2)
    assert q1.divide_exact(1, QTRat.from_int(5), None) == SuperPoly.monomial(
        (0, 0, 0), 0, n, m
    )
    with pytest.raises(ValueError, match="not exact"):
        p.divide_exact(1, T + ONE, 2)


def test_homogeneity_validation():
    p = SuperPoly.zero(3, 0)
    p._add_term(((1, 0, 0), 0), ONE)
    p._add_term(((2, 0, 0), 0), ONE)
    with pytest.raises(ValueError, match="homogeneous"):
        p.require_homogeneous("test")

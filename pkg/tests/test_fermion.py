import random
import threading

import pytest

from macdsuper import fermion as fm
from macdsuper.fermion import (
    FermionPoly,
    SubsetE,
    all_labels,
    build_tau,
    clear_tau_cache,
    content_vector,
    contents_mask,
    hecke_T,
    hecke_T_inv,
    inner_fermion,
    inv_count,
    iter_subsets,
    jucys_murphy,
    mask_of,
    op_D,
    op_M,
    sector_labels,
    tau_norm,
)
from macdsuper.qtfield import QTRat, RAT_ONE, RAT_T, rat_mono, t_bracket_rat

ONE = RAT_ONE


def phi(members, n):
    return FermionPoly.basis(mask_of(members, n), n)


def random_fermion(rng, n, m, terms=5):
    out = FermionPoly(n)
    masks = list(iter_subsets(n, m))
    for _ in range(terms):
        out._add_term(rng.choice(masks), QTRat.from_int(rng.randint(-4, 4)))
    return out


# --- inv --------------------------------------------------------------------


def test_inv_examples():
    n, m = 7, 3
    e0 = SubsetE.of(range(n - m, n + 1), n)
    assert inv_count(e0) == 0
    e = SubsetE.of(list(range(1, m + 1)) + [n], n)
    assert inv_count(e) == m * (n - 1 - m)


def test_inv_enumeration_oracle():
    e = SubsetE.of([2, 5, 7, 8], 8)
    members = set(e.members)
    comp = set(range(1, 9)) - members
    brute = sum(1 for i in members for j in comp if i < j)
    assert inv_count(e) == brute == 4


# --- Hecke action -----------------------------------------------------------


def test_T_cases():
    n = 4
    assert hecke_T(1, phi([], n)) == phi([], n).scale(RAT_T)
    assert hecke_T(1, phi([1, 2], n)) == -phi([1, 2], n)
    assert hecke_T(1, phi([1], n)) == phi([2], n)
    expected = phi([2], n).scale(RAT_T - ONE) + phi([1], n).scale(RAT_T)
    assert hecke_T(1, phi([2], n)) == expected


def test_quadratic_relation_all_basis():
    n = 4
    for size in range(n + 1):
        for mask in iter_subsets(n, size):
            f = FermionPoly.basis(mask, n)
            for i in range(1, n):
                lhs = hecke_T(i, hecke_T(i, f))
                assert lhs == hecke_T(i, f).scale(RAT_T - ONE) + f.scale(RAT_T)
                assert hecke_T_inv(i, hecke_T(i, f)) == f


def test_braid_relations_n5():
    n = 5
    for size in range(n + 1):
        for mask in iter_subsets(n, size):
            f = FermionPoly.basis(mask, n)
            for i in range(1, n - 1):
                assert hecke_T(i, hecke_T(i + 1, hecke_T(i, f))) == hecke_T(
                    i + 1, hecke_T(i, hecke_T(i + 1, f))
                )
            for i in range(1, n):
                for j in range(i + 2, n):
                    assert hecke_T(i, hecke_T(j, f)) == hecke_T(j, hecke_T(i, f))


def test_index_range_errors():
    f = phi([1], 3)
    with pytest.raises(ValueError):
        hecke_T(3, f)
    with pytest.raises(ValueError):
        jucys_murphy(4, f)


# --- Jucys-Murphy -----------------------------------------------------------


def test_jucys_murphy_identity_and_commute():
    n = 4
    rng = random.Random(0)
    f = random_fermion(rng, n, 2)
    assert jucys_murphy(n, f) == f
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            assert jucys_murphy(i, jucys_murphy(j, f)) == jucys_murphy(
                j, jucys_murphy(i, f)
            )


# --- M and D ----------------------------------------------------------------


def test_md_plus_dm_and_squares():
    n = 5
    for size in range(n + 1):
        for mask in iter_subsets(n, size):
            f = FermionPoly.basis(mask, n)
            assert op_M(op_D(f)) + op_D(op_M(f)) == f.scale(t_bracket_rat(n))
    rng = random.Random(1)
    g = random_fermion(rng, n, 3)
    assert op_M(op_M(g)).is_zero()
    assert op_D(op_D(g)).is_zero()


def test_d_on_empty():
    assert op_D(phi([], 4)).is_zero()


def test_m_on_initial_segment():
    n, m = 5, 2
    base = list(range(1, m + 1))
    expected = FermionPoly(n)
    for j in range(m + 1, n + 1):
        expected._add_term(mask_of(base + [j], n), QTRat.from_int((-1) ** m))
    assert op_M(phi(base, n)) == expected


def test_md_commute_with_T():
    n = 5
    for size in range(n + 1):
        for mask in iter_subsets(n, size):
            f = FermionPoly.basis(mask, n)
            for i in range(1, n):
                assert op_M(hecke_T(i, f)) == hecke_T(i, op_M(f))
                assert op_D(hecke_T(i, f)) == hecke_T(i, op_D(f))


# --- inner product ----------------------------------------------------------


def test_inner_examples():
    assert inner_fermion(phi([], 3), phi([], 3)) == ONE
    e = [2, 5, 7, 8]
    assert inner_fermion(phi(e, 8), phi(e, 8)) == rat_mono(0, -4)
    # self-adjointness at N=3
    assert inner_fermion(hecke_T(1, phi([1], 3)), phi([2], 3)) == inner_fermion(
        phi([1], 3), hecke_T(1, phi([2], 3))
    )


def test_inner_self_adjoint_random():
    n = 4
    rng = random.Random(2)
    for _ in range(10):
        m = rng.randint(0, n)
        f = random_fermion(rng, n, m)
        g = random_fermion(rng, n, m)
        for i in range(1, n):
            assert inner_fermion(hecke_T(i, f), g) == inner_fermion(f, hecke_T(i, g))


# --- contents ---------------------------------------------------------------


def test_content_paper_example():
    cv = content_vector(SubsetE.of([2, 5, 7, 8], 8), 3)
    assert cv.c == (4, -3, 3, 2, -2, 1, -1, 0)
    assert cv.sector == "Y0"


def test_content_roots():
    n, m = 7, 3
    e0 = contents_mask(mask_of(range(n - m, n + 1), n), n, m)
    expected = tuple(range(n - m - 1, 0, -1)) + tuple(range(-m, 0)) + (0,)
    assert e0 == expected
    e1 = contents_mask(mask_of(range(1, m), n), n, m)
    expected1 = tuple(range(1 - m, 0)) + tuple(range(n - m, 0, -1)) + (0,)
    assert e1 == expected1


def test_invalid_sector():
    # size 3 is neither m+1 with N in E nor m-1 with N excluded
    with pytest.raises(ValueError, match="not a valid"):
        content_vector(SubsetE.of([1, 2, 3], 5), 3)
    # right size for Y0 but N missing
    with pytest.raises(ValueError, match="not a valid"):
        content_vector(SubsetE.of([1, 2, 3, 4], 5), 3)


# --- tau basis --------------------------------------------------------------


def test_tau_explicit_roots():
    n, m = 5, 2
    e0 = SubsetE.of([3, 4, 5], n)
    expected = FermionPoly(n)
    for j in range(3, 6):
        members = [x for x in [3, 4, 5] if x != j]
        expected._add_term(mask_of(members, n), rat_mono(0, j - 1, (-1) ** (n - m - j)))
    assert build_tau(e0, m) == expected
    e1 = SubsetE.of([1], n)
    expected1 = FermionPoly(n)
    for j in range(2, 6):
        expected1._add_term(mask_of([1, j], n), QTRat.from_int((-1) ** (m - 1)))
    assert build_tau(e1, m) == expected1


def test_tau_eigen_all_labels():
    n = 5
    for m in range(n + 1):
        for mask, sector in all_labels(n, m):
            tau = build_tau(SubsetE(mask, n), m)
            assert not tau.is_zero()
            c = contents_mask(mask, n, m)
            for i in range(1, n + 1):
                assert jucys_murphy(i, tau) == tau.scale(rat_mono(0, c[i - 1]))


def test_tau_orthogonal():
    n = 5
    for m in range(n + 1):
        labs = [mask for mask, _ in all_labels(n, m)]
        taus = [build_tau(SubsetE(mask, n), m) for mask in labs]
        for a in range(len(labs)):
            for b in range(a + 1, len(labs)):
                assert inner_fermion(taus[a], taus[b]).is_zero()


def test_tau_norm_inner_product_oracle():
    n = 5
    for m in range(n + 1):
        for mask, _ in all_labels(n, m):
            e = SubsetE(mask, n)
            tau = build_tau(e, m)
            assert inner_fermion(tau, tau) == tau_norm(e, m)


def test_f0_f1_norm_values():
    for n, m in [(4, 1), (5, 2), (6, 3)]:
        f0 = SubsetE.of(list(range(1, m + 1)) + [n], n)
        assert tau_norm(f0, m) == rat_mono(0, (m + 2) * (n - m - 1)) * t_bracket_rat(
            n
        ) / t_bracket_rat(n - m)
        f1 = SubsetE.of(range(1, m + 1), n)
        assert tau_norm(f1, m + 1) == rat_mono(0, -(m + 1) * (n - m - 1)) * t_bracket_rat(
            n - m
        )


def test_d_tau_f1_relation_with_sign():
    for n, m in [(4, 1), (5, 2), (5, 3)]:
        f0 = SubsetE.of(list(range(1, m + 1)) + [n], n)
        f1 = SubsetE.of(range(1, m + 1), n)
        scale = rat_mono(0, -(m + 1) * (n - m - 1), (-1) ** m) * t_bracket_rat(n - m)
        assert op_D(build_tau(f1, m + 1)) == build_tau(f0, m).scale(scale)


def test_isomorphism_scaling():
    n = 4
    for m in range(n):
        for mask in sector_labels(n, m, "Y0"):
            tau = build_tau(SubsetE(mask, n), m)
            mf = op_M(tau)
            assert inner_fermion(mf, mf) == inner_fermion(tau, tau) * rat_mono(
                0, m + 1 - n
            ) * t_bracket_rat(n)
        for mask in sector_labels(n, m + 1, "Y1"):
            tau = build_tau(SubsetE(mask, n), m + 1)
            dg = op_D(tau)
            assert inner_fermion(dg, dg) == inner_fermion(tau, tau) * rat_mono(
                0, n - m - 1
            ) * t_bracket_rat(n)


def test_degenerate_m():
    n = 4
    assert sector_labels(n, 0, "Y1") == []
    assert [SubsetE(mask, n).members for mask, _ in all_labels(n, 0)] == [(n,)]
    assert sector_labels(n, n, "Y0") == []
    assert len(all_labels(n, n)) == 1
    # m = 0 tau is a scalar multiple of phi_empty
    tau = build_tau(SubsetE.of([n], n), 0)
    assert tau == FermionPoly.basis(0, n).scale(rat_mono(0, n - 1))


def test_tau_cache_concurrent_get_or_compute():
    clear_tau_cache()
    n, m = 6, 2
    e = SubsetE.of([1, 2, 6], n)
    results = []

    def worker():
        results.append(build_tau(e, m))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert all(r == results[0] for r in results)

import random

import pytest

from macdsuper.fermion import (
    SubsetE,
    all_labels,
    build_tau,
    contents_mask,
    iter_subsets,
    mask_of,
)
from macdsuper.macdonald import (
    build_macdonald,
    c_product,
    e_stat,
    expand_in_basis,
    form_inner,
    k_stat,
    label,
    labels_of_degree,
    leading_theta,
    macdonald_norm,
    norm_via_recursion,
    partition_norm,
    r_product,
    spectral_vector,
    triangular_below,
)
from macdsuper.qtfield import (
    QTRat,
    RAT_ONE,
    RAT_ONE_MINUS_Q,
    RAT_Q,
    RAT_T,
    RAT_T_MINUS_ONE,
    rat_mono,
    u_eval,
)
from macdsuper.superspace import (
    SuperPoly,
    cherednik_xi,
    demazure_T,
    random_superpoly,
    swap_at,
)

ONE = RAT_ONE


def ex_label():
    return label(5, 2, (0, 0, 1, 0, 0), SubsetE.of([3, 4, 5], 5))


# --- spectral vectors ---------------------------------------------------------


def test_spectral_vector_paper_example():
    zeta = [z.to_rat() for z in spectral_vector(ex_label())]
    assert zeta == [rat_mono(0, 1), rat_mono(0, -2), rat_mono(1, 2), rat_mono(0, -1), ONE]


def test_spectral_vector_at_zero_is_contents():
    n, m = 4, 1
    for mask, _ in all_labels(n, m):
        lab = label(n, m, (0,) * n, mask)
        c = contents_mask(mask, n, m)
        assert [z.to_rat() for z in spectral_vector(lab)] == [
            rat_mono(0, ci) for ci in c
        ]


def test_spectral_vector_affine_rotation():
    lab = ex_label()
    from macdsuper.superspace import phi_step

    rotated = label(5, 2, phi_step(lab.alpha), lab.mask)
    zeta = spectral_vector(lab)
    expect = list(zeta[1:]) + [type(zeta[0])(zeta[0].a + 1, zeta[0].b)]
    assert list(spectral_vector(rotated)) == expect


# --- build: the worked example, frozen ---------------------------------------


def test_worked_example_coefficients():
    M = build_macdonald(ex_label())
    c = (RAT_T_MINUS_ONE * RAT_Q * rat_mono(0, 9)) / (RAT_Q * rat_mono(0, 3) - ONE)

    def key(alpha, members):
        return (tuple(alpha), mask_of(members, 5))

    expected = {
        key((0, 0, 1, 0, 0), [2, 4]): rat_mono(0, 9),
        key((0, 0, 1, 0, 0), [2, 5]): rat_mono(0, 8, -1),
        key((0, 0, 1, 0, 0), [4, 5]): rat_mono(0, 6),
        key((0, 0, 0, 1, 0), [2, 3]): c * rat_mono(0, 3),
        key((0, 0, 0, 1, 0), [2, 5]): c * rat_mono(0, 1, -1),
        key((0, 0, 0, 1, 0), [3, 5]): c,
        key((0, 0, 0, 0, 1), [2, 3]): c * rat_mono(0, 2, -1),
        key((0, 0, 0, 0, 1), [2, 4]): c * rat_mono(0, 1),
        key((0, 0, 0, 0, 1), [3, 4]): c * QTRat.from_int(-1),
    }
    assert M.terms == expected


def test_worked_example_T4_and_eigen():
    lab = ex_label()
    M = build_macdonald(lab)
    assert demazure_T(4, M) == M.scale(QTRat.from_int(-1))
    zeta = spectral_vector(lab)
    for i in range(1, 6):
        assert cherednik_xi(i, M) == M.scale(zeta[i - 1].to_rat())


def test_zero_alpha_is_tau():
    n, m = 4, 2
    for mask, _ in all_labels(n, m):
        lab = label(n, m, (0,) * n, mask)
        assert build_macdonald(lab) == SuperPoly.from_fermion(
            build_tau(SubsetE(mask, n), m), m
        )


def test_leading_term_exponents():
    # q-exponent b(alpha), t-exponent sum lambda_i (N - i + c(i,E))
    n, m = 4, 1
    lab = label(n, m, (2, 0, 1, 0), mask_of([2, 4], n))
    M = build_macdonald(lab)
    lead = M.x_coefficient(lab.alpha)
    expect = leading_theta(lab).scale(
        rat_mono(1, e_stat(lab.alpha, lab.contents))
    )  # b((2,0,1,0)) = 1
    assert lead == expect


def test_triangularity():
    n = 3
    for m in range(n + 1):
        for d in range(3):
            for lab in labels_of_degree(n, m, d):
                assert triangular_below(lab, build_macdonald(lab))


# --- R and C products ---------------------------------------------------------


def test_r_product_partition_trivial():
    lab = label(4, 1, (3, 2, 1, 0), mask_of([1, 4], 4))
    assert r_product(lab, "full") == ONE


def test_r_product_factors():
    rng = random.Random(3)
    for _ in range(8):
        n, m = 4, rng.randint(0, 4)
        labs = all_labels(n, m)
        mask, _ = rng.choice(labs)
        alpha = tuple(rng.randint(0, 2) for _ in range(n))
        lab = label(n, m, alpha, mask)
        assert r_product(lab, "full") == r_product(lab, "zero") * r_product(lab, "one")


def test_c_product_enumeration_oracle():
    n, m = 5, 2
    e0 = SubsetE.of(range(n - m, n + 1), n)
    assert c_product(e0, m, "full") == ONE  # no mixed-sign pairs
    f0 = SubsetE.of([1, 2, 5], n)
    c = contents_mask(f0.mask, n, m)
    brute = ONE
    for i in range(n - 1):
        for j in range(i + 1, n - 1):
            if c[i] < 0 < c[j]:
                brute = brute * u_eval("full", rat_mono(0, c[i] - c[j]))
    assert c_product(f0, m, "full") == brute
    assert c_product(f0, m, "full") == c_product(f0, m, "zero") * c_product(f0, m, "one")


# --- norms --------------------------------------------------------------------


def test_norm_zero_alpha_is_tau_norm():
    from macdsuper.fermion import tau_norm

    n, m = 4, 2
    for mask, _ in all_labels(n, m):
        lab = label(n, m, (0,) * n, mask)
        assert macdonald_norm(lab) == tau_norm(SubsetE(mask, n), m)


def test_norm_affine_ratio():
    from macdsuper.superspace import phi_step

    n, m = 4, 1
    lab = label(n, m, (1, 0, 2, 0), mask_of([2, 4], n))
    up = label(n, m, phi_step(lab.alpha), lab.mask)
    zeta1 = spectral_vector(lab)[0]
    ratio = (ONE - rat_mono(zeta1.a + 1, zeta1.b)) / RAT_ONE_MINUS_Q
    assert macdonald_norm(up) == ratio * macdonald_norm(lab)


def test_norm_swap_ratio():
    n, m = 4, 2
    lab = label(n, m, (0, 1, 0, 2), mask_of([1, 3, 4], n))
    for i in range(1, n):
        if lab.alpha[i - 1] < lab.alpha[i]:
            zeta = spectral_vector(lab)
            z = (zeta[i] / zeta[i - 1]).to_rat()
            other = label(n, m, swap_at(lab.alpha, i), lab.mask)
            assert macdonald_norm(other) == u_eval("full", z) * macdonald_norm(lab)


def test_norm_recursion_and_form():
    n = 3
    for m in range(n + 1):
        for d in range(3):
            for lab in labels_of_degree(n, m, d):
                closed = macdonald_norm(lab)
                assert closed == norm_via_recursion(lab)
                M = build_macdonald(lab)
                assert closed == form_inner(M, M)


def test_k_stat():
    assert k_stat((2, 1, 0, 0)) == 3 * 2 + 1 * 1


# --- expansion ----------------------------------------------------------------


def test_expand_basis_element():
    lab = ex_label()
    M = build_macdonald(lab)
    coeffs = expand_in_basis(M)
    assert coeffs == {lab: ONE}


def _dense_solve_expand(p):
    """Independent oracle: solve the dense linear system over Q(q,t) in the
    monomial basis by Gaussian elimination."""
    n, m = p.n, p.m
    d = p.require_homogeneous("oracle")
    labs = list(labels_of_degree(n, m, d))
    basis_polys = [build_macdonald(lab) for lab in labs]
    monomials = sorted({key for bp in basis_polys for key in bp.terms} | set(p.terms))
    rows = []
    rhs = []
    for mono in monomials:
        rows.append([bp.terms.get(mono, QTRat.from_int(0)) for bp in basis_polys])
        rhs.append(p.terms.get(mono, QTRat.from_int(0)))
    ncols = len(labs)
    pivot_row = 0
    where = [-1] * ncols
    for col in range(ncols):
        sel = next(
            (r for r in range(pivot_row, len(rows)) if rows[r][col]), None
        )
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        rhs[pivot_row], rhs[sel] = rhs[sel], rhs[pivot_row]
        inv = rows[pivot_row][col].inverse()
        rows[pivot_row] = [x * inv for x in rows[pivot_row]]
        rhs[pivot_row] = rhs[pivot_row] * inv
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pivot_row])]
                rhs[r] = rhs[r] - f * rhs[pivot_row]
        where[col] = pivot_row
        pivot_row += 1
    return {labs[c]: rhs[where[c]] for c in range(ncols) if where[c] >= 0}


def test_expand_linear_algebra_oracle():
    n, m = 3, 1
    tau = build_tau(SubsetE.of([1, 3], n), m)
    p = SuperPoly.from_fermion(tau, m).mul_x((1, 0, 0))
    got = expand_in_basis(p)
    oracle = {lab: c for lab, c in _dense_solve_expand(p).items() if c}
    assert got == oracle
    # reconstruct
    total = SuperPoly.zero(n, m)
    for lab, c in got.items():
        total = total + build_macdonald(lab).scale(c)
    assert total == p


def test_expand_random_roundtrip():
    rng = random.Random(8)
    n, m, d = 3, 2, 2
    p = random_superpoly(rng, n, m, d, homogeneous_degree=d)
    coeffs = expand_in_basis(p)
    total = SuperPoly.zero(n, m)
    for lab, c in coeffs.items():
        total = total + build_macdonald(lab).scale(c)
    assert total == p


def test_expand_requires_homogeneous():
    p = SuperPoly.zero(3, 1)
    p._add_term(((1, 0, 0), 1), ONE)
    p._add_term(((2, 0, 0), 1), ONE)
    with pytest.raises(ValueError, match="homogeneous"):
        expand_in_basis(p)


# --- the form -----------------------------------------------------------------


def test_form_diagonal():
    n, m = 3, 1
    labs = list(labels_of_degree(n, m, 1))
    for a in range(len(labs)):
        for b in range(len(labs)):
            fa = build_macdonald(labs[a])
            fb = build_macdonald(labs[b])
            val = form_inner(fa, fb)
            if a == b:
                assert val == macdonald_norm(labs[a])
            else:
                assert val.is_zero()


def test_form_adjointness_samples():
    rng = random.Random(12)
    n = 3
    for _ in range(5):
        m = rng.randint(0, n)
        d = rng.randint(1, 2)
        f = random_superpoly(rng, n, m, d, homogeneous_degree=d)
        g = random_superpoly(rng, n, m, d, homogeneous_degree=d)
        i = rng.randint(1, n - 1)
        assert form_inner(demazure_T(i, f), g) == form_inner(f, demazure_T(i, g))
        assert form_inner(cherednik_xi(n, f), g) == form_inner(f, cherednik_xi(n, g))


def test_form_dunkl_adjoint():
    from macdsuper.superspace import affine_phi, dunkl_D, shift_w_inv

    rng = random.Random(13)
    n = 3
    for _ in range(5):
        m = rng.randint(0, n)
        d = rng.randint(1, 2)
        f = random_superpoly(rng, n, m, d, homogeneous_degree=d)
        g = random_superpoly(rng, n, m, d - 1, homogeneous_degree=d - 1)
        lhs = form_inner(shift_w_inv(dunkl_D(n, f)), g)
        rhs = RAT_ONE_MINUS_Q * form_inner(f, affine_phi(g))
        assert lhs == rhs


# --- disk cache ---------------------------------------------------------------


def test_disk_cache_roundtrip(tmp_path, monkeypatch):
    from macdsuper.macdonald import clear_macdonald_cache

    monkeypatch.setenv("MACD_CACHE_DIR", str(tmp_path))
    clear_macdonald_cache()
    lab = label(4, 1, (1, 0, 1, 0), mask_of([2, 4], 4))
    first = build_macdonald(lab)
    files = list(tmp_path.glob("macd_*.json"))
    assert files
    clear_macdonald_cache()
    second = build_macdonald(lab)
    assert first == second
    monkeypatch.delenv("MACD_CACHE_DIR")
    clear_macdonald_cache()

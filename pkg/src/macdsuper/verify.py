"""Verification suites: every closed-form identity checked by independent
exact computation.

Each check returns (anchor, ok, detail) where the anchor is the identity
being tested, written as a formula.  Suites are deterministic: randomized
inputs come from a seeded generator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .fermion import (
    FermionPoly,
    SubsetE,
    all_labels,
    build_tau,
    contents_mask,
    hecke_T,
    hecke_T_inv,
    inner_fermion,
    inv_count_mask,
    iter_subsets,
    jucys_murphy,
    mask_of,
    op_D,
    op_M,
    sector_labels,
    tau_norm,
)
from .macdonald import (
    build_macdonald,
    expand_in_basis,
    form_inner,
    label,
    labels_of_degree,
    macdonald_norm,
    norm_via_recursion,
    r_product,
    spectral_vector,
    triangular_below,
)
from .qtfield import (
    QTRat,
    RAT_MINUS_ONE,
    RAT_ONE,
    RAT_ONE_MINUS_Q,
    RAT_T,
    pochhammer,
    rat_mono,
    t_bracket_rat,
    t_factorial_rat,
    u_eval,
)
from .superspace import (
    SuperPoly,
    cherednik_xi,
    demazure_T,
    demazure_T_inv,
    dunkl_D,
    phi_step,
    random_superpoly,
    shift_w,
    shift_w_inv,
    swap_at,
)
from .symmetry import (
    build_antisymmetric,
    build_symmetric,
    coefficient_identity_check,
    column_strict_classes,
    singular_check,
    symmetric_norm,
    symmetric_via_operator,
    sym_label,
)


@dataclass
class Check:
    suite: str
    anchor: str
    ok: bool
    detail: str = ""


def _c(suite, anchor, ok, detail=""):
    return Check(suite, anchor, bool(ok), detail)


# ---------------------------------------------------------------------------
# hecke
# ---------------------------------------------------------------------------


def suite_hecke(n: int = 5, trials: int = 50, seed: int = 2024, sp_n: int = 4,
                max_degree: int = 3) -> list[Check]:
    checks = []
    ok_braid = ok_comm = ok_quad = ok_inv = True
    for size in range(n + 1):
        for mask in iter_subsets(n, size):
            phi = FermionPoly.basis(mask, n)
            for i in range(1, n - 1):
                if hecke_T(i, hecke_T(i + 1, hecke_T(i, phi))) != hecke_T(
                    i + 1, hecke_T(i, hecke_T(i + 1, phi))
                ):
                    ok_braid = False
            for i in range(1, n):
                for j in range(i + 2, n):
                    if hecke_T(i, hecke_T(j, phi)) != hecke_T(j, hecke_T(i, phi)):
                        ok_comm = False
                two = hecke_T(i, hecke_T(i, phi))
                if two != hecke_T(i, phi).scale(RAT_T - RAT_ONE) + phi.scale(RAT_T):
                    ok_quad = False
                if hecke_T_inv(i, hecke_T(i, phi)) != phi:
                    ok_inv = False
    checks.append(_c("hecke", "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1} on every phi_E", ok_braid, f"N<={n}"))
    checks.append(_c("hecke", "T_i T_j = T_j T_i for |i-j|>=2 on every phi_E", ok_comm, f"N<={n}"))
    checks.append(_c("hecke", "(T_i - t)(T_i + 1) = 0 on every phi_E", ok_quad, f"N<={n}"))
    checks.append(_c("hecke", "T_i^{-1} = (T_i + 1 - t)/t", ok_inv, f"N<={n}"))

    rng = random.Random(seed)
    ok_b = ok_bq = True
    for _ in range(trials):
        m = rng.randint(0, sp_n)
        p = random_superpoly(rng, sp_n, m, max_degree)
        i = rng.randint(1, sp_n - 1)
        quad = demazure_T(i, demazure_T(i, p))
        if quad != demazure_T(i, p).scale(RAT_T - RAT_ONE) + p.scale(RAT_T):
            ok_bq = False
        if i < sp_n - 1:
            if demazure_T(i, demazure_T(i + 1, demazure_T(i, p))) != demazure_T(
                i + 1, demazure_T(i, demazure_T(i + 1, p))
            ):
                ok_b = False
    checks.append(_c("hecke", "(bold T_i + 1)(bold T_i - t) = 0 on random superpolynomials", ok_bq, f"N={sp_n}, {trials} trials"))
    checks.append(_c("hecke", "bold braid relations on random superpolynomials", ok_b, f"N={sp_n}, {trials} trials"))
    return checks


# ---------------------------------------------------------------------------
# fermion
# ---------------------------------------------------------------------------


def suite_fermion(n: int = 6, seed: int = 11) -> list[Check]:
    checks = []
    ok_mdm = True
    for size in range(n + 1):
        for mask in iter_subsets(n, size):
            phi = FermionPoly.basis(mask, n)
            if op_M(op_D(phi)) + op_D(op_M(phi)) != phi.scale(t_bracket_rat(n)):
                ok_mdm = False
    checks.append(_c("fermion", "MD + DM = [N]_t", ok_mdm, f"all phi_E, N={n}"))

    rng = random.Random(seed)
    f = FermionPoly(n)
    for mask in iter_subsets(n, 2):
        f._add_term(mask, QTRat.from_int(rng.randint(-3, 3)))
    checks.append(_c("fermion", "M^2 = 0 and D^2 = 0", op_M(op_M(f)).is_zero() and op_D(op_D(f)).is_zero()))

    nsml = min(n, 5)
    ok_md_t = True
    for size in range(nsml + 1):
        for mask in iter_subsets(nsml, size):
            phi = FermionPoly.basis(mask, nsml)
            for i in range(1, nsml):
                if op_M(hecke_T(i, phi)) != hecke_T(i, op_M(phi)):
                    ok_md_t = False
                if op_D(hecke_T(i, phi)) != hecke_T(i, op_D(phi)):
                    ok_md_t = False
    checks.append(_c("fermion", "M T_i = T_i M and D T_i = T_i D", ok_md_t, f"all phi_E, N={nsml}"))

    ok_adj = True
    for size in range(nsml + 1):
        for mask_a in iter_subsets(nsml, size):
            for mask_b in iter_subsets(nsml, size):
                fa = FermionPoly.basis(mask_a, nsml)
                fb = FermionPoly.basis(mask_b, nsml)
                for i in range(1, nsml):
                    if inner_fermion(hecke_T(i, fa), fb) != inner_fermion(fa, hecke_T(i, fb)):
                        ok_adj = False
    checks.append(_c("fermion", "<T_i f, g> = <f, T_i g>", ok_adj, f"all phi pairs, N={nsml}"))

    ok_eig = ok_orth = ok_norm = True
    for m in range(n + 1):
        labs = all_labels(n, m)
        taus = {}
        for mask, sector in labs:
            e = SubsetE(mask, n)
            tau = build_tau(e, m)
            taus[mask] = tau
            c = contents_mask(mask, n, m)
            for i in range(1, n + 1):
                if jucys_murphy(i, tau) != tau.scale(rat_mono(0, c[i - 1])):
                    ok_eig = False
            if inner_fermion(tau, tau) != tau_norm(e, m):
                ok_norm = False
        masks = [mask for mask, _ in labs]
        for a in range(len(masks)):
            for b in range(a + 1, len(masks)):
                if not inner_fermion(taus[masks[a]], taus[masks[b]]).is_zero():
                    ok_orth = False
    checks.append(_c("fermion", "omega_i tau_E = t^{c(i,E)} tau_E", ok_eig, f"all E, all m, N={n}"))
    checks.append(_c("fermion", "<tau_E, tau_F> = 0 for E != F", ok_orth, f"N={n}"))
    checks.append(_c("fermion", "||tau_E||^2 equals the closed form", ok_norm, f"all E, all m, N={n}"))

    ok_f0 = ok_f1 = ok_dtau = True
    for m in range(0, n - 1):
        f0 = SubsetE(mask_of(list(range(1, m + 1)) + [n], n), n)
        f1 = SubsetE(mask_of(range(1, m + 1), n), n)
        if tau_norm(f0, m) != rat_mono(0, (m + 2) * (n - m - 1)) * t_bracket_rat(n) / t_bracket_rat(n - m):
            ok_f0 = False
        if tau_norm(f1, m + 1) != rat_mono(0, -(m + 1) * (n - m - 1)) * t_bracket_rat(n - m):
            ok_f1 = False
        scale = rat_mono(0, -(m + 1) * (n - m - 1), (-1) ** m) * t_bracket_rat(n - m)
        if op_D(build_tau(f1, m + 1)) != build_tau(f0, m).scale(scale):
            ok_dtau = False
    checks.append(_c("fermion", "||tau_F0||^2 = t^{(m+2)(N-m-1)} [N]_t/[N-m]_t", ok_f0, f"N={n}"))
    checks.append(_c("fermion", "||tau_F1||^2 = t^{-(m+1)(N-m-1)} [N-m]_t", ok_f1, f"N={n}"))
    checks.append(_c("fermion", "D tau_F1 = (-1)^m t^{-(m+1)(N-m-1)} [N-m]_t tau_F0", ok_dtau, f"N={n}"))

    ok_iso = True
    nsm = min(n, 5)
    for m in range(nsm):
        for mask in sector_labels(nsm, m, "Y0"):
            tau = build_tau(SubsetE(mask, nsm), m)
            mf = op_M(tau)
            if inner_fermion(mf, mf) != inner_fermion(tau, tau) * rat_mono(0, m + 1 - nsm) * t_bracket_rat(nsm):
                ok_iso = False
        for mask in sector_labels(nsm, m + 1, "Y1"):
            tau = build_tau(SubsetE(mask, nsm), m + 1)
            dg = op_D(tau)
            if inner_fermion(dg, dg) != inner_fermion(tau, tau) * rat_mono(0, nsm - m - 1) * t_bracket_rat(nsm):
                ok_iso = False
    checks.append(_c("fermion", "||Mf||^2 = t^{m+1-N}[N]_t ||f||^2 and ||Dg||^2 = t^{N-m-1}[N]_t ||g||^2", ok_iso, f"tau bases, N={nsm}"))
    return checks


# ---------------------------------------------------------------------------
# operators (superspace tower)
# ---------------------------------------------------------------------------


def suite_operators(n: int = 4, trials: int = 8, seed: int = 5) -> list[Check]:
    rng = random.Random(seed)
    polys = [random_superpoly(rng, n, rng.randint(0, n), 3) for _ in range(trials)]
    checks = []

    ok = all(demazure_T_inv(i, demazure_T(i, p)) == p for p in polys for i in range(1, n))
    checks.append(_c("operators", "bold T_i bold T_i^{-1} = 1", ok, f"N={n}"))

    ok = all(shift_w_inv(shift_w(p)) == p for p in polys)
    checks.append(_c("operators", "w w^{-1} = 1", ok, f"N={n}"))

    ok = all(
        shift_w(demazure_T(i + 1, p)) == demazure_T(i, shift_w(p))
        for p in polys
        for i in range(1, n - 1)
    )
    checks.append(_c("operators", "w bold T_{i+1} = bold T_i w", ok, f"N={n}"))

    ok = all(
        shift_w(shift_w(demazure_T(1, p))) == demazure_T(n - 1, shift_w(shift_w(p)))
        for p in polys
    )
    checks.append(_c("operators", "w^2 bold T_1 = bold T_{N-1} w^2", ok, f"N={n}"))

    sub = polys[:4]
    ok = all(
        cherednik_xi(i, cherednik_xi(j, p)) == cherednik_xi(j, cherednik_xi(i, p))
        for p in sub
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
    )
    checks.append(_c("operators", "xi_i xi_j = xi_j xi_i", ok, f"N={n}"))

    ok = all(
        demazure_T(j, cherednik_xi(j, p))
        == cherednik_xi(j, p).scale(RAT_T - RAT_ONE) + cherednik_xi(j + 1, demazure_T(j, p))
        for p in sub
        for j in range(1, n)
    )
    checks.append(_c("operators", "bold T_j xi_j = (t-1) xi_j + xi_{j+1} bold T_j", ok, f"N={n}"))

    ok = all(
        cherednik_xi(j, p)
        == demazure_T(j, cherednik_xi(j + 1, demazure_T(j, p))).scale(rat_mono(0, -1))
        for p in sub
        for j in range(1, n)
    )
    checks.append(_c("operators", "xi_{i-1} = t^{-1} bold T_{i-1} xi_i bold T_{i-1}", ok, f"N={n}"))

    ok = all(
        cherednik_xi(i, demazure_T(j, p)) == demazure_T(j, cherednik_xi(i, p))
        for p in sub
        for i in range(1, n + 1)
        for j in range(1, n)
        if abs(i - j) >= 2 and j + 1 != i
    )
    checks.append(_c("operators", "xi_i bold T_j = bold T_j xi_i for |i-j| >= 2", ok, f"N={n}"))

    # x-free input: bold T reduces to the theta action, xi to omega
    ok = True
    for m in range(n + 1):
        for mask, _ in all_labels(n, m):
            tau = build_tau(SubsetE(mask, n), m)
            pt = SuperPoly.from_fermion(tau, m)
            zero = (0,) * n
            for i in range(1, n + 1):
                img = cherednik_xi(i, pt)
                if set(img.x_support()) - {zero}:
                    ok = False
                elif img.x_coefficient(zero) != jucys_murphy(i, tau):
                    ok = False
    checks.append(_c("operators", "xi_i agrees with omega_i on bosonic degree 0", ok, f"N={n}"))

    sm = 3
    rng3 = random.Random(seed + 1)
    polys3 = [random_superpoly(rng3, sm, rng3.randint(0, sm), 2) for _ in range(4)]
    ok = all(
        dunkl_D(i, dunkl_D(j, p)) == dunkl_D(j, dunkl_D(i, p))
        for p in polys3
        for i in range(1, sm + 1)
        for j in range(i + 1, sm + 1)
    )
    checks.append(_c("operators", "D_i D_j = D_j D_i", ok, f"N={sm}"))
    return checks


# ---------------------------------------------------------------------------
# macdonald
# ---------------------------------------------------------------------------


def _build_alt_path(lab) -> SuperPoly:
    """Second admissible path: largest descent instead of smallest."""
    alpha = lab.alpha
    if all(a == 0 for a in alpha):
        return SuperPoly.from_fermion(build_tau(lab.e, lab.m), lab.m)
    if all(alpha[i] <= alpha[i + 1] for i in range(lab.n - 1)):
        from .superspace import phi_inverse
        from .macdonald import label as mk
        from .superspace import affine_phi

        return affine_phi(_build_alt_path(mk(lab.n, lab.m, phi_inverse(alpha), lab.mask)))
    from .macdonald import label as mk

    i = max(i for i in range(1, lab.n) if alpha[i - 1] > alpha[i])
    prev = mk(lab.n, lab.m, swap_at(alpha, i), lab.mask)
    zeta = spectral_vector(prev)
    z = (zeta[i] / zeta[i - 1]).to_rat()
    mp = _build_alt_path(prev)
    from .qtfield import RAT_T_MINUS_ONE

    return demazure_T(i, mp) + mp.scale(RAT_T_MINUS_ONE / (z - RAT_ONE))


def suite_macdonald(n: int = 4, max_degree: int = 2) -> list[Check]:
    checks = []
    ok_eig = ok_tri = ok_path = ok_spec = True
    for m in range(n + 1):
        for d in range(max_degree + 1):
            seen = {}
            for lab in labels_of_degree(n, m, d):
                mp = build_macdonald(lab)
                zeta = spectral_vector(lab)
                for i in range(1, n + 1):
                    if cherednik_xi(i, mp) != mp.scale(zeta[i - 1].to_rat()):
                        ok_eig = False
                if not triangular_below(lab, mp):
                    ok_tri = False
                key = tuple(zeta)
                if key in seen:
                    ok_spec = False
                seen[key] = lab
                if d >= 1 and sum(1 for a in lab.alpha if a) >= 1:
                    if _build_alt_path(lab) != mp:
                        ok_path = False
    checks.append(_c("macdonald", "xi_i M_{alpha,E} = zeta_{alpha,E}(i) M_{alpha,E}", ok_eig, f"N={n}, |alpha|<={max_degree}"))
    checks.append(_c("macdonald", "non-leading monomials of M are strictly below alpha", ok_tri, f"N={n}, |alpha|<={max_degree}"))
    checks.append(_c("macdonald", "two admissible build paths give identical polynomials", ok_path, f"N={n}, |alpha|<={max_degree}"))
    checks.append(_c("macdonald", "spectral vectors are distinct within a sector pair", ok_spec, f"N={n}, |alpha|<={max_degree}"))

    # worked example
    lab = label(5, 2, (0, 0, 1, 0, 0), mask_of([3, 4, 5], 5))
    zeta = [z.to_rat() for z in spectral_vector(lab)]
    expect = [rat_mono(0, 1), rat_mono(0, -2), rat_mono(1, 2), rat_mono(0, -1), RAT_ONE]
    checks.append(_c("macdonald", "spectral vector of the N=5 example is [t, t^-2, q t^2, t^-1, 1]", zeta == expect))
    mp = build_macdonald(lab)
    checks.append(_c("macdonald", "bold T_4 M = -M for the N=5 example", demazure_T(4, mp) == mp.scale(RAT_MINUS_ONE)))

    # two-term expansion rule at an ascent
    ok_two = True
    for m in (1, 2):
        for lab2 in labels_of_degree(4, m, 2):
            alpha = lab2.alpha
            asc = [i for i in range(1, 4) if alpha[i - 1] < alpha[i]]
            if not asc:
                continue
            i = asc[0]
            mp2 = build_macdonald(lab2)
            zet = spectral_vector(lab2)
            z = (zet[i] / zet[i - 1]).to_rat()
            b = (RAT_T - RAT_ONE) / (z - RAT_ONE)
            swapped = build_macdonald(label(4, m, swap_at(alpha, i), lab2.mask))
            if demazure_T(i, mp2) != swapped - mp2.scale(b):
                ok_two = False
            bb = (RAT_T - RAT_ONE) / (z.inverse() - RAT_ONE)
            if demazure_T(i, swapped) != mp2.scale(u_eval("full", z)) - swapped.scale(bb):
                ok_two = False
    checks.append(_c("macdonald", "bold T_i M_{beta,F} = -((t-1)/(z-1)) M_{beta,F} + M_{s_i beta,F} at ascents", ok_two, "N=4"))

    # affine relation (x_N w)^N M = q^{|alpha|} t^v x_1..x_N M
    ok_aff = True
    for m in range(3):
        for lab3 in labels_of_degree(3, m, 1):
            mp3 = build_macdonald(lab3)
            out = mp3
            from .superspace import affine_phi

            for _ in range(3):
                out = affine_phi(out)
            total = sum(contents_mask(lab3.mask, 3, m))
            v = 3 * (3 - 1) // 2 + total
            target = mp3.mul_x((1, 1, 1)).scale(rat_mono(sum(lab3.alpha), v))
            if out != target:
                ok_aff = False
    checks.append(_c("macdonald", "(x_N w)^N M_{alpha,E} = q^{|alpha|} t^{N(N-1)/2 + sum c(i,E)} x_1..x_N M_{alpha,E}", ok_aff, "N=3"))

    # Dunkl on labels
    ok_dk = True
    for m in range(3):
        for lab4 in labels_of_degree(3, m, 1):
            mp4 = build_macdonald(lab4)
            if lab4.alpha[-1] == 0:
                if not dunkl_D(3, mp4).is_zero():
                    ok_dk = False
            else:
                from .superspace import phi_inverse

                prev = label(3, m, phi_inverse(lab4.alpha), lab4.mask)
                zeta1 = spectral_vector(prev)[0]
                factor = RAT_ONE - rat_mono(zeta1.a + 1, zeta1.b)
                if dunkl_D(3, mp4) != shift_w(build_macdonald(prev)).scale(factor):
                    ok_dk = False
    checks.append(_c("macdonald", "D_N M = 0 if alpha_N = 0; D_N M_{Phi alpha,E} = (1 - q zeta_alpha(1)) w M_{alpha,E}", ok_dk, "N=3"))
    return checks


# ---------------------------------------------------------------------------
# norms
# ---------------------------------------------------------------------------


def suite_norms(n: int = 4, max_degree: int = 2) -> list[Check]:
    checks = []
    ok_rec = ok_form = ok_phi = ok_swap = True
    for m in range(n + 1):
        for d in range(max_degree + 1):
            for lab in labels_of_degree(n, m, d):
                closed = macdonald_norm(lab)
                if closed != norm_via_recursion(lab):
                    ok_rec = False
                mp = build_macdonald(lab)
                if closed != form_inner(mp, mp):
                    ok_form = False
                # affine ratio
                nxt = label(n, m, phi_step(lab.alpha), lab.mask)
                zeta1 = spectral_vector(lab)[0]
                ratio = (RAT_ONE - rat_mono(zeta1.a + 1, zeta1.b)) / RAT_ONE_MINUS_Q
                if macdonald_norm(nxt) != ratio * closed:
                    ok_phi = False
                # ascent ratio
                for i in range(1, n):
                    if lab.alpha[i - 1] < lab.alpha[i]:
                        zet = spectral_vector(lab)
                        z = (zet[i] / zet[i - 1]).to_rat()
                        other = label(n, m, swap_at(lab.alpha, i), lab.mask)
                        if macdonald_norm(other) != u_eval("full", z) * closed:
                            ok_swap = False
    checks.append(_c("norms", "closed-form ||M||^2 equals the step recursion", ok_rec, f"N={n}, |alpha|<={max_degree}"))
    checks.append(_c("norms", "closed-form ||M||^2 equals form_inner(M, M)", ok_form, f"N={n}, |alpha|<={max_degree}"))
    checks.append(_c("norms", "||M_{Phi alpha,E}||^2 = (1 - q^{alpha_1+1} t^{c(r(1),E)})/(1-q) ||M||^2", ok_phi, f"N={n}"))
    checks.append(_c("norms", "||M_{s_i alpha,E}||^2 = u(zeta(i+1)/zeta(i)) ||M||^2 at ascents", ok_swap, f"N={n}"))
    return checks


# ---------------------------------------------------------------------------
# form
# ---------------------------------------------------------------------------


def suite_form(n: int = 3, pairs: int = 20, seed: int = 17) -> list[Check]:
    rng = random.Random(seed)
    ok1 = ok2 = ok3 = True
    for _ in range(pairs):
        m = rng.randint(0, n)
        d = rng.randint(1, 2)
        f = random_superpoly(rng, n, m, d, homogeneous_degree=d)
        g = random_superpoly(rng, n, m, d, homogeneous_degree=d)
        i = rng.randint(1, n - 1)
        if form_inner(demazure_T(i, f), g) != form_inner(f, demazure_T(i, g)):
            ok1 = False
        if form_inner(cherednik_xi(n, f), g) != form_inner(f, cherednik_xi(n, g)):
            ok2 = False
        h = random_superpoly(rng, n, m, d - 1, homogeneous_degree=d - 1)
        from .superspace import affine_phi

        lhs = form_inner(shift_w_inv(dunkl_D(n, f)), h)
        rhs = RAT_ONE_MINUS_Q * form_inner(f, affine_phi(h))
        if lhs != rhs:
            ok3 = False
    checks = [
        _c("form", "<bold T_i f, g> = <f, bold T_i g>", ok1, f"N={n}, {pairs} pairs"),
        _c("form", "<xi_N f, g> = <f, xi_N g>", ok2, f"N={n}, {pairs} pairs"),
        _c("form", "<w^{-1} D_N f, g> = (1-q) <f, x_N w g>", ok3, f"N={n}, {pairs} pairs"),
    ]
    return checks


# ---------------------------------------------------------------------------
# symmetry
# ---------------------------------------------------------------------------


def suite_symmetry(n: int = 4, max_total: int = 3) -> list[Check]:
    checks = []
    ok_ann = ok_route = ok_norm = ok_perm = True
    classes = 0
    for m in range(n + 1):
        for lab in column_strict_classes(n, m, max_total):
            classes += 1
            p = build_symmetric(lab.lam, lab.e_sink, lab.m)
            if not all(demazure_T(i, p) == p.scale(RAT_T) for i in range(1, n)):
                ok_ann = False
            if symmetric_via_operator(lab) != p:
                ok_route = False
            if symmetric_norm(lab.lam, lab.e_sink, lab.m) != form_inner(p, p):
                ok_norm = False
            base = sorted(spectral_vector(label(n, m, lab.lam, lab.sink)))
            from .symmetry import enumerate_equivalent

            for member in enumerate_equivalent(lab):
                if sorted(spectral_vector(member)) != base:
                    ok_perm = False
    checks.append(_c("symmetry", "(bold T_i - t) p_{lambda,E} = 0", ok_ann, f"N={n}, |lambda|<={max_total}, {classes} classes"))
    checks.append(_c("symmetry", "coefficient formula equals S^{(N-1)} M_{lambda^-,E_R} / prod [m_i]_t!", ok_route, f"N={n}"))
    checks.append(_c("symmetry", "closed-form ||p_{lambda,E}||^2 equals form_inner(p, p)", ok_norm, f"N={n}"))
    checks.append(_c("symmetry", "spectral vectors within a class are permutations of each other", ok_perm, f"N={n}"))

    # M-map transport: symmetric p in Y0 maps to a symmetric element in Y1
    ok_transport = True
    for m in range(n - 1):
        for lab in column_strict_classes(n, m, 2):
            if lab.sector != "Y0":
                continue
            p = build_symmetric(lab.lam, lab.e_sink, lab.m)
            q = SuperPoly(n, m + 1)
            for alpha in p.x_support():
                img = op_M(p.x_coefficient(alpha))
                for mask2, c in img.terms.items():
                    q._add_term((alpha, mask2), c)
            if q.is_zero():
                ok_transport = False
                continue
            if not all(demazure_T(i, q) == q.scale(RAT_T) for i in range(1, n)):
                ok_transport = False
    checks.append(_c("symmetry", "op_M carries Y0-sector symmetric polynomials to symmetric ones", ok_transport, f"N={n}"))

    ok_anti = True
    from .symmetry import row_strict_classes

    for m in range(n + 1):
        for lab in row_strict_classes(n, m, 2):
            pa = build_antisymmetric(lab.lam, lab.e_sink, lab.m)
            if not all(demazure_T(i, pa) == pa.scale(RAT_MINUS_ONE) for i in range(1, n)):
                ok_anti = False
    checks.append(_c("symmetry", "(bold T_i + 1) p^a_{lambda,E} = 0", ok_anti, f"N={n}, |lambda|<=2"))
    return checks


# ---------------------------------------------------------------------------
# identity / singular
# ---------------------------------------------------------------------------


def suite_identity(n: int = 4, max_total: int = 3, include_paper_case: bool = True) -> list[Check]:
    checks = []
    ok = True
    count = 0
    for m in range(n + 1):
        for lab in column_strict_classes(n, m, max_total):
            if lab.sector != "Y0":
                continue
            rep = coefficient_identity_check(lab.lam, lab.e_sink, lab.m)
            count += 1
            if not rep.ok:
                ok = False
    checks.append(_c("identity", "sum C_1(F) R_0/(C_0(F) R_1) = [N]_t!/prod [m_i]_t! C_1(E_R)/(C_0(E_S) R_1(lambda^-,E_R))", ok, f"N={n}, {count} Y0 classes"))
    if include_paper_case:
        rep = coefficient_identity_check((2, 2, 1, 1, 0), SubsetE(mask_of([1, 3, 5], 5), 5), 2)
        checks.append(_c("identity", "the 120-label class at N=5, m=2, lambda=(2,2,1,1,0) sums exactly", rep.ok, f"{rep.labels} labels"))
    return checks


def suite_singular() -> list[Check]:
    checks = []
    for case in ("example1", "example2"):
        rep = singular_check(case)
        for name, dz, fz in rep.results:
            checks.append(_c("singular", f"{case} at {name}: D_i M = 0 for 1 <= i <= 5", dz))
            checks.append(_c("singular", f"{case} at {name}: line factorization t^* (..x1 - x2)(q..x1 - x2) tau_E", fz))
    return checks


SUITES = {
    "hecke": lambda **kw: suite_hecke(**_pick(kw, "n", "trials", "seed", "max_degree")),
    "fermion": lambda **kw: suite_fermion(**_pick(kw, "n", "seed")),
    "operators": lambda **kw: suite_operators(**_pick(kw, "n", "trials", "seed")),
    "macdonald": lambda **kw: suite_macdonald(**_pick(kw, "n", "max_degree")),
    "norms": lambda **kw: suite_norms(**_pick(kw, "n", "max_degree")),
    "form": lambda **kw: suite_form(**_pick(kw, "n", "pairs", "seed")),
    "symmetry": lambda **kw: suite_symmetry(**_pick(kw, "n", "max_total")),
    "identity": lambda **kw: suite_identity(**_pick(kw, "n", "max_total")),
    "singular": lambda **kw: suite_singular(),
}


def _pick(kw, *names):
    return {k: v for k, v in kw.items() if k in names and v is not None}


def run_suite(name: str, **kw) -> list[Check]:
    if name == "all":
        out = []
        for key in SUITES:
            out.extend(run_suite(key, **kw))
        return out
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[name](**kw)

"""Nonsymmetric Macdonald superpolynomials M_{alpha,E}.

Construction walks the Yang-Baxter graph from the degree-zero roots
M_{0,E} = tau_E: the affine step M_{Phi alpha,E} = x_N w M_{alpha,E}
raises degree, and for an ascent alpha_i < alpha_{i+1} the step
M_{s_i alpha,E} = (T_i + (t-1)/(z-1)) M_{alpha,E} with
z = zeta_{alpha,E}(i+1)/zeta_{alpha,E}(i) swaps spectral entries.  Each
build verifies its leading term t^{e(alpha+)} q^{b(alpha)}
x^alpha R_alpha(tau_E) independently.

Also here: spectral vectors, the R- and C-products of u-factors, the
closed-form squared norms for the bilinear form in which every bold-T_i
and xi_i is self-adjoint, triangular expansion of homogeneous
superpolynomials in the M basis, and the form itself.
"""

from __future__ import annotations

import hashlib
import os
import threading
from dataclasses import dataclass

from .fermion import (
    FermionPoly,
    SECTOR_Y0,
    SECTOR_Y1,
    SubsetE,
    all_labels,
    apply_word,
    apply_word_inv,
    contents_mask,
    inner_fermion,
    sector_of,
    tau_norm,
    build_tau,
)
from .qtfield import (
    LaurentMono,
    QTRat,
    RAT_ONE,
    RAT_ONE_MINUS_Q,
    RAT_T_MINUS_ONE,
    pochhammer,
    rat_mono,
    u_eval,
)
from .superspace import (
    SuperPoly,
    affine_phi,
    b_stat,
    comp_sorted,
    demazure_T,
    order_key,
    phi_inverse,
    rank_perm,
    reduced_word,
    swap_at,
)


@dataclass(frozen=True)
class MacdonaldLabel:
    """A node (alpha, E) of the Yang-Baxter graph, with cached data."""

    n: int
    m: int
    alpha: tuple[int, ...]
    mask: int

    def __post_init__(self):
        if len(self.alpha) != self.n or any(a < 0 for a in self.alpha):
            raise ValueError("alpha must be a length-N vector of nonnegative ints")
        sector_of(self.mask, self.n, self.m)  # validates

    @property
    def e(self) -> SubsetE:
        return SubsetE(self.mask, self.n)

    @property
    def sector(self) -> str:
        return sector_of(self.mask, self.n, self.m)

    @property
    def contents(self) -> tuple[int, ...]:
        return contents_mask(self.mask, self.n, self.m)

    @property
    def r(self) -> tuple[int, ...]:
        return rank_perm(self.alpha)

    def spectral(self) -> tuple[LaurentMono, ...]:
        return spectral_vector(self)


def label(n: int, m: int, alpha, e) -> MacdonaldLabel:
    mask = e.mask if isinstance(e, SubsetE) else e
    return MacdonaldLabel(n, m, tuple(alpha), mask)


def spectral_vector(lab: MacdonaldLabel) -> tuple[LaurentMono, ...]:
    """zeta_{alpha,E}(i) = q^{alpha_i} t^{c(r_alpha(i),E)}."""
    c = lab.contents
    r = lab.r
    return tuple(
        LaurentMono(a, c[r[i] - 1]) for i, a in enumerate(lab.alpha)
    )


def e_stat(alpha: tuple[int, ...], contents: tuple[int, ...]) -> int:
    """t-exponent of the leading coefficient: sum_i alpha+_i (N - i + c(i,E))."""
    n = len(alpha)
    ap = comp_sorted(alpha)
    return sum(ap[i] * (n - (i + 1) + contents[i]) for i in range(n))


def k_stat(lam: tuple[int, ...]) -> int:
    """k(lambda) = sum_i (N - 2i + 1) lambda_i."""
    n = len(lam)
    return sum((n - 2 * (i + 1) + 1) * lam[i] for i in range(n))


def leading_theta(lab: MacdonaldLabel) -> FermionPoly:
    """R_alpha(tau_E): the theta part of the leading term."""
    tau = build_tau(lab.e, lab.m)
    return apply_word_inv(reduced_word(lab.r), tau)


# ---------------------------------------------------------------------------
# Builder with get-or-compute cache (single computation per key)
# ---------------------------------------------------------------------------


class _BuildCache:
    def __init__(self):
        self._lock = threading.Lock()
        self._entries: dict = {}

    def get_or_compute(self, key, compute):
        with self._lock:
            slot = self._entries.get(key)
            if slot is None:
                slot = (threading.Event(), [None])
                self._entries[key] = slot
                owner = True
            else:
                owner = False
        event, box = slot
        if owner:
            try:
                box[0] = compute()
            finally:
                event.set()
            return box[0]
        event.wait()
        if box[0] is None:
            raise RuntimeError("concurrent build failed")
        return box[0]

    def clear(self):
        with self._lock:
            self._entries.clear()


_CACHE = _BuildCache()


def clear_macdonald_cache() -> None:
    _CACHE.clear()


def _cache_dir() -> str | None:
    return os.environ.get("MACD_CACHE_DIR") or None


def _disk_key(lab: MacdonaldLabel) -> str:
    from .fermion import members_of

    alpha = ",".join(map(str, lab.alpha))
    members = ",".join(map(str, members_of(lab.mask)))
    return f"N={lab.n};m={lab.m};alpha={alpha};E={members}"


def _disk_path(lab: MacdonaldLabel) -> str:
    digest = hashlib.sha256(_disk_key(lab).encode()).hexdigest()[:32]
    return os.path.join(_cache_dir(), f"macd_{digest}.json")


def _disk_load(lab: MacdonaldLabel) -> SuperPoly | None:
    path = _disk_path(lab)
    if not os.path.exists(path):
        return None
    import json

    from .serialize import superpoly_from_json

    with open(path, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("key") != _disk_key(lab):
        return None
    return superpoly_from_json(doc, lab.n, lab.m)


def _disk_store(lab: MacdonaldLabel, p: SuperPoly) -> None:
    import json

    from .serialize import superpoly_to_json

    doc = superpoly_to_json(p)
    doc["key"] = _disk_key(lab)
    path = _disk_path(lab)
    tmp = path + ".tmp"
    os.makedirs(_cache_dir(), exist_ok=True)
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, sort_keys=True)
    os.replace(tmp, path)


def build_macdonald(lab: MacdonaldLabel, check_leading: bool = True) -> SuperPoly:
    """M_{alpha,E}, memoized; asserts the leading-term normalization."""
    key = (lab.n, lab.m, lab.alpha, lab.mask)
    return _CACHE.get_or_compute(key, lambda: _build(lab, check_leading))


def _build(lab: MacdonaldLabel, check_leading: bool) -> SuperPoly:
    if _cache_dir():
        loaded = _disk_load(lab)
        if loaded is not None:
            return loaded
    alpha = lab.alpha
    if all(a == 0 for a in alpha):
        out = SuperPoly.from_fermion(build_tau(lab.e, lab.m), lab.m)
    elif all(alpha[i] <= alpha[i + 1] for i in range(lab.n - 1)):
        # weakly increasing and nonzero: undo the affine step
        prev = label(lab.n, lab.m, phi_inverse(alpha), lab.mask)
        out = affine_phi(build_macdonald(prev, check_leading))
    else:
        # smallest descent; predecessor has an ascent there (c = 1 step)
        i = next(i for i in range(1, lab.n) if alpha[i - 1] > alpha[i])
        prev = label(lab.n, lab.m, swap_at(alpha, i), lab.mask)
        zeta = spectral_vector(prev)
        z = (zeta[i] / zeta[i - 1]).to_rat()
        step = RAT_T_MINUS_ONE / (z - RAT_ONE)
        mp = build_macdonald(prev, check_leading)
        out = demazure_T(i, mp) + mp.scale(step)
    if check_leading and not _leading_ok(lab, out):
        raise AssertionError(f"leading-term check failed for {lab}")
    if _cache_dir():
        _disk_store(lab, out)
    return out


def _leading_ok(lab: MacdonaldLabel, p: SuperPoly) -> bool:
    coeff = rat_mono(b_stat(lab.alpha), e_stat(lab.alpha, lab.contents))
    expected = leading_theta(lab).scale(coeff)
    return p.x_coefficient(lab.alpha) == expected


def triangular_below(lab: MacdonaldLabel, p: SuperPoly) -> bool:
    """All non-leading x-monomials are strictly below alpha in the
    dominance-derived order."""
    from .superspace import comp_before

    return all(
        beta == lab.alpha or comp_before(beta, lab.alpha) for beta in p.x_support()
    )


# ---------------------------------------------------------------------------
# R and C products
# ---------------------------------------------------------------------------

_U_KIND = {"full": "full", "zero": "zero", "one": "one"}


def r_product(lab: MacdonaldLabel, kind: str = "full") -> QTRat:
    """R(alpha,E) = prod over i<j with alpha_i < alpha_j of
    u(q^{alpha_j - alpha_i} t^{c(r(j),E) - c(r(i),E)}); kind picks u, u0, u1."""
    kind = _U_KIND[kind]
    alpha, c, r = lab.alpha, lab.contents, lab.r
    out = RAT_ONE
    n = lab.n
    for i in range(n):
        for j in range(i + 1, n):
            if alpha[i] < alpha[j]:
                z = rat_mono(alpha[j] - alpha[i], c[r[j] - 1] - c[r[i] - 1])
                out = out * u_eval(kind, z)
    return out


def c_product(e: SubsetE, m: int, kind: str = "full") -> QTRat:
    """C_k(E) = prod over pairs i<j<N with c(i,E) < 0 < c(j,E) of
    u_k(t^{c(i,E) - c(j,E)})."""
    kind = _U_KIND[kind]
    c = contents_mask(e.mask, e.n, m)
    out = RAT_ONE
    for i in range(e.n - 1):
        if c[i] >= 0:
            continue
        for j in range(i + 1, e.n - 1):
            if c[j] > 0:
                out = out * u_eval(kind, rat_mono(0, c[i] - c[j]))
    return out


# ---------------------------------------------------------------------------
# Squared norms
# ---------------------------------------------------------------------------


def macdonald_norm(lab: MacdonaldLabel) -> QTRat:
    """||M_{alpha,E}||^2 = R(alpha,E)^{-1} ||M_{alpha+,E}||^2 with the
    partition closed form."""
    return partition_norm(comp_sorted(lab.alpha), lab) / r_product(lab, "full")


def partition_norm(lam: tuple[int, ...], lab: MacdonaldLabel) -> QTRat:
    """||M_{lambda,E}||^2 for a partition lambda:
    t^{k(lambda)} ||tau_E||^2 (1-q)^{-|lambda|} prod_i (q t^{c_i};q)_{lam_i}
    x prod_{i<j} (q t^{c_i-c_j-1};q)_d (q t^{c_i-c_j+1};q)_d / (q t^{c_i-c_j};q)_d^2
    with d = lam_i - lam_j."""
    c = lab.contents
    n = lab.n
    out = rat_mono(0, k_stat(lam)) * tau_norm(lab.e, lab.m)
    out = out / RAT_ONE_MINUS_Q ** sum(lam)
    for i in range(n):
        if lam[i]:
            out = out * pochhammer(rat_mono(1, c[i]), lam[i])
    for i in range(n):
        for j in range(i + 1, n):
            d = lam[i] - lam[j]
            if d == 0:
                continue
            dc = c[i] - c[j]
            out = out * pochhammer(rat_mono(1, dc - 1), d)
            out = out * pochhammer(rat_mono(1, dc + 1), d)
            out = out / pochhammer(rat_mono(1, dc), d) ** 2
    return out


def norm_via_recursion(lab: MacdonaldLabel) -> QTRat:
    """||M_{alpha,E}||^2 by composing the affine ratio and the u-step
    recursion along the same path the builder takes."""
    alpha = lab.alpha
    if all(a == 0 for a in alpha):
        return tau_norm(lab.e, lab.m)
    if all(alpha[i] <= alpha[i + 1] for i in range(lab.n - 1)):
        prev = label(lab.n, lab.m, phi_inverse(alpha), lab.mask)
        zeta1 = spectral_vector(prev)[0]
        factor = (RAT_ONE - rat_mono(1 + zeta1.a, zeta1.b)) / RAT_ONE_MINUS_Q
        return factor * norm_via_recursion(prev)
    i = next(i for i in range(1, lab.n) if alpha[i - 1] > alpha[i])
    prev = label(lab.n, lab.m, swap_at(alpha, i), lab.mask)
    zeta = spectral_vector(prev)
    z = (zeta[i] / zeta[i - 1]).to_rat()
    return u_eval("full", z) * norm_via_recursion(prev)


# ---------------------------------------------------------------------------
# Expansion in the M basis and the bilinear form
# ---------------------------------------------------------------------------


def expand_in_basis(p: SuperPoly) -> dict[MacdonaldLabel, QTRat]:
    """Coefficients c_{alpha,E} with p = sum c_{alpha,E} M_{alpha,E}.

    Triangular elimination on the leading monomials in descending order;
    the theta coefficient at each pivot is resolved against the orthogonal
    tau basis through R_alpha.
    """
    p.require_homogeneous("expansion in the Macdonald basis")
    n, m = p.n, p.m
    taus = {
        (mask, sector): build_tau(SubsetE(mask, n), m)
        for mask, sector in all_labels(n, m)
    }
    tau_norms = {
        key: inner_fermion(tau, tau) for key, tau in taus.items()
    }
    out: dict[MacdonaldLabel, QTRat] = {}
    residual = p.copy()
    while not residual.is_zero():
        alpha = max(residual.x_support(), key=order_key)
        g = residual.x_coefficient(alpha)
        word = reduced_word(rank_perm(alpha))
        h = apply_word(word, g)  # = R_alpha^{-1} g, expand in tau basis
        for (mask, sector), tau in taus.items():
            d = inner_fermion(h, tau)
            if d.is_zero():
                continue
            d = d / tau_norms[(mask, sector)]
            lab = label(n, m, alpha, mask)
            lead = rat_mono(b_stat(alpha), e_stat(alpha, lab.contents))
            coeff = d / lead
            out[lab] = coeff
            residual = residual - build_macdonald(lab).scale(coeff)
        if alpha in residual.x_support():
            raise ArithmeticError("not in span: pivot monomial did not eliminate")
    return out


def form_inner(f: SuperPoly, g: SuperPoly) -> QTRat:
    """The symmetric bilinear form: diagonal in the M basis with
    <M_{alpha,E}, M_{alpha,E}> = ||M_{alpha,E}||^2."""
    if f.n != g.n or f.m != g.m:
        raise ValueError("incompatible shapes")
    if f.is_zero() or g.is_zero():
        return QTRat.from_int(0)
    df = f.require_homogeneous("the bilinear form")
    dg = g.require_homogeneous("the bilinear form")
    if df != dg:
        return QTRat.from_int(0)
    cf = expand_in_basis(f)
    cg = cf if g == f else expand_in_basis(g)
    total = QTRat.from_int(0)
    for lab, a in cf.items():
        b = cg.get(lab)
        if b is not None:
            total = total + a * b * macdonald_norm(lab)
    return total


def labels_of_degree(n: int, m: int, degree: int):
    """Every (alpha, E) with |alpha| = degree, deterministic order."""
    from .superspace import compositions

    for alpha in compositions(n, degree):
        for mask, sector in all_labels(n, m):
            yield label(n, m, alpha, mask)

"""Hecke-symmetric and antisymmetric Macdonald superpolynomials.

Symmetric means bold-T_i p = t p for all i < N (antisymmetric: = -p); this
is the Hecke-algebra sense, not the symmetric-group sense.  Labels are
partitions lambda with a hook filling: replacing entry i of the tableau
Y_E by lambda_i gives the filling that indexes the graph-equivalence class
{(beta,F)}.  A class carries a nonzero symmetric polynomial iff its
filling is column-strict (antisymmetric: row-strict), and then

    p_{lambda,E} = sum C_0(E_S) R_0(beta,F) / C_0(F) * M_{beta,F},

normalized so the coefficient of M_{lambda,E_S} is 1; the antisymmetric
version uses C_1, R_1 and the sign (-1)^{inv(beta)+inv(F)+inv(E_S)}.  The
same polynomials arise from the (anti)symmetrizing operators, which gives
the route-equivalence cross-check and the closed-form squared norms.

Special-value factorizations: a symmetric p evaluated at
(z_1..z_m, t^{N-m-1},...,t,1) collapses onto tau_{F} (F = {1..m,N}) times
prod (z_i - t z_j) prod (z_k - t^{N-m}) times a symmetric cofactor, with
the antisymmetric analog at (z_1..z_{N-m-1}, t^{-m},...,t^{-1},1); and two
hard-wired N=5 parameter specializations kill all Dunkl operators and
factor the polynomial on a line.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fermion import (
    FermionPoly,
    SECTOR_Y0,
    SECTOR_Y1,
    SubsetE,
    build_tau,
    contents_mask,
    inv_count_mask,
    mask_of,
    sector_labels,
    sector_of,
    tau_norm,
)
from .macdonald import (
    MacdonaldLabel,
    build_macdonald,
    c_product,
    k_stat,
    label,
    r_product,
    spectral_vector,
)
from .qtfield import (
    QTRat,
    RAT_ONE,
    RAT_ONE_MINUS_Q,
    pochhammer,
    rat_mono,
    specialize,
    t_bracket_rat,
    t_factorial_rat,
)
from .superspace import (
    SuperPoly,
    comp_inv,
    comp_sorted,
    demazure_T,
    distinct_rearrangements,
    dunkl_D,
)

# ---------------------------------------------------------------------------
# Hook fillings and equivalence classes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HookFilling:
    """The filling of the hook tableau Y_E with the parts of lambda.

    row1[k] is the value in cell [1, k+1]; col[r] the value in cell
    [r+2, 1].  Column-strict: the first column, read downward from [1,1],
    strictly increases; row-strict: row 1 strictly increases rightward.
    """

    row1: tuple[int, ...]
    col: tuple[int, ...]

    @property
    def column_strict(self) -> bool:
        seq = (self.row1[0],) + self.col
        return all(a < b for a, b in zip(seq, seq[1:]))

    @property
    def row_strict(self) -> bool:
        return all(a < b for a, b in zip(self.row1, self.row1[1:]))


def hook_fill(lam: tuple[int, ...], e: SubsetE, m: int) -> HookFilling:
    """Replace entry i of Y_E by lambda_i (depends on lambda+ only)."""
    lam_sorted = comp_sorted(lam)
    c = contents_mask(e.mask, e.n, m)
    row = {}
    col = {}
    for i, ci in enumerate(c):
        if ci >= 0:
            row[ci] = lam_sorted[i]
        else:
            col[-ci] = lam_sorted[i]
    row1 = tuple(row[k] for k in range(len(row)))
    column = tuple(col[k] for k in range(1, len(col) + 1))
    return HookFilling(row1, column)


@dataclass(frozen=True)
class SymLabel:
    """A graph-equivalence class: partition, filling, root and sink."""

    n: int
    m: int
    lam: tuple[int, ...]
    sector: str
    fill: HookFilling
    masks: tuple[int, ...]
    root: int
    sink: int

    @property
    def e_root(self) -> SubsetE:
        return SubsetE(self.root, self.n)

    @property
    def e_sink(self) -> SubsetE:
        return SubsetE(self.sink, self.n)

    def multiplicities(self) -> dict[int, int]:
        """m_i = #{j : row 1 of the sink filling has value i}."""
        out: dict[int, int] = {}
        for v in self.fill.row1:
            out[v] = out.get(v, 0) + 1
        return out


def sym_label(lam, e: SubsetE, m: int) -> SymLabel:
    """Resolve the class of (lambda, E): equivalent subsets, root, sink.

    Root/sink extremize inv(F); for the Y1 sector the two roles swap
    (the Yang-Baxter graph starts at maximal inv there).
    """
    n = e.n
    lam = comp_sorted(tuple(lam))
    sector = sector_of(e.mask, n, m)
    fill = hook_fill(lam, e, m)
    masks = tuple(
        f
        for f in sector_labels(n, m, sector)
        if hook_fill(lam, SubsetE(f, n), m) == fill
    )
    by_inv = sorted(masks, key=lambda f: (inv_count_mask(f, n), f))
    if sector == SECTOR_Y0:
        root, sink = by_inv[0], by_inv[-1]
    else:
        root, sink = by_inv[-1], by_inv[0]
    return SymLabel(n, m, lam, sector, fill, masks, root, sink)


def enumerate_equivalent(lab: SymLabel) -> list[MacdonaldLabel]:
    """All (beta, F) with beta+ = lambda and matching filling."""
    out = []
    for beta in distinct_rearrangements(lab.lam):
        for f in lab.masks:
            out.append(label(lab.n, lab.m, beta, f))
    return out


def superpartition(lab: SymLabel) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(Lambda_1..Lambda_m; Lambda_{m+1}..Lambda_N): strict first block from
    column 1 read upward, weak second block from row 1 read rightward."""
    fill = lab.fill
    if lab.sector == SECTOR_Y0:
        first = tuple(reversed(fill.col))
    else:
        first = tuple(reversed((fill.row1[0],) + fill.col))
    second = tuple(reversed(fill.row1)) if lab.sector == SECTOR_Y0 else tuple(
        reversed(fill.row1[1:])
    )
    return first, second


def column_strict_classes(n: int, m: int, max_total: int):
    """Every column-strict class with |lambda| <= max_total, deterministic."""
    seen = set()
    for total in range(max_total + 1):
        for lam in _partitions(total, n):
            for sector in (SECTOR_Y0, SECTOR_Y1):
                for mask in sector_labels(n, m, sector):
                    lab = sym_label(lam, SubsetE(mask, n), m)
                    key = (lab.lam, lab.sink)
                    if key in seen:
                        continue
                    seen.add(key)
                    if lab.fill.column_strict:
                        yield lab


def row_strict_classes(n: int, m: int, max_total: int):
    seen = set()
    for total in range(max_total + 1):
        for lam in _partitions(total, n):
            for sector in (SECTOR_Y0, SECTOR_Y1):
                for mask in sector_labels(n, m, sector):
                    lab = sym_label(lam, SubsetE(mask, n), m)
                    key = (lab.lam, lab.sink)
                    if key in seen:
                        continue
                    seen.add(key)
                    if lab.fill.row_strict:
                        yield lab


def _partitions(total: int, parts: int):
    """Weakly decreasing tuples of the given length summing to total."""

    def rec(remaining, maxpart, k):
        if k == 0:
            if remaining == 0:
                yield ()
            return
        for first in range(min(remaining, maxpart), -1, -1):
            for rest in rec(remaining - first, first, k - 1):
                yield (first,) + rest

    yield from rec(total, total, parts)


# ---------------------------------------------------------------------------
# Symmetrizing operators
# ---------------------------------------------------------------------------


def _x_chain(k: int, p: SuperPoly) -> SuperPoly:
    """X_k p with X_k = 1 + T_k X_{k-1}, X_0 = 1."""
    if k == 0:
        return p
    return p + demazure_T(k, _x_chain(k - 1, p))


def symmetrize(p: SuperPoly) -> SuperPoly:
    """S^{(N-1)} p = X_1 X_2 ... X_{N-1} p; satisfies (T_j - t) S p = 0."""
    for k in range(p.n - 1, 0, -1):
        p = _x_chain(k, p)
    return p


_MINUS_T_INV = rat_mono(0, -1, -1)


def _xa_chain(k: int, p: SuperPoly) -> SuperPoly:
    """X^a_k p with X^a_k = 1 - t^{-1} T_k X^a_{k-1}."""
    if k == 0:
        return p
    return p + demazure_T(k, _xa_chain(k - 1, p)).scale(_MINUS_T_INV)


def antisymmetrize(p: SuperPoly) -> SuperPoly:
    """A^{(N-1)} p = X^a_1 ... X^a_{N-1} p; satisfies (T_j + 1) A p = 0."""
    for k in range(p.n - 1, 0, -1):
        p = _xa_chain(k, p)
    return p


# ---------------------------------------------------------------------------
# Symmetric and antisymmetric polynomials
# ---------------------------------------------------------------------------


def _subset_ratio(lab: SymLabel, member: MacdonaldLabel, kind: str) -> QTRat:
    """The subset-chain factor of a class coefficient.

    Y0: C_k(E_S)/C_k(F).  In Y1 the c=1 subset edges run the other way and
    carry u_0(1/z) = u_1(z), so the flavor and the orientation both flip:
    C_{1-k}(F)/C_{1-k}(E_S).
    """
    if lab.sector == SECTOR_Y0:
        top, bot = lab.e_sink, member.e
    else:
        kind = "one" if kind == "zero" else "zero"
        top, bot = member.e, lab.e_sink
    return c_product(top, lab.m, kind) / c_product(bot, lab.m, kind)


def symmetric_coefficient(lab: SymLabel, member: MacdonaldLabel) -> QTRat:
    """A(beta,F) = C_0(E_S) R_0(beta,F) / C_0(F) (flipped C_1 ratio in Y1)."""
    return _subset_ratio(lab, member, "zero") * r_product(member, "zero")


def build_symmetric(lam, e: SubsetE, m: int) -> SuperPoly:
    """p_{lambda,E}: the unique symmetric polynomial of the class with
    coefficient 1 on M_{lambda,E_S}."""
    lab = sym_label(lam, e, m)
    if not lab.fill.column_strict:
        raise ValueError("no symmetric polynomial exists: filling is not column-strict")
    out = SuperPoly.zero(lab.n, lab.m)
    for member in enumerate_equivalent(lab):
        out = out + build_macdonald(member).scale(symmetric_coefficient(lab, member))
    return out


def symmetric_via_operator(lab: SymLabel) -> SuperPoly:
    """S^{(N-1)} M_{lambda^-, E_R} / prod_i [m_i]_t!: the second route."""
    lam_inc = tuple(sorted(lab.lam))
    m_root = label(lab.n, lab.m, lam_inc, lab.root)
    sym = symmetrize(build_macdonald(m_root))
    scale = RAT_ONE
    for mult in lab.multiplicities().values():
        scale = scale * t_factorial_rat(mult)
    return sym.scale(scale.inverse())


def antisymmetric_coefficient(lab: SymLabel, member: MacdonaldLabel) -> QTRat:
    """sigma(inv(beta) + inv(F) + inv(E_S)) C_1(E_S) R_1(beta,F) / C_1(F)
    (flipped C_0 ratio in Y1)."""
    sgn = (
        comp_inv(member.alpha)
        + inv_count_mask(member.mask, lab.n)
        + inv_count_mask(lab.sink, lab.n)
    )
    coeff = _subset_ratio(lab, member, "one") * r_product(member, "one")
    return coeff if sgn % 2 == 0 else -coeff


def build_antisymmetric(lam, e: SubsetE, m: int) -> SuperPoly:
    """p^a_{lambda,E}: the antisymmetric polynomial of a row-strict class,
    coefficient 1 on M_{lambda,E_S}."""
    lab = sym_label(lam, e, m)
    if not lab.fill.row_strict:
        raise ValueError(
            "no antisymmetric polynomial exists: filling is not row-strict"
        )
    out = SuperPoly.zero(lab.n, lab.m)
    for member in enumerate_equivalent(lab):
        out = out + build_macdonald(member).scale(
            antisymmetric_coefficient(lab, member)
        )
    return out


# ---------------------------------------------------------------------------
# Norms
# ---------------------------------------------------------------------------


def symmetric_norm(lam, e: SubsetE, m: int) -> QTRat:
    """||p_{lambda,E}||^2 in closed form.

    Y0 sector: the expanded product formula (contents taken at the sink,
    pair factors only for lambda_i > lambda_j).  Y1 sector: the composed
    form [N]_t!/prod [m_i]_t! * C_1(E_S) R_0(lambda^-,E_R)/C_1(E_R)
    * ||M_{lambda^-,E_R}||^2, since the expanded display is tied to the Y0
    tau-norm shape.
    """
    from .macdonald import macdonald_norm

    lab = sym_label(lam, e, m)
    if not lab.fill.column_strict:
        raise ValueError("no symmetric polynomial exists: filling is not column-strict")
    n = lab.n
    lamt = lab.lam
    if lab.sector == SECTOR_Y1:
        root_member = label(n, m, tuple(sorted(lamt)), lab.root)
        out = t_factorial_rat(n)
        for mult in lab.multiplicities().values():
            out = out / t_factorial_rat(mult)
        out = out * symmetric_coefficient(lab, root_member)
        return out * macdonald_norm(root_member)
    c = contents_mask(lab.sink, n, m)
    out = rat_mono(0, 2 * (n - m - 1) + k_stat(lamt)) * t_bracket_rat(m + 1)
    out = out / RAT_ONE_MINUS_Q ** sum(lamt)
    for i in range(n):
        if lamt[i]:
            out = out * pochhammer(rat_mono(1, c[i]), lamt[i])
    for i in range(n):
        for j in range(i + 1, n):
            d = lamt[i] - lamt[j]
            if d == 0:
                continue
            dc = c[i] - c[j]
            out = out * pochhammer(rat_mono(1, dc - 1), d)
            out = out * pochhammer(rat_mono(1, dc + 1), d - 1)
            out = out / (RAT_ONE - rat_mono(d, dc))
            out = out / pochhammer(rat_mono(1, dc), d - 1) ** 2
    out = out * t_factorial_rat(n)
    for mult in lab.multiplicities().values():
        out = out / t_factorial_rat(mult)
    out = out * c_product(lab.e_sink, m, "zero") * c_product(lab.e_root, m, "one")
    return out


def minimal_symmetric_label(n: int, m: int) -> SymLabel:
    """lambda = (m, m-1, ..., 1, 0, ...), E = {1..m, N}: the minimal
    bosonic-degree symmetric class (root = sink)."""
    lam = tuple(range(m, 0, -1)) + (0,) * (n - m)
    e = SubsetE(mask_of(list(range(1, m + 1)) + [n], n), n)
    return sym_label(lam, e, m)


def minimal_symmetric_norm(n: int, m: int) -> QTRat:
    """Concise form of ||p||^2 for the minimal symmetric polynomial:
    (1-q)^{-m(m+1)/2} [N]_t! [N]_t t^gamma / ([N-m]_t! [N-m]_t)
    (q t^-N;q)_m prod_{j=2..m} (q t^-j;q)_{j-1}.

    The (1-q) power (|lambda| = m(m+1)/2 affine steps) is required for
    agreement with the bilinear form.
    """
    gamma = (n - m - 1) * (1 + (m + 1) * (m + 2) // 2) + m * (m + 1) * (m + 2) // 6
    out = t_factorial_rat(n) * t_bracket_rat(n) * rat_mono(0, gamma)
    out = out / (t_factorial_rat(n - m) * t_bracket_rat(n - m))
    out = out / RAT_ONE_MINUS_Q ** (m * (m + 1) // 2)
    out = out * pochhammer(rat_mono(1, -n), m)
    for j in range(2, m + 1):
        out = out * pochhammer(rat_mono(1, -j), j - 1)
    return out


def hook_length_product(n: int, m: int) -> QTRat:
    """prod over cells of Y_E of (q t^{-hook};q)_{leg} for the minimal
    class; row-1 cells beyond the corner have leg 0 and contribute 1."""
    out = pochhammer(rat_mono(1, -n), m)  # corner: hook N, leg m
    for i in range(2, m + 2):  # column cells: hook m+2-i, leg m+1-i
        out = out * pochhammer(rat_mono(1, -(m + 2 - i)), m + 1 - i)
    return out


# ---------------------------------------------------------------------------
# The summed coefficient identity
# ---------------------------------------------------------------------------


@dataclass
class IdentityReport:
    lhs: QTRat
    rhs: QTRat
    labels: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def coefficient_identity_check(lam, e: SubsetE, m: int) -> IdentityReport:
    """sum over the class of C_1(F) R_0(beta,F) / (C_0(F) R_1(beta,F))
    against [N]_t!/prod [m_i]_t! * C_1(E_R) / (C_0(E_S) R_1(lambda^-,E_R))."""
    lab = sym_label(lam, e, m)
    if not lab.fill.column_strict:
        raise ValueError("identity requires a column-strict filling")
    lhs = QTRat.from_int(0)
    count = 0
    for member in enumerate_equivalent(lab):
        c1f = c_product(member.e, m, "one")
        c0f = c_product(member.e, m, "zero")
        term = c1f * r_product(member, "zero") / (c0f * r_product(member, "one"))
        lhs = lhs + term
        count += 1
    rhs = t_factorial_rat(lab.n)
    for mult in lab.multiplicities().values():
        rhs = rhs / t_factorial_rat(mult)
    lam_inc = tuple(sorted(lab.lam))
    root_member = label(lab.n, m, lam_inc, lab.root)
    rhs = rhs * c_product(lab.e_root, m, "one")
    rhs = rhs / (c_product(lab.e_sink, m, "zero") * r_product(root_member, "one"))
    return IdentityReport(lhs, rhs, count)


# ---------------------------------------------------------------------------
# Special-value factorizations
# ---------------------------------------------------------------------------


@dataclass
class SpecialValueReport:
    pattern: str
    tau_label: SubsetE
    factors: list[str]
    collapsed: bool
    divisible: bool
    cofactor_symmetric: bool
    cofactor: SuperPoly | None = None

    @property
    def ok(self) -> bool:
        return self.collapsed and self.divisible and self.cofactor_symmetric


def _match_tau(p: SuperPoly, tau: FermionPoly) -> SuperPoly | None:
    """If every theta coefficient of p is a scalar multiple of tau, return
    the scalar polynomial (theta part stripped, m = 0)."""
    probe_mask, probe_coef = next(iter(tau.terms.items()))
    out = SuperPoly.zero(p.n, 0)
    for alpha in p.x_support():
        g = p.x_coefficient(alpha)
        lead = g.terms.get(probe_mask)
        if lead is None:
            return None
        ratio = lead / probe_coef
        if g != tau.scale(ratio):
            return None
        out._add_term((alpha, 0), ratio)
    return out


def _swap_vars(p: SuperPoly, i: int, j: int) -> SuperPoly:
    out = SuperPoly(p.n, p.m)
    for (alpha, mask), c in p.terms.items():
        a = list(alpha)
        a[i - 1], a[j - 1] = a[j - 1], a[i - 1]
        out._add_term((tuple(a), mask), c)
    return out


def special_value(p: SuperPoly, pattern: str) -> SpecialValueReport:
    """Evaluate at the structured point and factor.

    pattern 'symmetric': z = (z_1..z_m, t^{N-m-1},...,t,1); the theta part
    collapses to tau_F with F = {1..m,N} (E_1 for the Y1 sector) and
    prod_{i<j<=m} (z_i - t z_j) prod_k (z_k - t^{N-m}) divides exactly.

    pattern 'antisymmetric': z = (z_1..z_{N-m-1}, t^{-m},...,t^{-1},1);
    collapse onto tau_{E0} and factors prod (t z_i - z_j),
    prod (t^{m+1} z_k - 1).  The remaining cofactor must be symmetric in
    the free z variables.
    """
    n, m = p.n, p.m
    if pattern == "symmetric":
        free = m
        spec = [(RAT_ONE, i + 1) for i in range(m)]
        spec += [(rat_mono(0, n - m - k), None) for k in range(1, n - m + 1)]
        candidates = [
            (SECTOR_Y0, mask_of(list(range(1, m + 1)) + [n], n)),
            (SECTOR_Y1, mask_of(range(1, m), n)),
        ]
    elif pattern == "antisymmetric":
        free = n - m - 1
        spec = [(RAT_ONE, i + 1) for i in range(free)]
        spec += [(rat_mono(0, -(m - k)), None) for k in range(0, m + 1)]
        candidates = [(SECTOR_Y0, mask_of(range(n - m, n + 1), n))]
    else:
        raise ValueError(f"unknown pattern {pattern!r}")

    evaluated = p.subst_x(spec)
    stripped = None
    tau_e = None
    for sector, mask in candidates:
        try:
            sector_of(mask, n, m)
        except ValueError:
            continue
        tau = build_tau(SubsetE(mask, n), m)
        stripped = _match_tau(evaluated, tau)
        if stripped is not None:
            tau_e = SubsetE(mask, n)
            break
    if stripped is None:
        return SpecialValueReport(pattern, SubsetE(0, n), [], False, False, False)

    factors: list[str] = []
    divisible = True
    work = stripped
    try:
        if pattern == "symmetric":
            for i in range(1, free + 1):
                for j in range(i + 1, free + 1):
                    work = work.divide_exact(i, rat_mono(0, 1), j)
                    factors.append(f"x{i} - t*x{j}")
            for k in range(1, free + 1):
                work = work.divide_exact(k, rat_mono(0, n - m), None)
                factors.append(f"x{k} - t^{n - m}")
        else:
            # t z_i - z_j = t (z_i - t^{-1} z_j); t^{m+1} z_k - 1 likewise
            scale = RAT_ONE
            for i in range(1, free + 1):
                for j in range(i + 1, free + 1):
                    work = work.divide_exact(i, rat_mono(0, -1), j)
                    scale = scale * rat_mono(0, 1)
                    factors.append(f"t*x{i} - x{j}")
            for k in range(1, free + 1):
                work = work.divide_exact(k, rat_mono(0, -(m + 1)), None)
                scale = scale * rat_mono(0, m + 1)
                factors.append(f"t^{m + 1}*x{k} - 1")
            work = work.scale(scale.inverse())
    except ValueError:
        divisible = False

    symmetric_cofactor = False
    if divisible:
        symmetric_cofactor = all(
            _swap_vars(work, i, i + 1) == work for i in range(1, free)
        )
    return SpecialValueReport(
        pattern,
        tau_e,
        factors,
        True,
        divisible,
        symmetric_cofactor,
        work if divisible else None,
    )


# ---------------------------------------------------------------------------
# Hard-wired singular parameter checks (N = 5)
# ---------------------------------------------------------------------------


@dataclass
class SingularReport:
    case: str
    alpha: tuple[int, ...]
    e: SubsetE
    m: int
    results: list[tuple[str, bool, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(d and f for _, d, f in self.results)


def _specializes_to_zero(p: SuperPoly, sub_q, sub_t) -> bool:
    return all(
        specialize(c, sub_q, sub_t).is_zero() for c in p.terms.values()
    )


def _super_specialize(p: SuperPoly, sub_q, sub_t) -> dict:
    out = {}
    for key, c in p.terms.items():
        v = specialize(c, sub_q, sub_t)
        if not v.is_zero():
            out[key] = v
    return out


def singular_check(case: str) -> SingularReport:
    """The two N=5 singular examples: alpha = (2,0,0,0,0) with m=2,
    E={3,4,5} under q^2 t^5 = 1 or q t = -1, and m=3, E={1,2} under
    q^2 = t^5 or q = -t.  Checks D_i M = 0 for all i and the displayed
    line factorization."""
    n = 5
    alpha = (2, 0, 0, 0, 0)
    if case == "example1":
        m, members = 2, [3, 4, 5]
        subs = [("q^2*t^5=1", (1, -5), (1, 2)), ("q*t=-1", (-1, -1), (1, 1))]
        line = [(RAT_ONE, 1), (RAT_ONE, 2)] + [
            (rat_mono(0, k), 2) for k in range(1, 4)
        ]
        # t^10 (t x1 - x2)(q t x1 - x2) tau_E
        pref = rat_mono(0, 10)
        coeffs = {
            (2, 0): pref * rat_mono(1, 2),
            (1, 1): pref * (-(rat_mono(0, 1) + rat_mono(1, 1))),
            (0, 2): pref,
        }
    elif case == "example2":
        m, members = 3, [1, 2]
        subs = [("q^2=t^5", (1, 5), (1, 2)), ("q=-t", (-1, 1), (1, 1))]
        line = [(RAT_ONE, 1), (RAT_ONE, 2)] + [
            (rat_mono(0, -k), 2) for k in range(1, 4)
        ]
        # t^6 (x1/t - x2)(q x1/t - x2) tau_E
        pref = rat_mono(0, 6)
        coeffs = {
            (2, 0): pref * rat_mono(1, -2),
            (1, 1): pref * (-(rat_mono(0, -1) + rat_mono(1, -1))),
            (0, 2): pref,
        }
    else:
        raise ValueError(f"unknown singular case {case!r}")

    e = SubsetE(mask_of(members, n), n)
    lab = label(n, m, alpha, e)
    mpoly = build_macdonald(lab)
    tau = build_tau(e, m)

    target = SuperPoly.zero(n, m)
    for (a1, a2), c in coeffs.items():
        for mask, tc in tau.terms.items():
            target._add_term(((a1, a2, 0, 0, 0), mask), c * tc)
    substituted = mpoly.subst_x(line)

    report = SingularReport(case, alpha, e, m)
    for name, sub_q, sub_t in subs:
        dunkl_zero = all(
            _specializes_to_zero(dunkl_D(i, mpoly), sub_q, sub_t)
            for i in range(1, n + 1)
        )
        factor_ok = _super_specialize(substituted, sub_q, sub_t) == _super_specialize(
            target, sub_q, sub_t
        )
        report.results.append((name, dunkl_zero, factor_ok))
    return report

"""Superpolynomials: commuting x_1..x_N tensored with the theta module.

Carries the operator tower acting on s P_m: the Demazure-Lusztig
generators bold-T_i (Hecke relations), the q-shift w, the commuting
Cherednik operators xi_i, the affine raising map p -> x_N w p, and the
degree-lowering Dunkl operators D_i.  Divided differences are computed per
monomial as exact geometric sums, so no polynomial division ever runs.

Composition bookkeeping (rank permutation, inversions, the dominance-
derived order used for triangularity) lives here as well.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

from .fermion import (
    FermionPoly,
    _t_inv_pairs,
    _t_pairs,
    popcount,
)
from .qtfield import QTRat, RAT_ONE, RAT_T, rat_mono

# ---------------------------------------------------------------------------
# Compositions
# ---------------------------------------------------------------------------


def rank_perm(alpha: tuple[int, ...]) -> tuple[int, ...]:
    """r_alpha(i) = #{j : a_j > a_i} + #{j <= i : a_j = a_i}; sorts alpha to
    its nonincreasing rearrangement alpha+."""
    n = len(alpha)
    out = []
    for i in range(n):
        bigger = sum(1 for a in alpha if a > alpha[i])
        ties = sum(1 for j in range(i + 1) if alpha[j] == alpha[i])
        out.append(bigger + ties)
    return tuple(out)


def comp_inv(alpha: tuple[int, ...]) -> int:
    """inv(alpha) = #{(i,j) : i < j, a_i < a_j}."""
    n = len(alpha)
    return sum(1 for i in range(n) for j in range(i + 1, n) if alpha[i] < alpha[j])


def comp_sorted(alpha: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(alpha, reverse=True))


def b_stat(alpha: tuple[int, ...]) -> int:
    """b(alpha) = sum binom(a_i, 2); the q-exponent of the leading term."""
    return sum(a * (a - 1) // 2 for a in alpha)


def apply_perm(u: tuple[int, ...], alpha: tuple[int, ...]) -> tuple[int, ...]:
    """(u alpha)_i = alpha_{u^{-1}(i)}."""
    out = [0] * len(alpha)
    for j, uj in enumerate(u):
        out[uj - 1] = alpha[j]
    return tuple(out)


@lru_cache(maxsize=None)
def reduced_word(u: tuple[int, ...]) -> tuple[int, ...]:
    """A reduced word u = s_{w[0]} ... s_{w[-1]} (smallest descent first)."""
    w = list(u)
    rev = []
    n = len(w)
    while True:
        for i in range(n - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                rev.append(i + 1)
                break
        else:
            break
    return tuple(reversed(rev))


def dominance_leq(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    """alpha <= beta in dominance: all partial sums of alpha bounded by beta's."""
    s, r = 0, 0
    for a, b in zip(alpha, beta):
        s += a
        r += b
        if s > r:
            return False
    return True


def comp_before(beta: tuple[int, ...], alpha: tuple[int, ...]) -> bool:
    """beta < alpha in the dominance-derived order on compositions."""
    if sum(beta) != sum(alpha) or beta == alpha:
        return False
    bp, ap = comp_sorted(beta), comp_sorted(alpha)
    if bp != ap:
        return dominance_leq(bp, ap)
    return dominance_leq(beta, alpha)


def order_key(alpha: tuple[int, ...]):
    """Total order extending the dominance-derived order (degree, then lex
    on alpha+, then lex on alpha); used for deterministic elimination."""
    return (sum(alpha), comp_sorted(alpha), alpha)


def compositions(n: int, total: int):
    """All length-n compositions of the given total, deterministic order."""
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(n - 1, total - first):
            yield (first,) + rest


def distinct_rearrangements(lam: tuple[int, ...]):
    return sorted(set(permutations(lam)))


def phi_step(alpha: tuple[int, ...]) -> tuple[int, ...]:
    """Phi alpha = (a_2, ..., a_N, a_1 + 1)."""
    return alpha[1:] + (alpha[0] + 1,)


def phi_inverse(alpha: tuple[int, ...]) -> tuple[int, ...]:
    if alpha[-1] < 1:
        raise ValueError("Phi inverse needs a positive last part")
    return (alpha[-1] - 1,) + alpha[:-1]


def swap_at(alpha: tuple[int, ...], i: int) -> tuple[int, ...]:
    out = list(alpha)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


# ---------------------------------------------------------------------------
# SuperPoly
# ---------------------------------------------------------------------------


class SuperPoly:
    """Finite map (exponent vector, theta subset mask) -> QTRat.

    Fermionic degree m is homogeneous by construction; bosonic degree may be
    mixed except where an operation validates homogeneity.
    """

    __slots__ = ("n", "m", "terms")

    def __init__(self, n: int, m: int, terms=None):
        self.n = n
        self.m = m
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero(n: int, m: int) -> "SuperPoly":
        return SuperPoly(n, m)

    @staticmethod
    def from_fermion(f: FermionPoly, m: int) -> "SuperPoly":
        zero = (0,) * f.n
        return SuperPoly(f.n, m, {(zero, mask): c for mask, c in f.terms.items()})

    @staticmethod
    def monomial(alpha, mask: int, n: int, m: int, coeff: QTRat = RAT_ONE) -> "SuperPoly":
        if popcount(mask) != m:
            raise ValueError("theta part has wrong fermionic degree")
        if coeff.is_zero():
            return SuperPoly(n, m)
        return SuperPoly(n, m, {(tuple(alpha), mask): coeff})

    def copy(self) -> "SuperPoly":
        return SuperPoly(self.n, self.m, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SuperPoly)
            and self.n == other.n
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, self.m, frozenset(self.terms.items())))

    def _add_term(self, key, coeff: QTRat) -> None:
        cur = self.terms.get(key)
        if cur is None:
            if coeff:
                self.terms[key] = coeff
            return
        s = cur + coeff
        if s:
            self.terms[key] = s
        else:
            del self.terms[key]

    def __add__(self, other: "SuperPoly") -> "SuperPoly":
        self._check_compatible(other)
        out = self.copy()
        for k, c in other.terms.items():
            out._add_term(k, c)
        return out

    def __sub__(self, other: "SuperPoly") -> "SuperPoly":
        self._check_compatible(other)
        out = self.copy()
        for k, c in other.terms.items():
            out._add_term(k, -c)
        return out

    def __neg__(self) -> "SuperPoly":
        return SuperPoly(self.n, self.m, {k: -c for k, c in self.terms.items()})

    def scale(self, c: QTRat) -> "SuperPoly":
        if c.is_zero():
            return SuperPoly(self.n, self.m)
        return SuperPoly(self.n, self.m, {k: v * c for k, v in self.terms.items()})

    def mul_x(self, gamma) -> "SuperPoly":
        """Multiply by the monomial x^gamma."""
        gamma = tuple(gamma)
        return SuperPoly(
            self.n,
            self.m,
            {
                (tuple(a + g for a, g in zip(alpha, gamma)), mask): c
                for (alpha, mask), c in self.terms.items()
            },
        )

    def _check_compatible(self, other: "SuperPoly") -> None:
        if self.n != other.n or self.m != other.m:
            raise ValueError("incompatible SuperPoly shapes")

    def bosonic_degrees(self) -> set[int]:
        return {sum(alpha) for (alpha, _) in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.bosonic_degrees()) <= 1

    def require_homogeneous(self, what: str) -> int:
        degs = self.bosonic_degrees()
        if len(degs) != 1:
            raise ValueError(f"{what} requires bosonic-homogeneous input, got degrees {sorted(degs)}")
        return degs.pop()

    def x_coefficient(self, alpha) -> FermionPoly:
        """The theta-coefficient of x^alpha."""
        alpha = tuple(alpha)
        out = FermionPoly(self.n)
        for (a, mask), c in self.terms.items():
            if a == alpha:
                out._add_term(mask, c)
        return out

    def x_support(self) -> set[tuple[int, ...]]:
        return {alpha for (alpha, _) in self.terms}

    def subst_x(self, spec) -> "SuperPoly":
        """Substitute x_j -> c_j * x_{v_j} (or the constant c_j when v_j is
        None); spec is a list of (QTRat, int | None), 1-based targets."""
        if len(spec) != self.n:
            raise ValueError("substitution spec must cover every variable")
        out = SuperPoly(self.n, self.m)
        for (alpha, mask), c in self.terms.items():
            new_alpha = [0] * self.n
            coeff = c
            for j, a in enumerate(alpha):
                if a == 0:
                    continue
                cj, vj = spec[j]
                coeff = coeff * cj ** a
                if vj is not None:
                    new_alpha[vj - 1] += a
                if coeff.is_zero():
                    break
            out._add_term((tuple(new_alpha), mask), coeff)
        return out

    def divide_exact(self, i: int, c: QTRat, j: int | None) -> "SuperPoly":
        """Exact division by (x_i - c x_j), or by (x_i - c) when j is None.

        Synthetic division along the x_i exponent; raises if a remainder
        survives.
        """
        by_deg: dict[int, SuperPoly] = {}
        top = 0
        for (alpha, mask), coeff in self.terms.items():
            k = alpha[i - 1]
            top = max(top, k)
            stripped = alpha[: i - 1] + (0,) + alpha[i:]
            by_deg.setdefault(k, SuperPoly(self.n, self.m))._add_term(
                (stripped, mask), coeff
            )
        empty = SuperPoly(self.n, self.m)

        def shift(p: SuperPoly) -> SuperPoly:
            if j is None:
                return p.scale(c)
            g = [0] * self.n
            g[j - 1] = 1
            return p.mul_x(g).scale(c)

        quo_parts: dict[int, SuperPoly] = {}
        carry = empty
        for k in range(top, 0, -1):
            qk = by_deg.get(k, empty) + carry
            quo_parts[k - 1] = qk
            carry = shift(qk)
        remainder = by_deg.get(0, empty) + carry
        if not remainder.is_zero():
            raise ValueError("division is not exact")
        out = SuperPoly(self.n, self.m)
        for k, part in quo_parts.items():
            for (alpha, mask), coeff in part.terms.items():
                lifted = alpha[: i - 1] + (k,) + alpha[i:]
                out._add_term((lifted, mask), coeff)
        return out

    def __str__(self) -> str:
        from .serialize import super_str

        return super_str(self)

    def __repr__(self):
        return f"SuperPoly({self})"


# ---------------------------------------------------------------------------
# Demazure-Lusztig operators
# ---------------------------------------------------------------------------


def _check_gen(i: int, n: int) -> None:
    if not 1 <= i < n:
        raise ValueError(f"generator index {i} out of range 1..{n - 1}")


def demazure_T(i: int, p: SuperPoly) -> SuperPoly:
    """bold-T_i p = (1-t) x_{i+1} (p - p s_i)/(x_i - x_{i+1}) + T_i (p s_i)."""
    _check_gen(i, p.n)
    one_minus_t = RAT_ONE - RAT_T
    out = SuperPoly(p.n, p.m)
    for (alpha, mask), coeff in p.terms.items():
        a, b = alpha[i - 1], alpha[i]
        # divided-difference part: x_{i+1} * (x^alpha - x^{s_i alpha})/(x_i - x_{i+1})
        dd = coeff * one_minus_t
        if a > b:
            for k in range(a - b):
                na = alpha[: i - 1] + (a - 1 - k, b + 1 + k) + alpha[i + 1 :]
                out._add_term((na, mask), dd)
        elif a < b:
            for k in range(b - a):
                na = alpha[: i - 1] + (b - 1 - k, a + 1 + k) + alpha[i + 1 :]
                out._add_term((na, mask), -dd)
        # theta action on the swapped monomial
        swapped = alpha[: i - 1] + (b, a) + alpha[i + 1 :]
        for m2, factor in _t_pairs(i, mask):
            out._add_term((swapped, m2), coeff * factor)
    return out


_T_INV_PREF = (RAT_ONE - RAT_T) * rat_mono(0, -1)


def demazure_T_inv(i: int, p: SuperPoly) -> SuperPoly:
    """bold-T_i^{-1} p = ((1-t)/t) x_i (p - p s_i)/(x_i - x_{i+1}) + T_i^{-1}(p s_i)."""
    _check_gen(i, p.n)
    out = SuperPoly(p.n, p.m)
    for (alpha, mask), coeff in p.terms.items():
        a, b = alpha[i - 1], alpha[i]
        dd = coeff * _T_INV_PREF
        if a > b:
            for k in range(a - b):
                na = alpha[: i - 1] + (a - k, b + k) + alpha[i + 1 :]
                out._add_term((na, mask), dd)
        elif a < b:
            for k in range(b - a):
                na = alpha[: i - 1] + (b - k, a + k) + alpha[i + 1 :]
                out._add_term((na, mask), -dd)
        swapped = alpha[: i - 1] + (b, a) + alpha[i + 1 :]
        for m2, factor in _t_inv_pairs(i, mask):
            out._add_term((swapped, m2), coeff * factor)
    return out


def apply_bold_word(word, p: SuperPoly) -> SuperPoly:
    for j in reversed(word):
        p = demazure_T(j, p)
    return p


def _theta_op(i: int, p: SuperPoly, inv: bool = False) -> SuperPoly:
    """T_i (or its inverse) acting on theta parts only."""
    pairs = _t_inv_pairs if inv else _t_pairs
    out = SuperPoly(p.n, p.m)
    for (alpha, mask), coeff in p.terms.items():
        for m2, factor in pairs(i, mask):
            out._add_term((alpha, m2), coeff * factor)
    return out


def shift_w(p: SuperPoly) -> SuperPoly:
    """w p = T^(N) p(q x_N, x_1, ..., x_{N-1}) with T^(N) = T_{N-1}...T_1."""
    out = SuperPoly(p.n, p.m)
    for (alpha, mask), coeff in p.terms.items():
        rotated = alpha[1:] + (alpha[0],)
        out._add_term((rotated, mask), coeff * rat_mono(alpha[0], 0))
    for j in range(1, p.n):
        out = _theta_op(j, out)
    return out


def shift_w_inv(p: SuperPoly) -> SuperPoly:
    """w^{-1} p = T_1^{-1}...T_{N-1}^{-1} p(x_2, ..., x_N, x_1/q)."""
    out = SuperPoly(p.n, p.m)
    for (alpha, mask), coeff in p.terms.items():
        rotated = (alpha[-1],) + alpha[:-1]
        out._add_term((rotated, mask), coeff * rat_mono(-alpha[-1], 0))
    for j in range(p.n - 1, 0, -1):
        out = _theta_op(j, out, inv=True)
    return out


def cherednik_xi(i: int, p: SuperPoly) -> SuperPoly:
    """xi_i = t^{i-N} T_i...T_{N-1} w T_1^{-1}...T_{i-1}^{-1} (bold)."""
    n = p.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    out = p
    for j in range(i - 1, 0, -1):
        out = demazure_T_inv(j, out)
    out = shift_w(out)
    for j in range(n - 1, i - 1, -1):
        out = demazure_T(j, out)
    return out.scale(rat_mono(0, i - n))


def affine_phi(p: SuperPoly) -> SuperPoly:
    """The affine raising step p -> x_N w p (on labels, alpha -> Phi alpha)."""
    g = [0] * p.n
    g[p.n - 1] = 1
    return shift_w(p).mul_x(g)


class DunklDivisionError(ArithmeticError):
    pass


def dunkl_D(i: int, p: SuperPoly) -> SuperPoly:
    """Dunkl operator: D_N f = (f - xi_N f)/x_N, D_i = t^{-1} T_i D_{i+1} T_i."""
    n = p.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    if i == n:
        g = p - cherednik_xi(n, p)
        out = SuperPoly(p.n, p.m)
        for (alpha, mask), coeff in g.terms.items():
            if alpha[-1] < 1:
                raise DunklDivisionError("Dunkl division failure")
            out._add_term((alpha[:-1] + (alpha[-1] - 1,), mask), coeff)
        return out
    return demazure_T(i, dunkl_D(i + 1, demazure_T(i, p))).scale(rat_mono(0, -1))


# ---------------------------------------------------------------------------
# Deterministic random superpolynomials (for verification suites)
# ---------------------------------------------------------------------------


def random_superpoly(rng, n: int, m: int, max_degree: int, nterms: int = 6,
                     homogeneous_degree: int | None = None) -> SuperPoly:
    masks = list(combinations(range(1, n + 1), m))
    out = SuperPoly(n, m)
    for _ in range(nterms):
        deg = homogeneous_degree if homogeneous_degree is not None else rng.randint(0, max_degree)
        alpha = [0] * n
        for _ in range(deg):
            alpha[rng.randrange(n)] += 1
        from .fermion import mask_of

        mask = mask_of(rng.choice(masks), n)
        c = 0
        while c == 0:
            c = rng.randint(-4, 4)
        out._add_term((tuple(alpha), mask), QTRat.from_int(c))
    if out.is_zero():
        from .fermion import mask_of

        mask = mask_of(masks[0], n)
        deg = homogeneous_degree if homogeneous_degree is not None else 0
        alpha = (deg,) + (0,) * (n - 1)
        out._add_term((alpha, mask), RAT_ONE)
    return out

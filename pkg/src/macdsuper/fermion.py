"""The module P of polynomials in anti-commuting variables theta_1..theta_N.

Basis monomials phi_E = theta_{i1}...theta_{ik} with strictly increasing
indices, labeled by subsets E of {1..N}; all products are re-sorted to this
normal form with the sign tracked through s(i,E).  On P acts the type-A
Hecke algebra (generators T_i with (T_i - t)(T_i + 1) = 0), the commuting
Jucys-Murphy elements omega_i, the degree-raising map M and the
degree-lowering map D, and the bilinear form <phi_E, phi_F> =
delta_{E,F} t^{-inv(E)}.

The simultaneous omega-eigenvectors tau_E are built by a breadth-first
chain of steps from the two sector roots; eigenvalues are t^c(i,E) with
contents read off hook-shaped reverse standard tableaux.

Subsets are stored as bitmasks (bit i-1 set means i in E), capping N at 63;
verification suites run at N <= 8.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .qtfield import (
    QTRat,
    RAT_MINUS_ONE,
    RAT_ONE,
    RAT_T,
    RAT_T_MINUS_ONE,
    rat_mono,
    t_bracket_rat,
    u_eval,
)

MAX_N = 63


def mask_of(members, n: int) -> int:
    m = 0
    for i in members:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range 1..{n}")
        m |= 1 << (i - 1)
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def inv_count_mask(mask: int, n: int) -> int:
    """inv(E) = #{(i,j) in E x E^C : i < j}."""
    total = 0
    above = 0  # complement elements seen so far, scanning i = n..1
    for i in range(n, 0, -1):
        if mask >> (i - 1) & 1:
            total += above
        else:
            above += 1
    return total


def s_count(i: int, mask: int) -> int:
    """s(i,E) = #{j in E : j < i}."""
    return popcount(mask & ((1 << (i - 1)) - 1))


@dataclass(frozen=True)
class SubsetE:
    """A subset of {1..N} with its ambient size."""

    mask: int
    n: int

    def __post_init__(self):
        if self.n > MAX_N:
            raise ValueError(f"N is capped at {MAX_N}")
        if self.mask >> self.n:
            raise ValueError("subset members exceed ambient size")

    @staticmethod
    def of(members, n: int) -> "SubsetE":
        return SubsetE(mask_of(members, n), n)

    @property
    def members(self) -> tuple[int, ...]:
        return members_of(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __contains__(self, i: int) -> bool:
        return bool(self.mask >> (i - 1) & 1)

    def inv(self) -> int:
        return inv_count_mask(self.mask, self.n)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def inv_count(e: SubsetE) -> int:
    return e.inv()


def sigma(n: int) -> int:
    return -1 if n % 2 else 1


class FermionPoly:
    """Finite map subset -> QTRat coefficient; element of P."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[int, QTRat] | None = None):
        self.n = n
        self.terms = terms if terms is not None else {}

    @staticmethod
    def zero(n: int) -> "FermionPoly":
        return FermionPoly(n)

    @staticmethod
    def basis(mask: int, n: int, coeff: QTRat = RAT_ONE) -> "FermionPoly":
        if coeff.is_zero():
            return FermionPoly(n)
        return FermionPoly(n, {mask: coeff})

    def copy(self) -> "FermionPoly":
        return FermionPoly(self.n, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FermionPoly)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _add_term(self, mask: int, coeff: QTRat) -> None:
        cur = self.terms.get(mask)
        if cur is None:
            if coeff:
                self.terms[mask] = coeff
            return
        s = cur + coeff
        if s:
            self.terms[mask] = s
        else:
            del self.terms[mask]

    def __add__(self, other: "FermionPoly") -> "FermionPoly":
        out = self.copy()
        for m, c in other.terms.items():
            out._add_term(m, c)
        return out

    def __sub__(self, other: "FermionPoly") -> "FermionPoly":
        out = self.copy()
        for m, c in other.terms.items():
            out._add_term(m, -c)
        return out

    def __neg__(self) -> "FermionPoly":
        return FermionPoly(self.n, {m: -c for m, c in self.terms.items()})

    def scale(self, c: QTRat) -> "FermionPoly":
        if c.is_zero():
            return FermionPoly(self.n)
        return FermionPoly(self.n, {m: v * c for m, v in self.terms.items()})

    def degrees(self) -> set[int]:
        return {popcount(m) for m in self.terms}

    def __str__(self) -> str:
        from .serialize import fermion_str

        return fermion_str(self)

    def __repr__(self):
        return f"FermionPoly({self})"


def iter_subsets(n: int, size: int) -> Iterator[int]:
    """Masks of all subsets of {1..n} of the given size, lexicographic in
    member tuples (deterministic)."""
    from itertools import combinations

    for members in combinations(range(1, n + 1), size):
        yield mask_of(members, n)


# ---------------------------------------------------------------------------
# Hecke action, Jucys-Murphy elements, M and D
# ---------------------------------------------------------------------------


def _t_pairs(i: int, mask: int):
    """T_i phi_E as a list of (mask, factor) pairs."""
    lo = 1 << (i - 1)
    hi = lo << 1
    has_lo = mask & lo
    has_hi = mask & hi
    if has_lo and has_hi:
        return ((mask, RAT_MINUS_ONE),)
    if not has_lo and not has_hi:
        return ((mask, RAT_T),)
    swapped = mask ^ (lo | hi)
    if has_lo:  # (i, i+1) in E x E^C
        return ((swapped, RAT_ONE),)
    # (i, i+1) in E^C x E
    return ((mask, RAT_T_MINUS_ONE), (swapped, RAT_T))


_RAT_T_INV = rat_mono(0, -1)
_ONE_MINUS_T_OVER_T = (RAT_ONE - RAT_T) * _RAT_T_INV


def _t_inv_pairs(i: int, mask: int):
    """T_i^{-1} phi_E, from T_i^{-1} = (T_i + 1 - t)/t."""
    lo = 1 << (i - 1)
    hi = lo << 1
    has_lo = mask & lo
    has_hi = mask & hi
    if has_lo and has_hi:
        return ((mask, RAT_MINUS_ONE),)
    if not has_lo and not has_hi:
        return ((mask, _RAT_T_INV),)
    swapped = mask ^ (lo | hi)
    if has_lo:
        return ((swapped, _RAT_T_INV), (mask, _ONE_MINUS_T_OVER_T))
    return ((swapped, RAT_ONE),)


def _apply_pairs(pairs_fn, i: int, f: FermionPoly) -> FermionPoly:
    out = FermionPoly(f.n)
    for mask, coeff in f.terms.items():
        for m2, factor in pairs_fn(i, mask):
            out._add_term(m2, coeff * factor)
    return out


def hecke_T(i: int, f: FermionPoly) -> FermionPoly:
    if not 1 <= i < f.n:
        raise ValueError(f"generator index {i} out of range 1..{f.n - 1}")
    return _apply_pairs(_t_pairs, i, f)


def hecke_T_inv(i: int, f: FermionPoly) -> FermionPoly:
    if not 1 <= i < f.n:
        raise ValueError(f"generator index {i} out of range 1..{f.n - 1}")
    return _apply_pairs(_t_inv_pairs, i, f)


def apply_word(word, f: FermionPoly) -> FermionPoly:
    """T(u) f for u = s_{word[0]} ... s_{word[-1]} (rightmost acts first)."""
    for j in reversed(word):
        f = hecke_T(j, f)
    return f


def apply_word_inv(word, f: FermionPoly) -> FermionPoly:
    """T(u)^{-1} f; the inverses apply in word order."""
    for j in word:
        f = hecke_T_inv(j, f)
    return f


def jucys_murphy(i: int, f: FermionPoly) -> FermionPoly:
    """omega_i = t^{i-N} T_i ... T_{N-1} T_{N-1} ... T_i (omega_N = 1)."""
    n = f.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    out = f
    for j in range(i, n):
        out = hecke_T(j, out)
    for j in range(n - 1, i - 1, -1):
        out = hecke_T(j, out)
    return out.scale(rat_mono(0, i - n))


def op_M(f: FermionPoly) -> FermionPoly:
    """M = sum_i theta_i-hat: raises fermionic degree by one."""
    out = FermionPoly(f.n)
    for mask, coeff in f.terms.items():
        free = ~mask
        for i in range(1, f.n + 1):
            bit = 1 << (i - 1)
            if free & bit:
                c = coeff if sigma(s_count(i, mask)) == 1 else -coeff
                out._add_term(mask | bit, c)
    return out


def op_D(f: FermionPoly) -> FermionPoly:
    """D = sum_i t^{i-1} del_i: lowers fermionic degree by one."""
    out = FermionPoly(f.n)
    for mask, coeff in f.terms.items():
        rem = mask
        while rem:
            bit = rem & -rem
            rem ^= bit
            i = bit.bit_length()
            c = coeff * rat_mono(0, i - 1, sigma(s_count(i, mask)))
            out._add_term(mask ^ bit, c)
    return out


def inner_fermion(f: FermionPoly, g: FermionPoly) -> QTRat:
    """<phi_E, phi_F> = delta_{E,F} t^{-inv(E)}, extended bilinearly."""
    if f.n != g.n:
        raise ValueError("ambient sizes differ")
    total = QTRat.from_int(0)
    small, large = (f, g) if len(f.terms) <= len(g.terms) else (g, f)
    for mask, c in small.terms.items():
        d = large.terms.get(mask)
        if d is not None:
            total = total + c * d * rat_mono(0, -inv_count_mask(mask, f.n))
    return total


# ---------------------------------------------------------------------------
# Sectors, hook contents, tau eigenbasis
# ---------------------------------------------------------------------------

SECTOR_Y0 = "Y0"
SECTOR_Y1 = "Y1"


def sector_of(mask: int, n: int, m: int) -> str:
    """Y0: #E = m+1 with N in E; Y1: #E = m-1 with N not in E."""
    size = popcount(mask)
    top = bool(mask >> (n - 1) & 1)
    if size == m + 1 and top:
        return SECTOR_Y0
    if size == m - 1 and not top:
        return SECTOR_Y1
    raise ValueError(
        f"{SubsetE(mask, n)} is not a valid Y0/Y1 label for N={n}, m={m}"
    )


def sector_labels(n: int, m: int, sector: str) -> list[int]:
    """All label masks of one sector, ordered lexicographically."""
    if sector == SECTOR_Y0:
        if m + 1 > n or m < 0:
            return []
        top = 1 << (n - 1)
        return [mask | top for mask in iter_subsets(n - 1, m)]
    if sector == SECTOR_Y1:
        if m - 1 < 0 or m - 1 > n - 1:
            return []
        return list(iter_subsets(n - 1, m - 1))
    raise ValueError(f"unknown sector {sector!r}")


def all_labels(n: int, m: int) -> list[tuple[int, str]]:
    out = [(mask, SECTOR_Y0) for mask in sector_labels(n, m, SECTOR_Y0)]
    out += [(mask, SECTOR_Y1) for mask in sector_labels(n, m, SECTOR_Y1)]
    return out


@dataclass(frozen=True)
class ContentVector:
    """Contents c(i,E) of the hook tableau Y_E; c(N,E) = 0 always."""

    c: tuple[int, ...]
    sector: str
    e: SubsetE
    m: int


@lru_cache(maxsize=None)
def contents_mask(mask: int, n: int, m: int) -> tuple[int, ...]:
    """c(i,E) for i = 1..N, from the hook RSYT filling rules."""
    sector = sector_of(mask, n, m)
    c = [0] * n
    members = members_of(mask)
    comp = [j for j in range(1, n + 1) if not (mask >> (j - 1) & 1)]
    if sector == SECTOR_Y0:
        # column below the corner: i_m, ..., i_1 get contents -1, ..., -m
        for k, i in enumerate(reversed(members[:-1])):
            c[i - 1] = -(k + 1)
        # row 1 after the corner: j_s gets content N - m - s
        for s, j in enumerate(comp, start=1):
            c[j - 1] = n - m - s
    else:
        for k, i in enumerate(reversed(members)):
            c[i - 1] = -(k + 1)
        # comp includes N (content 0); j_s gets N - m + 1 - s
        for s, j in enumerate(comp, start=1):
            c[j - 1] = n - m + 1 - s
    return tuple(c)


def content_vector(e: SubsetE, m: int) -> ContentVector:
    sector = sector_of(e.mask, e.n, m)
    return ContentVector(contents_mask(e.mask, e.n, m), sector, e, m)


def root_mask(n: int, m: int, sector: str) -> int:
    if sector == SECTOR_Y0:
        return mask_of(range(n - m, n + 1), n)  # E0 = {N-m..N}, inv = 0
    return mask_of(range(1, m), n)  # E1 = {1..m-1}, inv maximal


_TAU_CACHE: dict[tuple[int, int, int], FermionPoly] = {}
_TAU_LOCK = threading.Lock()


def build_tau(e: SubsetE, m: int) -> FermionPoly:
    """tau_E with omega_i tau_E = t^{c(i,E)} tau_E for all i.

    Y0 sector: tau_{E0} = D phi_{E0}; Y1 sector: tau_{E1} = M phi_{E1};
    other labels by eigenvalue-swapping steps ordered by inv(E).
    """
    n = e.n
    sector = sector_of(e.mask, n, m)
    key = (n, m, e.mask)
    with _TAU_LOCK:
        got = _TAU_CACHE.get(key)
    if got is not None:
        return got
    root = root_mask(n, m, sector)
    if e.mask == root:
        phi = FermionPoly.basis(root, n)
        tau = op_D(phi) if sector == SECTOR_Y0 else op_M(phi)
    else:
        # step down to the predecessor F = s_i E, one unit closer to the root
        if sector == SECTOR_Y0:
            i = _find_pair(e.mask, n, member_first=True)  # i in E, i+1 not
        else:
            i = _find_pair(e.mask, n, member_first=False)  # i not in E, i+1 in
        f_mask = e.mask ^ (0b11 << (i - 1))
        tau_f = build_tau(SubsetE(f_mask, n), m)
        cf = contents_mask(f_mask, n, m)
        step = _step_coeff(cf[i - 1], cf[i])
        tau = hecke_T(i, tau_f) + tau_f.scale(step)
    with _TAU_LOCK:
        _TAU_CACHE.setdefault(key, tau)
    return tau


def _find_pair(mask: int, n: int, member_first: bool) -> int:
    for i in range(1, n):
        lo = bool(mask >> (i - 1) & 1)
        hi = bool(mask >> i & 1)
        if member_first and lo and not hi:
            return i
        if not member_first and not lo and hi:
            return i
    raise ValueError("label is the sector root; no step available")


def _step_coeff(ci: int, cj: int) -> QTRat:
    """(t-1) t^{c(i,F)} / (t^{c(i+1,F)} - t^{c(i,F)})."""
    return RAT_T_MINUS_ONE / (rat_mono(0, cj - ci) - RAT_ONE)


def clear_tau_cache() -> None:
    with _TAU_LOCK:
        _TAU_CACHE.clear()


# ---------------------------------------------------------------------------
# Closed-form squared norms
# ---------------------------------------------------------------------------


def c_norm_product(v) -> QTRat:
    """C(v) = prod over pairs i<j<N with v_i < 0 < v_j of u(t^{v_i - v_j})."""
    out = RAT_ONE
    n = len(v)
    for i in range(n - 1):
        if v[i] >= 0:
            continue
        for j in range(i + 1, n - 1):
            if v[j] > 0:
                out = out * u_eval("full", rat_mono(0, v[i] - v[j]))
    return out


def tau_norm(e: SubsetE, m: int) -> QTRat:
    """||tau_E||^2 in closed form.

    Y0: t^{2(N-m-1)} [m+1]_t C([c(i,E)]);
    Y1: t^{-m(N-m)} [N-m+1]_t C([-c(i,E)]).
    """
    n = e.n
    sector = sector_of(e.mask, n, m)
    c = contents_mask(e.mask, n, m)
    if sector == SECTOR_Y0:
        return rat_mono(0, 2 * (n - m - 1)) * t_bracket_rat(m + 1) * c_norm_product(c)
    neg = tuple(-x for x in c)
    return rat_mono(0, -m * (n - m)) * t_bracket_rat(n - m + 1) * c_norm_product(neg)

"""Exact arithmetic in the field Q(q,t).

Everything downstream (Hecke operators, Macdonald polynomials, norms) has
coefficients here: bivariate integer polynomials in q and t, reduced
fractions of those, and Laurent monomials q^a t^b.  All values are
immutable and kept in a unique canonical form, so equality is plain
component comparison and results are reproducible bit for bit.

Polynomial arithmetic and gcd are delegated to sympy's sparse ring
ZZ[q,t]; the fraction canonicalization (gcd = 1, positive leading
denominator coefficient under graded-lex with q > t) lives here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring as _sympy_ring

_RING, _PQ, _PT = _sympy_ring("q,t", ZZ)


def _grlex_key(mono):
    a, b = mono
    return (a + b, a)


def _grlex_lc(pe):
    """Leading coefficient under graded-lex order with q > t."""
    return pe[max(pe, key=_grlex_key)]


def _int_gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _content(pe) -> int:
    g = 0
    for c in pe.itercoeffs():
        g = _int_gcd(g, int(c))
        if g == 1:
            return 1
    return g


def _gcd_with_mono(mono_exp, mono_coeff, pe):
    """gcd of a single-term polynomial with any polynomial."""
    a0, b0 = mono_exp
    g = abs(int(mono_coeff))
    for (a, b), c in pe.terms():
        a0 = min(a0, a)
        b0 = min(b0, b)
        if g != 1:
            g = _int_gcd(g, int(c))
        if g == 1 and a0 == 0 and b0 == 0:
            break
    return _RING.from_dict({(a0, b0): g})


@lru_cache(maxsize=1 << 15)
def _pe_gcd_cached(a, b):
    return a.gcd(b)


def _pe_gcd(a, b):
    if len(a) == 1:
        (mono, coeff), = a.terms()
        return _gcd_with_mono(mono, coeff, b)
    if len(b) == 1:
        (mono, coeff), = b.terms()
        return _gcd_with_mono(mono, coeff, a)
    return _pe_gcd_cached(a, b)


class QTPoly:
    """Integer polynomial in q and t, canonical (no zero terms stored)."""

    __slots__ = ("_pe",)

    def __init__(self, pe):
        self._pe = pe

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_int(c: int) -> "QTPoly":
        return QTPoly(_RING(c))

    @staticmethod
    def monomial(a: int, b: int, c: int = 1) -> "QTPoly":
        if a < 0 or b < 0:
            raise ValueError("QTPoly exponents must be nonnegative")
        if c == 0:
            return _P_ZERO
        return QTPoly(_RING.from_dict({(a, b): c}))

    @staticmethod
    def from_terms(terms: dict) -> "QTPoly":
        return QTPoly(_RING.from_dict({m: c for m, c in terms.items() if c}))

    # -- inspection --------------------------------------------------------

    def terms(self) -> dict:
        """Map (power of q, power of t) -> int coefficient."""
        return {m: int(c) for m, c in self._pe.terms()}

    def is_zero(self) -> bool:
        return not self._pe

    def is_one(self) -> bool:
        return self._pe == _RING.one

    def __bool__(self) -> bool:
        return bool(self._pe)

    def __eq__(self, other) -> bool:
        return isinstance(other, QTPoly) and self._pe == other._pe

    def __hash__(self) -> int:
        return hash(self._pe)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QTPoly") -> "QTPoly":
        return QTPoly(self._pe + other._pe)

    def __sub__(self, other: "QTPoly") -> "QTPoly":
        return QTPoly(self._pe - other._pe)

    def __neg__(self) -> "QTPoly":
        return QTPoly(-self._pe)

    def __mul__(self, other: "QTPoly") -> "QTPoly":
        return QTPoly(self._pe * other._pe)

    def __pow__(self, n: int) -> "QTPoly":
        return QTPoly(self._pe ** n)

    def evaluate(self, q0: Fraction, t0: Fraction) -> Fraction:
        total = Fraction(0)
        for (a, b), c in self._pe.terms():
            total += int(c) * q0 ** a * t0 ** b
        return total

    def __str__(self) -> str:
        return _poly_str(self._pe)

    def __repr__(self) -> str:
        return f"QTPoly({self})"


_P_ZERO = QTPoly(_RING.zero)
_P_ONE = QTPoly(_RING.one)
_P_Q = QTPoly(_PQ)
_P_T = QTPoly(_PT)


def poly_zero() -> QTPoly:
    return _P_ZERO


def poly_one() -> QTPoly:
    return _P_ONE


def poly_q() -> QTPoly:
    return _P_Q


def poly_t() -> QTPoly:
    return _P_T


class QTRat:
    """Reduced fraction of QTPoly's: the coefficient field Q(q,t).

    Canonical form: gcd(num, den) = 1 (content included) and the leading
    coefficient of den under graded-lex (q > t) is positive.  Equality of
    canonical forms is field equality.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, n, d):
        # internal: assumes (n, d) already canonical
        self._n = n
        self._d = d

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_polys(num: QTPoly, den: QTPoly) -> "QTRat":
        return normalize(num, den)

    @staticmethod
    def from_int(c: int) -> "QTRat":
        if c == 0:
            return RAT_ZERO
        if c == 1:
            return RAT_ONE
        return QTRat(_RING(c), _RING.one)

    @staticmethod
    def from_fraction(f: Fraction) -> "QTRat":
        return _make(_RING(f.numerator), _RING(f.denominator))

    @staticmethod
    def monomial(a: int, b: int, c: int = 1) -> "QTRat":
        """c * q^a * t^b with a, b allowed to be negative."""
        if c == 0:
            return RAT_ZERO
        qa, qb = max(a, 0), max(-a, 0)
        ta, tb = max(b, 0), max(-b, 0)
        num = _RING.from_dict({(qa, ta): c})
        den = _RING.from_dict({(qb, tb): 1})
        return _make(num, den)

    # -- accessors ---------------------------------------------------------

    @property
    def num(self) -> QTPoly:
        return QTPoly(self._n)

    @property
    def den(self) -> QTPoly:
        return QTPoly(self._d)

    def is_zero(self) -> bool:
        return not self._n

    def __bool__(self) -> bool:
        return bool(self._n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QTRat) and self._n == other._n and self._d == other._d
        )

    def __hash__(self) -> int:
        return hash((self._n, self._d))

    # -- field operations --------------------------------------------------

    def __add__(self, other: "QTRat") -> "QTRat":
        a, b, c, d = self._n, self._d, other._n, other._d
        if not a:
            return other
        if not c:
            return self
        one = _RING.one
        if b == one:
            if d == one:
                return _canon_sign(a + c, one)
            # gcd(a*d + c, d) = gcd(c, d) = 1: already reduced
            return _canon_sign(a * d + c, d)
        if d == one:
            return _canon_sign(a + c * b, b)
        if b == d:
            return _make(a + c, b)
        g0 = _pe_gcd(b, d)
        if g0 == one:
            return _canon_sign(a * d + c * b, b * d)
        b1 = b.quo(g0)
        d1 = d.quo(g0)
        num = a * d1 + c * b1
        g1 = _pe_gcd(num, g0)
        if g1 == one:
            return _canon_sign(num, b1 * d)
        return _canon_sign(num.quo(g1), b1 * d.quo(g1))

    def __sub__(self, other: "QTRat") -> "QTRat":
        return self + (-other)

    def __neg__(self) -> "QTRat":
        return QTRat(-self._n, self._d)

    def __mul__(self, other: "QTRat") -> "QTRat":
        a, b, c, d = self._n, self._d, other._n, other._d
        if not a or not c:
            return RAT_ZERO
        one = _RING.one
        if b == one:
            if d == one:
                return QTRat(a * c, one)
            g1 = _pe_gcd(a, d)
            if g1 == one:
                return _canon_sign(a * c, d)
            return _canon_sign(a.quo(g1) * c, d.quo(g1))
        if d == one:
            g2 = _pe_gcd(c, b)
            if g2 == one:
                return _canon_sign(a * c, b)
            return _canon_sign(a * c.quo(g2), b.quo(g2))
        g1 = _pe_gcd(a, d)
        g2 = _pe_gcd(c, b)
        return _canon_sign(a.quo(g1) * c.quo(g2), b.quo(g2) * d.quo(g1))

    def __truediv__(self, other: "QTRat") -> "QTRat":
        if not other._n:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return self * QTRat(*_sign_pair(other._d, other._n))

    def inverse(self) -> "QTRat":
        if not self._n:
            raise ZeroDivisionError("division by zero in Q(q,t)")
        return QTRat(*_sign_pair(self._d, self._n))

    def __pow__(self, n: int) -> "QTRat":
        if n < 0:
            return self.inverse() ** (-n)
        return QTRat(*_sign_pair(self._n ** n, self._d ** n))

    def scale(self, c: int) -> "QTRat":
        if c == 0 or not self._n:
            return RAT_ZERO
        g = _RING(c).gcd(self._d)
        return _canon_sign(self._n * _RING(c).quo(g), self._d.quo(g))

    # -- evaluation --------------------------------------------------------

    def involves(self) -> tuple[bool, bool]:
        """(uses q, uses t) across numerator and denominator."""
        has_q = has_t = False
        for pe in (self._n, self._d):
            for a, b in pe:
                has_q = has_q or a > 0
                has_t = has_t or b > 0
        return has_q, has_t

    def evaluate(self, q0: Fraction, t0: Fraction) -> Fraction:
        den = QTPoly(self._d).evaluate(q0, t0)
        if den == 0:
            raise ZeroDivisionError(
                f"denominator {_poly_str(self._d)} vanishes at q={q0}, t={t0}"
            )
        return QTPoly(self._n).evaluate(q0, t0) / den

    def __str__(self) -> str:
        return rat_str(self)

    def __repr__(self) -> str:
        return f"QTRat({self})"


def _sign_pair(n, d):
    if _grlex_lc(d) < 0:
        return -n, -d
    return n, d


def _canon_sign(n, d) -> QTRat:
    if not n:
        return RAT_ZERO
    return QTRat(*_sign_pair(n, d))


def _make(n, d) -> QTRat:
    """Reduce and sign-fix an arbitrary fraction of PolyElements."""
    if not d:
        raise ZeroDivisionError("division by zero in Q(q,t)")
    if not n:
        return RAT_ZERO
    if d == _RING.one:
        return QTRat(n, d)
    g = _pe_gcd(n, d)
    if g != _RING.one:
        n, d = n.quo(g), d.quo(g)
    return _canon_sign(n, d)


def normalize(num: QTPoly, den: QTPoly) -> QTRat:
    """The unique canonical reduced fraction equal to num/den."""
    return _make(num._pe, den._pe)


RAT_ZERO = QTRat(_RING.zero, _RING.one)
RAT_ONE = QTRat(_RING.one, _RING.one)
RAT_T = QTRat(_PT, _RING.one)
RAT_Q = QTRat(_PQ, _RING.one)
RAT_MINUS_ONE = QTRat(-_RING.one, _RING.one)
RAT_T_MINUS_ONE = QTRat(_PT - 1, _RING.one)
RAT_ONE_MINUS_Q = QTRat(_RING.one - _PQ, _RING.one)


def rat_int(c: int) -> QTRat:
    return QTRat.from_int(c)


@lru_cache(maxsize=1 << 14)
def rat_mono(a: int, b: int, c: int = 1) -> QTRat:
    return QTRat.monomial(a, b, c)


@dataclass(frozen=True)
class LaurentMono:
    """q^a t^b with integer (possibly negative) exponents."""

    a: int
    b: int

    def to_rat(self) -> QTRat:
        return QTRat.monomial(self.a, self.b)

    def __mul__(self, other: "LaurentMono") -> "LaurentMono":
        return LaurentMono(self.a + other.a, self.b + other.b)

    def __truediv__(self, other: "LaurentMono") -> "LaurentMono":
        return LaurentMono(self.a - other.a, self.b - other.b)

    def is_one(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self) -> str:
        return rat_str(self.to_rat())


# ---------------------------------------------------------------------------
# q,t-combinatorial builders
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def t_bracket(n: int) -> QTPoly:
    """[n]_t = 1 + t + ... + t^(n-1), with [0]_t = 0."""
    if n < 0:
        raise ValueError("bracket index must be nonnegative")
    return QTPoly(_RING.from_dict({(0, k): 1 for k in range(n)}))


@lru_cache(maxsize=None)
def t_factorial(n: int) -> QTPoly:
    """[n]_t! = [1]_t [2]_t ... [n]_t, empty product for n = 0."""
    if n < 0:
        raise ValueError("factorial index must be nonnegative")
    if n == 0:
        return _P_ONE
    return t_factorial(n - 1) * t_bracket(n)


def t_bracket_rat(n: int) -> QTRat:
    return QTRat(t_bracket(n)._pe, _RING.one)


def t_factorial_rat(n: int) -> QTRat:
    return QTRat(t_factorial(n)._pe, _RING.one)


def pochhammer(z: QTRat, n: int) -> QTRat:
    """Shifted q-factorial (z;q)_n = prod_{k<n} (1 - z q^k)."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    out = RAT_ONE
    zq = z
    for _ in range(n):
        out = out * (RAT_ONE - zq)
        zq = zq * RAT_Q
    return out


@lru_cache(maxsize=1 << 14)
def u_eval(kind: str, z: QTRat) -> QTRat:
    """The step factors u(z) = (t-z)(1-tz)/(1-z)^2, u0 = (t-z)/(1-z),
    u1 = (1-tz)/(1-z); u = u0*u1."""
    one_minus_z = RAT_ONE - z
    if one_minus_z.is_zero():
        raise ZeroDivisionError("u-factor pole at z=1")
    if kind == "full":
        return ((RAT_T - z) * (RAT_ONE - RAT_T * z)) / (one_minus_z * one_minus_z)
    if kind == "zero":
        return (RAT_T - z) / one_minus_z
    if kind == "one":
        return (RAT_ONE - RAT_T * z) / one_minus_z
    raise ValueError(f"unknown u kind {kind!r}")


# ---------------------------------------------------------------------------
# Single-parameter specialization q -> +/- u^e, t -> +/- u^e
# ---------------------------------------------------------------------------

_URING, _PU = _sympy_ring("u", ZZ)


class URat:
    """Reduced univariate rational function in u over Q (integer polys,
    positive leading denominator coefficient)."""

    __slots__ = ("_n", "_d")

    def __init__(self, n, d):
        self._n = n
        self._d = d

    def is_zero(self) -> bool:
        return not self._n

    def is_one(self) -> bool:
        return self._n == _URING.one and self._d == _URING.one

    def __eq__(self, other) -> bool:
        return isinstance(other, URat) and self._n == other._n and self._d == other._d

    def __hash__(self) -> int:
        return hash((self._n, self._d))

    def evaluate(self, u0: Fraction) -> Fraction:
        num = sum(int(c) * u0 ** e for (e,), c in self._n.terms())
        den = sum(int(c) * u0 ** e for (e,), c in self._d.terms())
        return Fraction(num) / den

    def __str__(self) -> str:
        ns = _upoly_str(self._n)
        ds = _upoly_str(self._d)
        if self._d == _URING.one:
            return ns
        if len(self._n) > 1:
            ns = f"({ns})"
        if len(self._d) > 1:
            ds = f"({ds})"
        return f"{ns} / {ds}"

    def __repr__(self) -> str:
        return f"URat({self})"


def _umake(n, d) -> URat:
    if not d:
        raise ZeroDivisionError("singular specialization")
    if not n:
        return URat(_URING.zero, _URING.one)
    g = n.gcd(d)
    if g != _URING.one:
        n, d = n.quo(g), d.quo(g)
    if d.LC < 0:
        n, d = -n, -d
    return URat(n, d)


def _subst_laurent(pe, sub_q, sub_t):
    """Substitute q -> sq*u^eq, t -> st*u^et into a PolyElement; returns a
    Laurent dict exponent -> int."""
    out: dict = {}
    for (a, b), c in pe.terms():
        e = 0
        s = 1
        if a:
            if sub_q is None:
                raise ValueError("expression involves q but no q substitution given")
            sq, eq = sub_q
            e += a * eq
            if sq < 0 and a % 2:
                s = -s
        if b:
            if sub_t is None:
                raise ValueError("expression involves t but no t substitution given")
            st, et = sub_t
            e += b * et
            if st < 0 and b % 2:
                s = -s
        out[e] = out.get(e, 0) + s * int(c)
    return {e: c for e, c in out.items() if c}


def specialize(f: QTRat, sub_q=None, sub_t=None) -> URat:
    """Exact substitution q -> sign_q * u^e_q, t -> sign_t * u^e_t.

    Each substitution is a pair (sign, exponent) with sign in {+1,-1} and
    integer exponent (negative allowed).  Realizes constraints such as
    q^2 t^5 = 1 via q -> u^-5, t -> u^2, or q t = -1 via q -> -u^-1, t -> u.
    """
    num = _subst_laurent(f._n, sub_q, sub_t)
    den = _subst_laurent(f._d, sub_q, sub_t)
    if not den:
        raise ZeroDivisionError("singular specialization")
    if not num:
        return URat(_URING.zero, _URING.one)
    shift = -min(min(num), min(den), 0)
    npe = _URING.from_dict({(e + shift,): c for e, c in num.items()})
    dpe = _URING.from_dict({(e + shift,): c for e, c in den.items()})
    return _umake(npe, dpe)


# ---------------------------------------------------------------------------
# Genericity guard for numeric parameters
# ---------------------------------------------------------------------------


def assert_generic(q0: Fraction | None, t0: Fraction | None, n: int, window: int = 8) -> None:
    """Reject numeric parameters on which the constructions divide by zero:
    t^k = 1 for 2 <= k <= n, or q^a t^k = 1 with 0 < |a| <= window,
    1 <= k <= n.  Conditions involving an unsupplied variable are skipped."""
    if q0 is not None:
        if q0 == 0:
            raise ValueError("generic parameters require q nonzero")
        if q0 == 1 or q0 == -1:
            raise ValueError("non-generic parameters: q^a = 1")
    if t0 is not None:
        if t0 == 0:
            raise ValueError("generic parameters require t nonzero")
        for k in range(2, n + 1):
            if t0 ** k == 1:
                raise ValueError(f"non-generic parameters: t^{k} = 1")
        if t0 == 1:
            raise ValueError("non-generic parameters: t = 1")
    if q0 is not None and t0 is not None:
        for a in range(1, window + 1):
            for k in range(1, n + 1):
                if q0 ** a * t0 ** k == 1 or q0 ** a == t0 ** k:
                    raise ValueError(f"non-generic parameters: q^±{a} t^±{k} = 1")


# ---------------------------------------------------------------------------
# Canonical rendering and parsing
# ---------------------------------------------------------------------------


def _mono_str(a: int, b: int, c: int) -> str:
    parts = []
    ac = abs(c)
    if ac != 1 or (a == 0 and b == 0):
        parts.append(str(ac))
    if a == 1:
        parts.append("q")
    elif a > 1:
        parts.append(f"q^{a}")
    if b == 1:
        parts.append("t")
    elif b > 1:
        parts.append(f"t^{b}")
    return "*".join(parts)


def _poly_str(pe) -> str:
    """Terms in ascending graded-lex order with q > t, e.g. '1 - q*t^2'."""
    if not pe:
        return "0"
    items = sorted(pe.terms(), key=lambda mc: _grlex_key(mc[0]))
    out = []
    for (a, b), c in items:
        c = int(c)
        if not out:
            out.append(("-" if c < 0 else "") + _mono_str(a, b, c))
        else:
            out.append(("- " if c < 0 else "+ ") + _mono_str(a, b, c))
    return " ".join(out)


def _upoly_str(pe) -> str:
    if not pe:
        return "0"
    items = sorted(pe.terms(), key=lambda mc: mc[0][0])
    out = []
    for (e,), c in items:
        c = int(c)
        ac = abs(c)
        if e == 0:
            body = str(ac)
        else:
            head = "" if ac == 1 else f"{ac}*"
            body = f"{head}u" if e == 1 else f"{head}u^{e}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def rat_str(r: QTRat) -> str:
    ns = _poly_str(r._n)
    if r._d == _RING.one:
        return ns
    ds = _poly_str(r._d)
    if len(r._n) > 1:
        ns = f"({ns})"
    if len(r._d) > 1:
        ds = f"({ds})"
    return f"{ns} / {ds}"


_TERM_RE = re.compile(r"^(\d+)?(?:\*?q(?:\^(\d+))?)?(?:\*?t(?:\^(\d+))?)?$")


def parse_poly(s: str) -> QTPoly:
    """Parse the canonical QTPoly rendering produced by str()."""
    s = s.strip()
    if s in ("0", ""):
        return _P_ZERO
    s = s.replace(" ", "")
    chunks = re.split(r"(?=[+-])", s)
    terms: dict = {}
    for chunk in chunks:
        if not chunk:
            continue
        sign = 1
        if chunk[0] == "+":
            chunk = chunk[1:]
        elif chunk[0] == "-":
            sign = -1
            chunk = chunk[1:]
        m = _TERM_RE.match(chunk)
        if not m or not chunk:
            raise ValueError(f"cannot parse polynomial term {chunk!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        a = 0
        if "q" in chunk:
            a = int(m.group(2)) if m.group(2) else 1
        b = 0
        if "t" in chunk:
            b = int(m.group(3)) if m.group(3) else 1
        key = (a, b)
        terms[key] = terms.get(key, 0) + sign * coeff
    return QTPoly.from_terms(terms)


def parse_rat(s: str) -> QTRat:
    """Parse 'num / den' in the canonical rendering."""
    if "/" in s:
        ns, ds = s.split("/")
        ns = ns.strip()
        ds = ds.strip()
        if ns.startswith("(") and ns.endswith(")"):
            ns = ns[1:-1]
        if ds.startswith("(") and ds.endswith(")"):
            ds = ds[1:-1]
        return normalize(parse_poly(ns), parse_poly(ds))
    return normalize(parse_poly(s), _P_ONE)

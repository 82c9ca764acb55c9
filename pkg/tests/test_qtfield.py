import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from macdsuper import qtfield as qf
from macdsuper.qtfield import (
    LaurentMono,
    QTPoly,
    QTRat,
    assert_generic,
    normalize,
    parse_poly,
    parse_rat,
    pochhammer,
    rat_mono,
    rat_str,
    specialize,
    t_bracket,
    t_factorial,
    u_eval,
)

ONE = qf.RAT_ONE
T = qf.RAT_T
Q = qf.RAT_Q


def poly(terms):
    return QTPoly.from_terms(terms)


# --- strategies -------------------------------------------------------------

small_poly = st.builds(
    poly,
    st.dictionaries(
        st.tuples(st.integers(0, 3), st.integers(0, 3)),
        st.integers(-4, 4),
        max_size=4,
    ),
)
nonzero_poly = small_poly.filter(lambda p: not p.is_zero())
small_rat = st.builds(lambda a, b: normalize(a, b), small_poly, nonzero_poly)
nonzero_rat = small_rat.filter(lambda r: not r.is_zero())


# --- normalize --------------------------------------------------------------


def test_normalize_difference_of_squares():
    num = poly({(2, 0): 1, (0, 2): -1})  # q^2 - t^2
    den = poly({(1, 0): 1, (0, 1): -1})  # q - t
    assert normalize(num, den) == Q + T


def test_normalize_zero():
    r = normalize(poly({}), poly({(0, 0): 1, (0, 1): 1}))
    assert r.is_zero()
    assert r.num.is_zero() and r.den.is_one()


def test_normalize_geometric_long_division():
    # oracle: 1 - t^3 = (1 - t)(1 + t + t^2), so the quotient is the
    # geometric sum built independently
    num = poly({(0, 0): 1, (0, 3): -1})
    den = poly({(0, 0): 1, (0, 1): -1})
    expected = sum((rat_mono(0, k) for k in range(1, 3)), ONE)
    assert normalize(num, den) == expected


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        normalize(poly({(0, 0): 1}), poly({}))


@settings(max_examples=40, deadline=None)
@given(a=small_poly, b=nonzero_poly, c=nonzero_poly)
def test_normalize_common_factor_invariance(a, b, c):
    assert normalize(a * c, b * c) == normalize(a, b)


def test_canonical_sign_convention():
    r = ONE / (qf.RAT_ZERO - T)  # 1 / (-t) -> -1 / t
    assert str(r.den) == "t"
    assert str(r.num) == "-1"


# --- field axioms -----------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(x=small_rat, y=small_rat, z=small_rat)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@settings(max_examples=40, deadline=None)
@given(x=nonzero_rat)
def test_field_inverse(x):
    assert x * x.inverse() == ONE
    assert x ** -2 == (x * x).inverse()


# --- brackets, factorial, pochhammer ---------------------------------------


def test_bracket_basics():
    assert t_bracket(0).is_zero()
    assert t_factorial(0).is_one()
    assert t_bracket(3) == poly({(0, 0): 1, (0, 1): 1, (0, 2): 1})


def test_factorial_expand_oracle():
    # [3]_t! = (1)(1+t)(1+t+t^2) expanded by independent multiplication
    b1 = poly({(0, 0): 1})
    b2 = poly({(0, 0): 1, (0, 1): 1})
    b3 = poly({(0, 0): 1, (0, 1): 1, (0, 2): 1})
    assert t_factorial(3) == b1 * b2 * b3


def test_pochhammer_base_and_single():
    z = rat_mono(1, -2)  # q t^-2
    assert pochhammer(z, 0) == ONE
    assert pochhammer(z, 1) == ONE - z


def test_pochhammer_recursion_oracle():
    z = rat_mono(1, -2)
    assert pochhammer(z, 2) == (ONE - z) * (ONE - z * Q)


@settings(max_examples=25, deadline=None)
@given(
    a=st.integers(-2, 2),
    b=st.integers(-2, 2),
    m=st.integers(0, 5),
    n=st.integers(0, 5),
)
def test_pochhammer_telescoping(a, b, m, n):
    z = rat_mono(a, b)
    assert pochhammer(z, m + n) == pochhammer(z, m) * pochhammer(z * Q ** m, n)


# --- u factors --------------------------------------------------------------


def test_u_at_t_vanishes():
    assert u_eval("full", T).is_zero()


def test_u0_at_inverse_t():
    assert u_eval("zero", rat_mono(0, -1)) == ONE + T


def test_u_factors_into_u0_u1():
    import random

    rng = random.Random(0)
    for _ in range(20):
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        if a == 0 and b == 0:
            continue
        z = rat_mono(a, b)
        assert u_eval("full", z) == u_eval("zero", z) * u_eval("one", z)


def test_u_pole_at_one():
    with pytest.raises(ZeroDivisionError, match="pole at z=1"):
        u_eval("full", ONE)


def test_u_over_t_inversion_invariance():
    # u(z)/t is unchanged by t -> 1/t, z -> 1/z for Laurent monomial z
    t_inv = rat_mono(0, -1)
    for (a, b) in [(1, 2), (0, -3), (2, -1), (-1, 1)]:
        z = rat_mono(a, b)
        lhs = u_eval("full", z) / T
        w = z.inverse()
        transformed = ((t_inv - w) * (ONE - t_inv * w)) / ((ONE - w) * (ONE - w))
        assert transformed / t_inv == lhs


# --- specialize -------------------------------------------------------------


def test_specialize_constraint_monomials():
    f = Q * Q * T ** 5
    assert specialize(f, (1, -5), (1, 2)).is_one()
    v = specialize(Q * T, (-1, 1), (1, 1))
    assert str(v) == "-u^2"


def test_specialize_bracket_direct_substitution():
    f = qf.t_bracket_rat(3)
    assert str(specialize(f, None, (1, 2))) == "1 + u^2 + u^4"


def test_specialize_singular_denominator():
    f = ONE / (ONE - Q * T)  # q t -> 1 under q = u^-1, t = u
    with pytest.raises(ZeroDivisionError, match="singular specialization"):
        specialize(f, (1, -1), (1, 1))


def test_specialize_missing_substitution():
    with pytest.raises(ValueError, match="no q substitution"):
        specialize(Q, None, (1, 1))


# --- LaurentMono ------------------------------------------------------------


def test_laurent_roundtrip():
    z = LaurentMono(2, -3)
    assert z.to_rat() == rat_mono(2, -3)
    assert (z / LaurentMono(1, -1)).to_rat() == rat_mono(1, -2)


# --- genericity guard -------------------------------------------------------


def test_generic_guard():
    assert_generic(Fraction(2), Fraction(3), 5)
    with pytest.raises(ValueError):
        assert_generic(Fraction(1), Fraction(3), 5)
    with pytest.raises(ValueError):
        assert_generic(Fraction(2), Fraction(-1), 5)
    with pytest.raises(ValueError):
        assert_generic(Fraction(4), Fraction(2), 5)  # q = t^2
    assert_generic(None, Fraction(2), 5)
    with pytest.raises(ValueError):
        assert_generic(Fraction(0), None, 5)


# --- rendering and parsing --------------------------------------------------


def test_render_matches_fixed_grammar():
    r = ONE - Q * T * T
    assert str(r) == "1 - q*t^2"


@settings(max_examples=40, deadline=None)
@given(x=small_rat)
def test_parse_render_roundtrip(x):
    assert parse_rat(rat_str(x)) == x


def test_parse_poly_terms():
    p = parse_poly("2*q^2*t - 3 + t^4")
    assert p == poly({(2, 1): 2, (0, 0): -3, (0, 4): 1})

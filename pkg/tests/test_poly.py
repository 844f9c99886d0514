import random
from fractions import Fraction

import pytest

from germinv import GermInputError, Polynomial, VariableContext
from germinv.exprparse import parse_polynomial


CTX = VariableContext.make(source=("x", "y"), parameter=("s",))
X = Polynomial.variable(CTX, "x")
Y = Polynomial.variable(CTX, "y")
S = Polynomial.variable(CTX, "s")


def rand_poly(rng, ctx=CTX, max_terms=4, max_deg=3):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = tuple(rng.randint(0, max_deg) for _ in range(len(ctx)))
        terms[exp] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return Polynomial(ctx, terms)


# -- context ------------------------------------------------------------------

def test_make_orders_roles():
    ctx = VariableContext.make(parameter=("s",), target=("u",), source=("a",))
    assert ctx.names == ("a", "u", "s")
    assert ctx.roles == ("source", "target", "parameter")


def test_context_rejects_duplicates_and_bad_roles():
    with pytest.raises(GermInputError):
        VariableContext.make(source=("x", "x"))
    with pytest.raises(GermInputError):
        VariableContext(("x",), ("nonsense",))
    with pytest.raises(GermInputError):
        VariableContext.make(parameter=("s", "t"))


def test_context_lookup_and_edit():
    assert CTX.index("y") == 1
    with pytest.raises(GermInputError):
        CTX.index("nope")
    assert CTX.parameter_index() == 2
    assert CTX.names_with_role("source") == ("x", "y")
    ext = CTX.extend(("p",), "cotangent")
    assert ext.names == ("x", "y", "s", "p")
    assert ext.drop(["p"]) == CTX
    assert CTX.fresh_name("x") != "x"
    assert CTX.fresh_name("z") == "z"


# -- arithmetic ---------------------------------------------------------------

def test_ring_axioms_randomized():
    rng = random.Random(7)
    for _ in range(60):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == Polynomial.zero(CTX)
        assert a * 0 == Polynomial.zero(CTX)
        assert a * 1 == a


def test_pow_matches_repeated_product():
    p = X + 2 * Y - 1
    q = Polynomial.constant(CTX, 1)
    for k in range(6):
        assert p ** k == q
        q = q * p
    with pytest.raises(GermInputError):
        p ** -1


def test_scalar_mixing_and_zero_cleanup():
    p = 2 * X + 3
    assert p - 3 == 2 * X
    assert (Fraction(1, 2) * p).coefficient((1, 0, 0)) == 1
    assert (X - X).is_zero()
    assert not (X * Y).is_zero()


def test_context_mismatch_rejected():
    other = VariableContext.make(source=("x", "y"))
    with pytest.raises(GermInputError):
        X + Polynomial.variable(other, "x")


# -- queries ------------------------------------------------------------------

def test_degrees_and_constant_term():
    p = X ** 2 * Y + S - 5
    assert p.total_degree() == 3
    assert p.constant_term() == -5
    assert Polynomial.zero(CTX).total_degree() == -1
    assert p.weighted_degrees({"x": 1, "y": 2, "s": 4}) == (0, 4)


def test_monomial_validation():
    with pytest.raises(GermInputError):
        Polynomial(CTX, {(1, 0): 1})         # wrong arity
    with pytest.raises(GermInputError):
        Polynomial(CTX, {(-1, 0, 0): 1})     # negative exponent
    assert Polynomial(CTX, {(1, 0, 0): 0}).is_zero()


# -- calculus -----------------------------------------------------------------

def test_partial_known_values():
    p = X ** 3 * Y + 2 * X * S
    assert p.partial("x") == 3 * X ** 2 * Y + 2 * S
    assert p.partial("y") == X ** 3
    assert p.partial("s") == 2 * X


def test_partial_leibniz_randomized():
    rng = random.Random(11)
    for _ in range(40):
        a, b = rand_poly(rng), rand_poly(rng)
        for v in CTX.names:
            assert (a * b).partial(v) == a.partial(v) * b + a * b.partial(v)


# -- substitution and transport ------------------------------------------------

def test_substitute_scalars_and_polys():
    p = X ** 2 + Y * S
    assert p.substitute({"x": 0}) == Y * S
    assert p.substitute({"x": Y, "s": 1}) == Y ** 2 + Y
    assert p.substitute({"x": Fraction(1, 2)}).constant_term() == Fraction(1, 4)


def test_substitute_cross_context():
    tctx = VariableContext.make(target=("y", "s"))   # x unbound would not exist
    p = X + Y
    q = p.substitute({"x": Polynomial.variable(tctx, "y")}, target=tctx)
    assert q == 2 * Polynomial.variable(tctx, "y")
    with pytest.raises(GermInputError):
        (X + S).substitute({"s": 0}, target=VariableContext.make(target=("z",)))


def test_substitute_is_a_ring_map():
    rng = random.Random(13)
    image = {"x": Y + 1 - 1, "y": X * S, "s": Polynomial.constant(CTX, 2)}
    for _ in range(25):
        a, b = rand_poly(rng), rand_poly(rng)
        assert (a + b).substitute(image) == a.substitute(image) + b.substitute(image)
        assert (a * b).substitute(image) == a.substitute(image) * b.substitute(image)


def test_rename_embeds_upward():
    big = VariableContext.make(source=("x", "y"), target=("u",), parameter=("s",))
    p = X * Y + S
    q = p.rename(big)
    assert q.coefficient((1, 1, 0, 0)) == 1
    assert q.coefficient((0, 0, 0, 1)) == 1
    with pytest.raises(GermInputError):
        q.rename(CTX)   # u has nowhere to go


def test_rename_with_mapping():
    other = VariableContext.make(source=("a", "b"), parameter=("t",))
    p = X ** 2 - S
    q = p.rename(other, {"x": "a", "y": "b", "s": "t"})
    assert str(q) == "a^2 - t"


# -- display ------------------------------------------------------------------

def test_str_canonical_examples():
    assert str(Polynomial.zero(CTX)) == "0"
    assert str(-X + Y) == "-x + y"       # degrevlex order, x before y
    assert str(X * Y - 2 * X ** 2) == "-2*x^2 + x*y"
    assert str(Fraction(1, 3) * S) == "1/3*s"


def test_str_parse_round_trip_randomized():
    rng = random.Random(17)
    for _ in range(80):
        p = rand_poly(rng, max_terms=6, max_deg=4)
        assert parse_polynomial(str(p), CTX) == p

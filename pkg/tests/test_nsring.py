import random
from fractions import Fraction
from math import factorial

import pytest

from cdcalc import Ambient, NSClass, canonical_class, eval_top, format_class, format_rational, pair
from conftest import random_ambient, random_class, random_fraction


def test_ambient_validation():
    with pytest.raises(ValueError):
        Ambient(1, 1)
    with pytest.raises(ValueError):
        Ambient(6, 0)
    assert str(Ambient(6, 4)) == "(g=6, d=4)"


def test_monomial_arithmetic():
    amb = Ambient(6, 4)
    assert amb.x() * amb.x() == amb.monomial(2, 0)
    assert amb.x() * amb.theta() == amb.monomial(1, 1)
    assert (amb.theta() - 2 * amb.x()) + 2 * amb.x() == amb.theta()
    # total degree above d vanishes for dimension reasons
    assert amb.monomial(3, 0) * amb.monomial(2, 0) == amb.zero()
    assert NSClass(amb, {(5, 0): 7, (1, 1): 2}) == amb.monomial(1, 1, 2)


def test_negative_exponents_rejected():
    with pytest.raises(ValueError):
        NSClass(Ambient(6, 4), {(-1, 0): 1})


def test_floats_rejected():
    amb = Ambient(6, 4)
    with pytest.raises(TypeError):
        NSClass(amb, {(0, 1): 0.5})
    with pytest.raises(TypeError):
        amb.theta() * 0.5


def test_immutability_and_hash():
    amb = Ambient(6, 4)
    cls = amb.theta()
    with pytest.raises(AttributeError):
        cls.ambient = Ambient(5, 3)
    assert hash(amb.theta() + amb.x()) == hash(amb.x() + amb.theta())


def test_pure_degree_and_parts():
    amb = Ambient(6, 4)
    mixed = amb.theta() + amb.monomial(2, 0)
    assert mixed.pure_degree() is None
    assert mixed.homogeneous_part(1) == amb.theta()
    assert mixed.homogeneous_part(2) == amb.monomial(2, 0)
    assert mixed.homogeneous_part(3).is_zero()
    assert amb.monomial(2, 1).pure_degree() == 3
    assert amb.zero().pure_degree() is None
    assert mixed.truncate_degree(1) == amb.theta()


def test_scalar_operations():
    amb = Ambient(6, 4)
    assert (amb.theta() / 2) * 2 == amb.theta()
    assert Fraction(1, 3) * amb.x() == amb.monomial(1, 0, Fraction(1, 3))
    assert -(amb.theta() - amb.x()) == amb.x() - amb.theta()
    assert amb.theta() ** 0 == amb.one()
    assert amb.theta() ** 3 == amb.monomial(0, 3)
    with pytest.raises(ValueError):
        amb.theta() ** -1


def test_ambient_mismatch():
    with pytest.raises(ValueError, match="ambient mismatch"):
        Ambient(6, 4).theta() + Ambient(5, 3).theta()
    with pytest.raises(ValueError, match="ambient mismatch"):
        pair(Ambient(6, 4).theta(), Ambient(6, 3).theta())


# x^i theta^(d-i) on C_d at g=6, d=4: 6!/(2+i)!  [values frozen from the formula]
@pytest.mark.parametrize("i, value", [(0, 360), (1, 120), (2, 30), (3, 6), (4, 1)])
def test_eval_top_g6_d4(i, value):
    amb = Ambient(6, 4)
    assert eval_top(amb.monomial(i, 4 - i)) == value


def test_eval_top_theta_power_is_g_factorial():
    for g in range(2, 9):
        amb = Ambient(g, g)
        assert eval_top(amb.theta() ** g) == factorial(g)


def test_eval_top_linear_combination():
    amb = Ambient(5, 3)
    # theta^3 = 5!/2! = 60, x*theta^2 = 5!/3! = 20
    cls = amb.monomial(0, 3, Fraction(1, 2)) - 3 * amb.monomial(1, 2)
    assert eval_top(cls) == Fraction(60, 2) - 3 * 20
    assert eval_top(amb.zero()) == 0


def test_eval_top_monomial_factorial_identity():
    rng = random.Random(411)
    for _ in range(300):
        amb = random_ambient(rng)
        i = rng.randint(0, amb.d)
        assert eval_top(amb.monomial(i, amb.d - i)) * factorial(amb.g - amb.d + i) == factorial(amb.g)


def test_eval_top_errors():
    amb = Ambient(6, 4)
    with pytest.raises(ValueError, match="not a top-degree class"):
        eval_top(amb.theta())
    with pytest.raises(ValueError, match="not a top-degree class"):
        eval_top(amb.theta() ** 4 + amb.x())
    with pytest.raises(ValueError, match="evaluation undefined"):
        eval_top(Ambient(4, 5).monomial(5, 0))


def test_pair_values():
    amb = Ambient(6, 4)
    assert pair(amb.theta() ** 2, amb.theta() ** 2) == 360
    assert pair(amb.x(), amb.x() ** 3) == 1
    assert pair(amb.theta(), amb.monomial(1, 2)) == 120
    assert pair(amb.zero(), amb.theta()) == 0


def test_pair_degree_mismatch():
    amb = Ambient(6, 4)
    with pytest.raises(ValueError, match="degree mismatch"):
        pair(amb.theta(), amb.theta())
    with pytest.raises(ValueError, match="degree mismatch"):
        pair(amb.theta() + amb.one(), amb.theta() ** 3)


def test_pair_symmetry_and_bilinearity():
    rng = random.Random(412)
    for _ in range(300):
        g = rng.randint(3, 10)
        d = rng.randint(2, g)
        amb = Ambient(g, d)
        k = rng.randint(0, d)
        a = random_class(rng, amb, degree=k)
        a2 = random_class(rng, amb, degree=k)
        b = random_class(rng, amb, degree=d - k)
        lam = random_fraction(rng)
        assert pair(a, b) == pair(b, a)
        assert pair(a + a2, b) == pair(a, b) + pair(a2, b)
        assert pair(lam * a, b) == lam * pair(a, b)


def test_ring_axioms():
    rng = random.Random(413)
    for _ in range(300):
        amb = random_ambient(rng, allow_excess=True)
        a = random_class(rng, amb)
        b = random_class(rng, amb)
        c = random_class(rng, amb)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert amb.one() * a == a
        assert a + amb.zero() == a


def test_canonical_class_values():
    assert canonical_class(Ambient(6, 4)) == NSClass(Ambient(6, 4), {(0, 1): 1, (1, 0): 1})
    assert format_class(canonical_class(Ambient(5, 3))) == "1*theta + 1*x"
    assert canonical_class(Ambient(7, 6)) == Ambient(7, 6).theta()


def test_format_class_canonical_order():
    amb = Ambient(6, 4)
    gamma = NSClass(amb, {(0, 3): Fraction(1, 6), (1, 2): -1, (2, 1): 3, (3, 0): -4})
    assert format_class(gamma) == "1/6*theta^3 - 1*x*theta^2 + 3*x^2*theta - 4*x^3"
    assert format_class(NSClass(amb, {(0, 1): -2, (1, 0): 18})) == "-2*theta + 18*x"
    assert format_class(amb.zero()) == "0"
    assert format_class(amb.one()) == "1"
    assert format_class(amb.monomial(0, 2, Fraction(-3, 2))) == "-3/2*theta^2"
    assert str(amb.x() + amb.one()) == "1*x + 1"


def test_format_rational():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(7) == "7"

import numpy as np
import pytest
from hypothesis import given, settings

from quatpoly import I, J, K, ONE, QPolynomial, Quaternion
from quatpoly.errors import BadDivisor, DegreeZero, NotUnitQuaternion, ZeroPolynomial
from quatpoly.qpoly import (component_gcd, qp_conjugated, qp_div_linear, qp_div_real_quadratic,
                            qp_is_primitive)
from quatpoly.quaternion import char_poly, norm
from quatpoly.realpoly import RPoly
from quatpoly.textformat import parse_polynomial

from conftest import int_quaternions, qpolys, quaternions, random_qpoly, random_quaternion

CUBIC = "(1)t^3+(i+j+k)t^2+(-i+j-k)t+(1)"


def test_known_products():
    t = QPolynomial.monomial(1)
    assert (t + K) * (t + J) * (t + I) == parse_polynomial(CUBIC)
    assert (t + J) * (t + I) == parse_polynomial("(1)t^2+(i+j)t+(-k)")


@settings(max_examples=50)
@given(qpolys(3, int_quaternions), qpolys(3, int_quaternions), qpolys(2, int_quaternions))
def test_product_associative_exact(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(qpolys(4), quaternions)
def test_evaluation_of_product_with_real_factor(f, c):
    # multiplication by a real polynomial commutes with evaluation
    r = QPolynomial([2.0, -1.0, 1.0])
    lhs = (f * r)(c)
    rhs = f(c) * r(c)
    assert lhs.isclose(rhs, 1e-9 * (1 + f.eval_scale(c) * r.eval_scale(c)))


def test_evaluation_is_not_multiplicative():
    # f = t - i vanishes at i but (t - i)(t - j) takes the value 2k there
    f, g = QPolynomial.linear(I), QPolynomial.linear(J)
    assert f(I) * g(I) == Quaternion()
    assert (f * g)(I) == 2 * K
    assert (f * g)(J) == Quaternion()


def test_norm_poly():
    f = parse_polynomial(CUBIC)
    assert f.norm_poly() == RPoly([1, 0, 1]) ** 3
    assert parse_polynomial("(1)t^2+(i+j)t+(-k)").norm_poly() == RPoly([1, 0, 1]) ** 2


@given(qpolys(4))
def test_norm_poly_equals_f_fbar(f):
    prod = f * f.conj()
    scale = 1 + f.coef_norm() ** 2
    for k in range(len(prod)):
        assert norm(prod[k] - Quaternion(f.norm_poly()[k], 0, 0, 0)) < 1e-9 * scale


def test_remainder_theorem(rng):
    for _ in range(50):
        f = random_qpoly(rng, int(rng.integers(1, 7)))
        c = random_quaternion(rng)
        g, r = qp_div_linear(f, c)
        assert r.isclose(f(c), 1e-10 * (1 + f.eval_scale(c)))
        assert (g * QPolynomial.linear(c) + QPolynomial([r])).allclose(f, 1e-12)
    assert qp_div_linear(parse_polynomial(CUBIC), -I)[1].isclose(Quaternion())
    with pytest.raises(DegreeZero):
        qp_div_linear(QPolynomial([ONE]), I)


def test_quadratic_division():
    f = parse_polynomial("(1)t^2+(i+j)t+(-k)")
    h, a, b = qp_div_real_quadratic(f, RPoly([1, 0, 1]))
    assert h == QPolynomial([ONE]) and a == I + J and b == Quaternion(-1, 0, 0, -1)
    with pytest.raises(BadDivisor):
        qp_div_real_quadratic(f, RPoly([1, 0, 2]))


def test_quadratic_division_reconstructs(rng):
    for _ in range(30):
        f = random_qpoly(rng, int(rng.integers(0, 7)))
        q = char_poly(random_quaternion(rng))
        h, a, b = qp_div_real_quadratic(f, q)
        assert (h * q + QPolynomial([b, a])).allclose(f, 1e-12)


def test_primitivity():
    assert qp_is_primitive(parse_polynomial(CUBIC))
    assert not qp_is_primitive(parse_polynomial("(1)t^2+(1)"))
    assert not qp_is_primitive(QPolynomial.linear(I) * RPoly([1, 0, 1]))
    # a shared real factor t - 1 leaves f primitive
    assert qp_is_primitive(QPolynomial.linear(ONE) * QPolynomial.linear(I))
    assert component_gcd(QPolynomial.linear(ONE) * RPoly([-1, 1])).allclose(RPoly([1, -2, 1]))
    with pytest.raises(ZeroPolynomial):
        component_gcd(QPolynomial())


def test_conjugated(rng):
    f = random_qpoly(rng, 3)
    c = random_quaternion(rng)
    c = c / norm(c)
    g = qp_conjugated(f, c)
    t = random_quaternion(rng)
    # (c f c*)(c t c*) = c f(t) c*
    assert g(c * t * c.conj()).isclose(c * f(t) * c.conj(), 1e-10 * (1 + f.eval_scale(t)))
    with pytest.raises(NotUnitQuaternion):
        qp_conjugated(f, Quaternion(2, 0, 0, 0))


def test_from_factors_has_roots(rng):
    cs = [random_quaternion(rng) for _ in range(4)]
    f = QPolynomial.from_factors(cs)
    assert f.degree == 4 and f.lead == ONE
    assert norm(f(cs[0])) < 1e-10 * f.eval_scale(cs[0])
    np.testing.assert_allclose(f.norm_poly().coeffs[-1], 1.0)

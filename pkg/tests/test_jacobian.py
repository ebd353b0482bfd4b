import numpy as np
import pytest

from quatpoly import I, J, ONE, QPolynomial, Quaternion
from quatpoly.errors import PatternViolation, ZeroImaginaryPart
from quatpoly.jacobian import (COMPLEX_STRUCTURE, X, Y, Z, W, cr_check_complex, cr_check_general,
                               cr_check_real, det4, det_I_plus_CA, power_closed_form_at_i,
                               expand_components, generic_power, jacobian_at, jacobian_batch,
                               jacobian_fd, jacobian_symbolic, power_identity_checks,
                               nonnegativity_scan, power_det, structural_at_i)
from quatpoly.qpoly import qp_is_primitive
from quatpoly.quaternion import to_matrix
from quatpoly.textformat import parse_polynomial

from conftest import random_qpoly, random_quaternion

QUINTIC = "(2+3i)t^5+(1+i)t^3+(1)t^2+(-1-2i)t+(5i)"


def test_generic_power_small():
    u, v, p, q = generic_power(2)
    assert u == X * X - Y * Y - Z * Z - W * W
    assert v == 2 * X * Y and p == 2 * X * Z and q == 2 * X * W


def test_expand_components_matches_evaluation(rng):
    f = random_qpoly(rng, 4)
    comps = expand_components(f)
    pt = rng.standard_normal(4)
    np.testing.assert_allclose(comps.eval(pt), f(Quaternion.from_seq(pt)).as_array(), atol=1e-10)


def test_jacobian_of_linear_is_constant_left_multiplication(rng):
    a = random_quaternion(rng)
    f = QPolynomial([random_quaternion(rng), a])
    np.testing.assert_allclose(jacobian_at(f, random_quaternion(rng)).matrix, to_matrix(a),
                               atol=1e-14)


def test_t_squared_spot_value():
    assert jacobian_at(QPolynomial.monomial(2), Quaternion(1, 2, 3, 4)).det == pytest.approx(480)
    np.testing.assert_array_equal(jacobian_at(QPolynomial.monomial(2), I).matrix,
                                  [[0, -2, 0, 0], [2, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])


@pytest.mark.parametrize("k", range(1, 11))
def test_closed_forms_at_i(k):
    np.testing.assert_array_equal(jacobian_at(QPolynomial.monomial(k), I).matrix,
                                  power_closed_form_at_i(k))


def test_closed_forms_scaled_point():
    for k in range(1, 7):
        np.testing.assert_allclose(jacobian_at(QPolynomial.monomial(k), Quaternion(0, 1.5, 0, 0))
                                   .matrix, power_closed_form_at_i(k, 1.5), atol=1e-12)


def test_three_routes_agree(rng):
    for _ in range(30):
        f = random_qpoly(rng, int(rng.integers(1, 7)))
        p = random_quaternion(rng)
        m = jacobian_at(f, p).matrix
        scale = np.max(np.abs(m)) + 1
        np.testing.assert_allclose(jacobian_symbolic(f, p).matrix, m, atol=1e-12 * scale)
        np.testing.assert_allclose(jacobian_fd(f, p).matrix, m, atol=1e-6 * scale)


def test_jacobian_batch_matches_single(rng):
    coeffs = rng.standard_normal((6, 5, 4))
    pts = rng.standard_normal((6, 4))
    batch = jacobian_batch(coeffs, pts)
    for n in range(6):
        f = QPolynomial(coeffs[n].tolist())
        np.testing.assert_allclose(batch[n], jacobian_at(f, Quaternion.from_seq(pts[n])).matrix,
                                   atol=1e-12)


def test_det4_exact_and_against_numpy(rng):
    m = rng.integers(-9, 10, size=(50, 4, 4))
    np.testing.assert_array_equal(det4(m), np.round(np.linalg.det(m)).astype(int))
    a = rng.standard_normal((4, 4))
    assert det4(a) == pytest.approx(np.linalg.det(a))


def test_structure_at_i(rng):
    np.testing.assert_array_equal(COMPLEX_STRUCTURE @ COMPLEX_STRUCTURE, -np.eye(4))
    be, bo, mat = structural_at_i(QPolynomial.monomial(2))
    assert be == I and bo == ONE
    np.testing.assert_array_equal(mat, power_closed_form_at_i(2))
    be, bo, mat = structural_at_i(QPolynomial.linear(I))
    np.testing.assert_array_equal(mat, np.eye(4))
    for _ in range(20):
        f = random_qpoly(rng, int(rng.integers(1, 9)))
        np.testing.assert_allclose(structural_at_i(f)[2], jacobian_at(f, I).matrix, atol=1e-10)


def test_det_I_plus_CA(rng):
    assert det_I_plus_CA(Quaternion()) == (1.0, 1.0)
    assert det_I_plus_CA(I)[0] == pytest.approx(0, abs=1e-15)
    for _ in range(100):
        direct, closed = det_I_plus_CA(random_quaternion(rng, 2))
        assert direct == pytest.approx(closed, rel=1e-9, abs=1e-12)
        assert closed >= -1e-12
    for _ in range(50):
        u = rng.standard_normal(3)
        u /= np.linalg.norm(u)
        direct, closed = det_I_plus_CA(Quaternion(0, *u))
        assert abs(direct) < 1e-12 and abs(closed) < 1e-12


def test_cr_real():
    rep = cr_check_real(QPolynomial.monomial(2), 1.0)
    assert rep.passed
    np.testing.assert_array_equal(jacobian_at(QPolynomial.monomial(2), ONE).matrix, 2 * np.eye(4))
    rep = cr_check_real(parse_polynomial("(1)t^3+(i+j+k)t^2+(-i+j-k)t+(1)"), 0.0)
    assert rep.passed and rep.results[0].residual < 1e-12
    # the reduced diagonal form only holds if g(t0) is real, here it is not
    assert not rep.results[2].passed and not rep.results[2].asserted


def test_cr_complex_t_squared():
    blocks = cr_check_complex(QPolynomial.monomial(2), I)
    assert blocks.alpha == (0.0, 0.0, 0.0, 0.0)
    assert blocks.beta == (2.0, 0.0, 0.0, 0.0)
    with pytest.raises(ZeroImaginaryPart):
        cr_check_complex(QPolynomial.monomial(2), 1.0)


def test_quintic_block_values_match_complex_derivative():
    # for a complex polynomial the upper block is the complex derivative g'(i) = 6 + 12i
    g = parse_polynomial(QUINTIC)
    blocks = cr_check_complex(g, I)
    assert blocks.alpha[0] == 6.0 and blocks.beta[0] == 12.0
    assert blocks.alpha[3] == 0.0 and blocks.beta[3] == 0.0
    assert jacobian_at(g, I).det == 0.0
    # g(i) = -1 + 5i, so the quintic does not vanish at i
    assert g(I) == Quaternion(-1, 5, 0, 0)


def test_block_pattern_random(rng):
    for _ in range(50):
        f = random_qpoly(rng, int(rng.integers(1, 7)))
        t0 = Quaternion(rng.standard_normal(), rng.standard_normal(), 0, 0)
        blocks = cr_check_complex(f, t0)
        assert blocks.residual < 1e-9 * (1 + np.max(np.abs(blocks.jacobian)))


def test_pattern_violation_is_reported(monkeypatch):
    import quatpoly.jacobian as jac

    real = jac.jacobian_at

    def broken(f, p):
        out = real(f, p)
        m = out.matrix.copy()
        m[0, 0] += 1.0
        return jac.Jacobian4(m, out.point)

    monkeypatch.setattr(jac, "jacobian_at", broken)
    with pytest.raises(PatternViolation) as err:
        jac.cr_check_complex(QPolynomial.monomial(3), I)
    assert err.value.entries


def test_vanishing_lower_block_at_a_root_means_non_primitive(rng):
    # g(i) = 0 together with gamma = delta = 0 forces t^2 + 1 to divide g
    for _ in range(30):
        h = QPolynomial([complex(*rng.standard_normal(2)) for _ in range(4)])
        g = h * QPolynomial([1.0, 0.0, 1.0])
        blocks = cr_check_complex(g, I)
        assert abs(blocks.alpha[3]) < 1e-12 and abs(blocks.beta[3]) < 1e-12
        assert not qp_is_primitive(g)
        s = QPolynomial([complex(*rng.standard_normal(2)) for _ in range(3)]) * \
            QPolynomial.linear(I)
        b2 = cr_check_complex(s, I)
        assert qp_is_primitive(s)
        assert abs(b2.alpha[3]) + abs(b2.beta[3]) > 1e-6


def test_cr_general(rng):
    rep = cr_check_general(QPolynomial.monomial(2), J)
    assert rep.passed
    for _ in range(30):
        f = random_qpoly(rng, int(rng.integers(1, 6)))
        rep = cr_check_general(f, random_quaternion(rng))
        assert rep.passed, rep.lines()
    with pytest.raises(ZeroImaginaryPart):
        cr_check_general(QPolynomial.monomial(2), ONE)


@pytest.mark.parametrize("n", range(1, 9))
def test_power_identities(n):
    rep = power_identity_checks(n)
    assert rep.passed, rep.lines()


def test_power_det_is_the_real_determinant(rng):
    for n in range(1, 7):
        pt = rng.standard_normal(4)
        direct = jacobian_at(QPolynomial.monomial(n), Quaternion.from_seq(pt)).det
        assert power_det(n).eval(pt) == pytest.approx(direct, rel=1e-9, abs=1e-9)


def test_identity_check_detects_a_wrong_identity():
    u, v, _, _ = generic_power(3)
    # same shape as the true identity but with the wrong factor n = 2
    wrong = Y ** 3 * power_det(3) - v * v * (v * u.partial(0) - u * v.partial(0)) * 2
    assert not wrong.is_zero()
    assert power_det(2) == X * X * (X * X + Y * Y + Z * Z + W * W) * 16


def test_scan_small_and_deterministic():
    a = nonnegativity_scan(2000, seed=7).as_dict()
    b = nonnegativity_scan(2000, seed=7).as_dict()
    assert a == b and a["pass"]
    assert a["min_normalized_det"] >= -1e-8
    c = nonnegativity_scan(500, seed=7, f=QPolynomial.monomial(2))
    assert c.passed and c.min_normalized_det >= 0

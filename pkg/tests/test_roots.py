import numpy as np
import pytest

from quatpoly import I, J, K, ONE, QPolynomial, Quaternion
from quatpoly.errors import DegreeZero, NotARoot, NotPrimitive
from quatpoly.quaternion import is_similar, norm
from quatpoly.roots import (RootKind, find_roots, has_spherical_root, local_degrees, multiplicity,
                            root_residual, simple_root_det_link, sphere_points)
from quatpoly.textformat import parse_polynomial

from conftest import random_quaternion

CUBIC = "(1)t^3+(i+j+k)t^2+(-i+j-k)t+(1)"
DOUBLE = "(1)t^2+(i+j)t+(-k)"


def test_cubic_has_unique_root():
    f = parse_polynomial(CUBIC)
    (rec,) = find_roots(f)
    assert rec.kind is RootKind.ISOLATED and rec.value.isclose(-I, 1e-12)
    assert rec.multiplicity == 3 and rec.local_degree == 3
    assert not has_spherical_root(f)
    # -j and -k are also similar to -i but are not roots
    assert root_residual(f, -J) > 1e-3 and root_residual(f, -K) > 1e-3


def test_sphere():
    f = parse_polynomial("(1)t^2+(1)")
    (rec,) = find_roots(f)
    assert rec.kind is RootKind.SPHERICAL and rec.multiplicity == 2
    assert rec.local_degree is None and rec.doubled_multiplicity == 4
    assert has_spherical_root(f)
    for p in sphere_points(rec, 10, np.random.default_rng(0)):
        assert norm(f(p)) < 1e-12
    with pytest.raises(NotPrimitive):
        local_degrees(f)


def test_double_root():
    f = parse_polynomial(DOUBLE)
    (rec,) = find_roots(f)
    assert rec.value.isclose(-I, 1e-12) and rec.multiplicity == 2
    assert multiplicity(f, -I) == 2
    rep = simple_root_det_link(f)
    assert rep.passed and rep.results[0].detail["det"] == 0.0


def test_real_and_nonreal_roots():
    f = QPolynomial.linear(ONE) * QPolynomial.linear(I)
    recs = find_roots(f)
    assert {r.value.as_tuple() for r in recs} == {(1.0, 0.0, 0.0, 0.0), (0.0, 1.0, 0.0, 0.0)}
    assert all(r.multiplicity == 1 for r in recs)
    assert multiplicity(QPolynomial.linear(ONE) * QPolynomial.linear(ONE), ONE) == 2


def test_mixed_sphere_and_point():
    f = QPolynomial.linear(J + ONE) * QPolynomial([1.0, 0.0, 1.0])
    recs = find_roots(f)
    kinds = sorted(r.kind.value for r in recs)
    assert kinds == ["isolated", "spherical"]
    iso = next(r for r in recs if r.kind is RootKind.ISOLATED)
    assert iso.value.isclose(ONE + J, 1e-10) and iso.local_degree is None


def test_errors():
    with pytest.raises(DegreeZero):
        find_roots(QPolynomial([ONE]))
    with pytest.raises(NotARoot):
        multiplicity(parse_polynomial(CUBIC), J)


def test_factor_roots_are_found(rng):
    for _ in range(100):
        n = int(rng.integers(1, 6))
        cs = [random_quaternion(rng) for _ in range(n)]
        f = QPolynomial.from_factors(cs)
        recs = find_roots(f)
        assert sum(r.multiplicity for r in recs) == n
        assert all(r.residual < 1e-7 for r in recs)
        assert sum(local_degrees(f).values()) == n
        # the rightmost factor's root is always a root of f
        assert any(r.value.isclose(cs[0], 1e-6) for r in recs)
        # every factor root is similar to some root of f
        for c in cs:
            assert any(is_similar(c, r.value, 1e-6) for r in recs)


def test_simple_roots_have_positive_determinant(rng):
    for _ in range(50):
        f = QPolynomial.from_factors([random_quaternion(rng) for _ in range(3)])
        rep = simple_root_det_link(f)
        assert rep.passed, rep.lines()


def test_record_serialization():
    (rec,) = find_roots(parse_polynomial("(1)t^2+(1)"))
    d = rec.as_dict()
    assert set(d) == {"value", "kind", "multiplicity", "local_degree", "residual"}
    assert d["kind"] == "spherical"
    assert rec.as_dict(verbose=True)["doubled_multiplicity"] == 4


def test_scaled_and_high_degree(rng):
    cs = [Quaternion(k, 0.5, -0.25 * k, 0.1) for k in range(6)]
    f = QPolynomial.from_factors(cs, lead=Quaternion(0, 0, 3, 0))
    recs = find_roots(f)
    assert sum(r.multiplicity for r in recs) == 6

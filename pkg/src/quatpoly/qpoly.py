"""Left quaternion polynomials ``a_n t^n + ... + a_0`` (coefficients left of the powers)."""

from __future__ import annotations

from collections.abc import Iterable

from . import config
from .errors import BadDivisor, DegreeZero, NotUnitQuaternion, ZeroPolynomial
from .quaternion import ONE, ZERO, Quaternion, conj, mul, norm, rotate
from .realpoly import RPoly, complex_roots, rpoly_gcd


def _normalize(coeffs: list[Quaternion], tol: float) -> tuple[Quaternion, ...]:
    big = max((max(abs(c.w), abs(c.x), abs(c.y), abs(c.z)) for c in coeffs), default=0.0)
    if big == 0:
        return ()
    cut = tol * big

    def snap(v):
        return v if abs(v) > cut else 0.0

    out = []
    for c in coeffs:
        if abs(c.w) > cut and abs(c.x) > cut and abs(c.y) > cut and abs(c.z) > cut:
            out.append(c)
        else:
            out.append(Quaternion(snap(c.w), snap(c.x), snap(c.y), snap(c.z)))
    while out and not out[-1]:
        out.pop()
    return tuple(out)


class QPolynomial:
    """Left polynomial over the quaternions; ``coeffs[k]`` multiplies ``t^k``.

    Coefficient components below ``EPS_COEF`` times the largest component are
    snapped to zero and trailing zero coefficients are dropped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = (), *, snap: float = config.EPS_COEF):
        self.coeffs = _normalize([Quaternion.coerce(c) for c in coeffs], snap)

    @classmethod
    def linear(cls, c) -> QPolynomial:
        """``t - c``."""
        return cls([-Quaternion.coerce(c), ONE])

    @classmethod
    def monomial(cls, degree: int, coef=ONE) -> QPolynomial:
        return cls([ZERO] * degree + [Quaternion.coerce(coef)])

    @classmethod
    def from_real(cls, p: RPoly) -> QPolynomial:
        return cls([Quaternion(c, 0.0, 0.0, 0.0) for c in p.coeffs])

    @classmethod
    def from_components(cls, a: RPoly, b: RPoly, c: RPoly, d: RPoly) -> QPolynomial:
        n = max(len(a), len(b), len(c), len(d))
        return cls([Quaternion(a[k], b[k], c[k], d[k]) for k in range(n)])

    @classmethod
    def from_factors(cls, roots, lead=ONE) -> QPolynomial:
        """``lead (t - c_n) ... (t - c_1)`` for ``roots = [c_1, ..., c_n]``."""
        out = cls([lead])
        for c in reversed(list(roots)):
            out = out * cls.linear(c)
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Quaternion:
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k) -> Quaternion:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({[c.as_tuple() for c in self.coeffs]!r})"

    def __str__(self):
        from .textformat import format_polynomial

        return format_polynomial(self)

    def __neg__(self):
        return QPolynomial([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_qpoly(other)
        n = max(len(self), len(other))
        return QPolynomial([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_qpoly(other))

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return QPolynomial([c * other for c in self.coeffs])
        return qp_mul(self, _as_qpoly(other))

    def __rmul__(self, other):
        return qp_mul(_as_qpoly(other), self)

    def __call__(self, c) -> Quaternion:
        return qp_eval(self, c)

    def components(self) -> tuple[RPoly, RPoly, RPoly, RPoly]:
        """``(a, b, c, d)`` with ``f = a + i b + j c + k d``."""
        return tuple(RPoly([getattr(q, f) for q in self.coeffs], snap=0.0)
                     for f in ("w", "x", "y", "z"))

    def conj(self) -> QPolynomial:
        return qp_conj(self)

    def norm_poly(self) -> RPoly:
        return qp_norm_poly(self)

    def coef_norm(self) -> float:
        return sum(norm(c) for c in self.coeffs)

    def eval_scale(self, c: Quaternion) -> float:
        """``sum |a_k| |c|^k``: the magnitude against which ``|f(c)|`` is judged."""
        r = norm(Quaternion.coerce(c))
        return sum(norm(a) * r ** k for k, a in enumerate(self.coeffs))

    def allclose(self, other, tol: float = 1e-10) -> bool:
        other = _as_qpoly(other)
        n = max(len(self), len(other))
        scale = max(self.coef_norm(), other.coef_norm(), 1e-300)
        return all(norm(self[k] - other[k]) <= tol * scale for k in range(n))


def _as_qpoly(f) -> QPolynomial:
    if isinstance(f, QPolynomial):
        return f
    if isinstance(f, RPoly):
        return QPolynomial.from_real(f)
    if isinstance(f, (Quaternion, int, float)):
        return QPolynomial([f])
    return QPolynomial(f)


def qp_mul(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    """Product with ``c_k = sum_i a_i b_{k-i}``; ``f``'s coefficients stay on the left."""
    if f.is_zero() or g.is_zero():
        return QPolynomial()
    out = [ZERO] * (len(f) + len(g) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + mul(a, b)
    return QPolynomial(out)


def qp_eval(f: QPolynomial, c) -> Quaternion:
    """Horner evaluation of ``sum a_k c^k``; valid since powers of ``c`` commute with ``c``."""
    c = Quaternion.coerce(c)
    acc = ZERO
    for a in reversed(f.coeffs):
        acc = mul(acc, c) + a
    return acc


def qp_conj(f: QPolynomial) -> QPolynomial:
    return QPolynomial([conj(c) for c in f.coeffs])


def qp_norm_poly(f: QPolynomial) -> RPoly:
    """``a^2 + b^2 + c^2 + d^2`` for the components of ``f``."""
    total = RPoly()
    for comp in f.components():
        if not comp.is_zero():
            total = total + comp * comp
    return total


def qp_div_linear(f: QPolynomial, c) -> tuple[QPolynomial, Quaternion]:
    """``f = g (t - c) + r`` with ``r = f(c)``."""
    if f.degree < 1:
        raise DegreeZero("division by (t - c) needs deg f >= 1")
    c = Quaternion.coerce(c)
    n = f.degree
    g = [ZERO] * n
    g[n - 1] = f.coeffs[n]
    for k in range(n - 1, 0, -1):
        g[k - 1] = f.coeffs[k] + mul(g[k], c)
    r = f.coeffs[0] + mul(g[0], c)
    return QPolynomial(g, snap=0.0), r


def qp_div_real_quadratic(f: QPolynomial, q: RPoly) -> tuple[QPolynomial, Quaternion, Quaternion]:
    """``f = h q + A t + B`` for a monic real quadratic ``q``."""
    if q.degree != 2 or q.lead != 1:
        raise BadDivisor(f"divisor must be a monic real quadratic, got {q}")
    q0, q1 = q[0], q[1]
    rem = list(f.coeffs)
    if len(rem) < 3:
        rem += [ZERO] * (2 - len(rem))
        return QPolynomial(), rem[1], rem[0]
    h = [ZERO] * (len(rem) - 2)
    for k in range(len(rem) - 3, -1, -1):
        lead = rem[k + 2]
        h[k] = lead
        rem[k + 1] = rem[k + 1] - lead * q1
        rem[k] = rem[k] - lead * q0
        rem[k + 2] = ZERO
    return QPolynomial(h, snap=0.0), rem[1], rem[0]


def component_gcd(f: QPolynomial, tol: float = config.EPS_GCD) -> RPoly:
    """Monic gcd of the nonzero real components of ``f``."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no component gcd")
    parts = [p for p in f.components() if not p.is_zero()]
    g = parts[0].monic()
    for p in parts[1:]:
        if g.degree == 0:
            break
        g = rpoly_gcd(g, p, tol)
    return g


def qp_is_primitive(f: QPolynomial, tol: float = config.EPS_GCD) -> bool:
    """True when the components share no irreducible real quadratic factor.

    A shared real linear factor ``t - r`` only signals the real root ``r``,
    which is not spherical, so it does not break primitivity.
    """
    g = component_gcd(f, tol)
    if g.degree < 2:
        return True
    return all(abs(z.imag) <= 1e-7 * (1 + abs(z)) for z, _ in complex_roots(g))


def qp_conjugated(f: QPolynomial, c, tol: float = config.EPS_UNIT) -> QPolynomial:
    """``c f c*`` coefficientwise, for a unit quaternion ``c``."""
    c = Quaternion.coerce(c)
    if abs(norm(c) - 1.0) > tol:
        raise NotUnitQuaternion(f"|c| = {norm(c)!r} is not 1")
    return QPolynomial([rotate(c, a) for a in f.coeffs])

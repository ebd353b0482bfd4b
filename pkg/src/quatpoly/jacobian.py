"""Jacobians of quaternion polynomials viewed as maps R^4 -> R^4.

The general mechanism is symbolic: the generic quaternion ``x + iy + jz + kw``
is raised to powers as a 4-tuple of :class:`MPoly4` with integer coefficients,
differentiated termwise and evaluated. Because left multiplication by a
coefficient ``a`` acts as the matrix ``to_matrix(a)`` on the output,
``J(f)(p) = sum_k to_matrix(a_k) J(t^k)(p)``, so only the powers are cached.

The closed-form block patterns at real and complex points, the rotation
transport to a general point, and the algebraic identities for ``t^n`` are
implemented as independent checks over that mechanism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import config
from .errors import DegreeZero, PatternViolation, ZeroImaginaryPart
from .qpoly import QPolynomial, qp_conjugated, qp_div_linear, qp_eval
from .quaternion import I, Quaternion, find_gamma, left_matrices, rotation_matrix, to_matrix
from .realpoly import MPoly4
from .report import CheckReport, CheckResult

QPoly4 = tuple[MPoly4, MPoly4, MPoly4, MPoly4]

X, Y, Z, W = (MPoly4.var(k) for k in range(4))

# J(t^k (t - i))(i) = A^k
COMPLEX_STRUCTURE = np.array([
    [0, -1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, -1, 0],
], dtype=float)


def qmul_mpoly(a: QPoly4, b: QPoly4) -> QPoly4:
    """Hamilton product of two quaternion-valued polynomials."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


@lru_cache(maxsize=None)
def generic_power(k: int) -> QPoly4:
    """Components of ``(x + iy + jz + kw)^k`` with exact integer coefficients."""
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return (MPoly4.const(1), MPoly4(), MPoly4(), MPoly4())
    return qmul_mpoly(generic_power(k - 1), (X, Y, Z, W))


@lru_cache(maxsize=None)
def power_partials(k: int) -> tuple[tuple[MPoly4, ...], ...]:
    """``[d f_r / d x_s]`` for ``f = t^k``, as a 4x4 nested tuple of MPoly4."""
    comps = generic_power(k)
    return tuple(tuple(comps[r].partial(s) for s in range(4)) for r in range(4))


@dataclass(frozen=True)
class ComponentMap:
    """Real components ``(f1, f2, f3, f4)`` of ``f(x + iy + jz + kw)``."""

    f1: MPoly4
    f2: MPoly4
    f3: MPoly4
    f4: MPoly4

    def __iter__(self):
        return iter((self.f1, self.f2, self.f3, self.f4))

    def eval(self, point) -> np.ndarray:
        return np.array([p.eval(point) for p in self], dtype=float)

    def jacobian_polys(self) -> list[list[MPoly4]]:
        return [[p.partial(s) for s in range(4)] for p in self]


def _left_combine(a: Quaternion, comps: QPoly4) -> QPoly4:
    m = to_matrix(a)
    out = []
    for r in range(4):
        acc = MPoly4()
        for s in range(4):
            c = float(m[r, s])
            if c:
                acc = acc + comps[s] * c
        out.append(acc)
    return tuple(out)


def expand_components(f: QPolynomial) -> ComponentMap:
    acc: list[MPoly4] = [MPoly4(), MPoly4(), MPoly4(), MPoly4()]
    for k, a in enumerate(f.coeffs):
        if not a:
            continue
        part = _left_combine(a, generic_power(k))
        acc = [acc[r] + part[r] for r in range(4)]
    return ComponentMap(*acc)


# -- numeric evaluation of the cached power Jacobians -------------------------

@dataclass(frozen=True)
class _PowerTable:
    exps: np.ndarray  # (M, 4) monomial exponents
    coefs: np.ndarray  # (M, D+1, 4, 4): coefficient of each monomial in J(t^k)

    @property
    def max_degree(self) -> int:
        return self.coefs.shape[1] - 1

    def monomials(self, points: np.ndarray) -> np.ndarray:
        """Monomial values, shape ``(N, M)`` for points of shape ``(N, 4)``."""
        pw = self.exps.max(initial=0)
        powers = np.ones((points.shape[0], 4, pw + 1))
        for e in range(1, pw + 1):
            powers[:, :, e] = powers[:, :, e - 1] * points
        vals = np.ones((points.shape[0], self.exps.shape[0]))
        for v in range(4):
            vals *= powers[:, v, self.exps[:, v]]
        return vals

    def power_jacobians(self, points: np.ndarray) -> np.ndarray:
        """``J(t^k)(p)`` for every point and k, shape ``(N, D+1, 4, 4)``."""
        vals = self.monomials(points)
        flat = self.coefs.reshape(self.coefs.shape[0], -1)
        return (vals @ flat).reshape(points.shape[0], *self.coefs.shape[1:])


@lru_cache(maxsize=8)
def _power_table(max_degree: int) -> _PowerTable:
    index: dict[tuple, int] = {}
    entries = []
    for k in range(max_degree + 1):
        parts = power_partials(k)
        for r in range(4):
            for s in range(4):
                for e, c in parts[r][s].terms.items():
                    m = index.setdefault(e, len(index))
                    entries.append((m, k, r, s, c))
    if not index:
        index[(0, 0, 0, 0)] = 0
    exps = np.zeros((len(index), 4), dtype=int)
    for e, m in index.items():
        exps[m] = e
    coefs = np.zeros((len(index), max_degree + 1, 4, 4))
    for m, k, r, s, c in entries:
        coefs[m, k, r, s] = c
    return _PowerTable(exps, coefs)


def _table_for(degree: int) -> _PowerTable:
    # round up so nearby degrees share one table
    return _power_table(max(8, degree))


def det4(m: np.ndarray) -> np.ndarray:
    """Determinant over the last two axes by Laplace expansion in 2x2 minors.

    Exact for small-integer entries, unlike an LU factorisation.
    """
    a = m[..., 0, :]
    b = m[..., 1, :]
    c = m[..., 2, :]
    d = m[..., 3, :]

    def minor(u, v, i, j):
        return u[..., i] * v[..., j] - u[..., j] * v[..., i]

    s01, s02, s03 = minor(a, b, 0, 1), minor(a, b, 0, 2), minor(a, b, 0, 3)
    s12, s13, s23 = minor(a, b, 1, 2), minor(a, b, 1, 3), minor(a, b, 2, 3)
    c01, c02, c03 = minor(c, d, 0, 1), minor(c, d, 0, 2), minor(c, d, 0, 3)
    c12, c13, c23 = minor(c, d, 1, 2), minor(c, d, 1, 3), minor(c, d, 2, 3)
    return s01 * c23 - s02 * c13 + s03 * c12 + s12 * c03 - s13 * c02 + s23 * c01


def det_scale(m: np.ndarray) -> np.ndarray:
    """``max(1, ||J||_2^4)``, the natural size of a 4x4 determinant."""
    n2 = np.linalg.norm(m, ord=2, axis=(-2, -1))
    return np.maximum(1.0, n2 ** 4)


@dataclass(frozen=True)
class Jacobian4:
    matrix: np.ndarray
    point: Quaternion

    @property
    def det(self) -> float:
        return float(det4(self.matrix))

    @property
    def scale(self) -> float:
        return float(det_scale(self.matrix))

    @property
    def normalized_det(self) -> float:
        return self.det / self.scale

    def entry_scale(self) -> float:
        return max(1.0, float(np.max(np.abs(self.matrix))))

    def is_nonnegative(self, tol: float = config.EPS_NONNEG) -> bool:
        return self.det >= -tol * self.scale


def jacobian_at(f: QPolynomial, p) -> Jacobian4:
    p = Quaternion.coerce(p)
    if f.is_zero():
        return Jacobian4(np.zeros((4, 4)), p)
    table = _table_for(f.degree)
    pj = table.power_jacobians(p.as_array()[None, :])[0, : f.degree + 1]
    coeffs = np.array([c.as_tuple() for c in f.coeffs], dtype=float)
    mat = np.einsum("kab,kbc->ac", left_matrices(coeffs), pj)
    return Jacobian4(mat, p)


def jacobian_batch(coeffs: np.ndarray, points: np.ndarray) -> np.ndarray:
    """Jacobians for many ``(f, p)`` pairs at once.

    ``coeffs`` has shape ``(N, D+1, 4)`` (ascending degree, zero padded),
    ``points`` shape ``(N, 4)``; returns ``(N, 4, 4)``.
    """
    degree = coeffs.shape[1] - 1
    table = _table_for(degree)
    pj = table.power_jacobians(points)[:, : degree + 1]
    return np.einsum("nkab,nkbc->nac", left_matrices(coeffs), pj)


def jacobian_det(f: QPolynomial, p) -> float:
    return jacobian_at(f, p).det


def jacobian_symbolic(f: QPolynomial, p) -> Jacobian4:
    """Jacobian from the full component expansion of ``f``; slower, used as a cross-check."""
    p = Quaternion.coerce(p)
    polys = expand_components(f).jacobian_polys()
    pt = p.as_tuple()
    mat = np.array([[polys[r][s].eval(pt) for s in range(4)] for r in range(4)], dtype=float)
    return Jacobian4(mat, p)


def jacobian_fd(f: QPolynomial, p, h: float = 1e-5) -> Jacobian4:
    """Central differences of :func:`qp_eval` along 1, i, j, k."""
    if h <= 0:
        raise ValueError("step must be positive")
    p = Quaternion.coerce(p)
    base = p.as_array()
    cols = []
    for m in range(4):
        e = np.zeros(4)
        e[m] = h
        fp = qp_eval(f, Quaternion.from_seq(base + e)).as_array()
        fm = qp_eval(f, Quaternion.from_seq(base - e)).as_array()
        cols.append((fp - fm) / (2 * h))
    return Jacobian4(np.column_stack(cols), p)


def power_closed_form_at_i(k: int, s: float = 1.0) -> np.ndarray:
    """Closed form of ``J(t^k)(i s)``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if s == 0:
        raise ValueError("s must be nonzero")
    n = (k + 1) // 2
    sign = (-1) ** (n + 1)
    m = np.zeros((4, 4))
    if k % 2:
        m[0, 0] = m[1, 1] = sign * k
        m[2, 2] = m[3, 3] = sign
    else:
        m[0, 1] = -sign * k
        m[1, 0] = sign * k
    return s ** (k - 1) * m


def structural_at_i(f: QPolynomial) -> tuple[Quaternion, Quaternion, np.ndarray]:
    """Split ``J(f)(i)`` as ``to_matrix(B_e) + to_matrix(B_o) A``.

    ``B_e`` and ``B_o`` are alternating sums of the even and odd coefficients
    of the quotient ``g`` in ``f = g (t - i) + f(i)``.
    """
    if f.degree < 1:
        raise DegreeZero("need deg f >= 1")
    g, _ = qp_div_linear(f, I)
    be = Quaternion()
    bo = Quaternion()
    for k, b in enumerate(g.coeffs):
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2 == 0:
            be = be + b * sign
        else:
            bo = bo + b * sign
    mat = to_matrix(be) + to_matrix(bo) @ COMPLEX_STRUCTURE
    return be, bo, mat


def det_I_plus_CA_closed(c: Quaternion) -> float:
    a, b, cc, d = c.as_tuple()
    b2 = b * b
    lin = -2 + 2 * a * a + 2 * cc * cc + 2 * d * d
    const = (1 - 2 * cc * cc - 2 * d * d + 2 * a * a + 2 * cc * cc * a * a + 2 * d * d * a * a
             + a ** 4 + d ** 4 + cc ** 4 + 2 * d * d * cc * cc)
    return b2 * b2 + lin * b2 + const


def det_I_plus_CA(c) -> tuple[float, float]:
    """``(direct, closed_form)`` values of ``det(I + to_matrix(c) A)``."""
    c = Quaternion.coerce(c)
    direct = float(det4(np.eye(4) + to_matrix(c) @ COMPLEX_STRUCTURE))
    return direct, det_I_plus_CA_closed(c)


# -- Cauchy-Riemann structure -------------------------------------------------

def _max_dev(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def cr_check_real(f: QPolynomial, t0: float, tol: float = config.EPS_CR) -> CheckReport:
    """CR structure at a real point, where ``J(f)(t0)`` is left multiplication by ``g(t0)``.

    Asserted: ``J == to_matrix(g(t0))`` and the CR equalities
    ``f1_x = f2_y``, ``f1_y = -f2_x``, ``f3_z = f4_w = f1_x``. The reduced form
    that keeps only the ``1, i`` part of ``g(t0)`` is reported without being
    asserted; it holds only when ``g(t0)`` is real.
    """
    t0 = float(t0)
    point = Quaternion(t0, 0.0, 0.0, 0.0)
    jac = jacobian_at(f, point)
    m = jac.matrix
    scale = jac.entry_scale()
    report = CheckReport("cr_real", point=point)
    if f.degree < 1:
        report.add(CheckResult("left-multiplication form", point, _max_dev(m, 0), tol * scale))
        return report
    g, _ = qp_div_linear(f, point)
    gv = qp_eval(g, point)
    report.add(CheckResult("left-multiplication form", point,
                           _max_dev(m, to_matrix(gv)), tol * scale))
    eqs = [m[0, 0] - m[1, 1], m[0, 1] + m[1, 0], m[2, 2] - m[0, 0], m[3, 3] - m[0, 0]]
    report.add(CheckResult("real-point CR equalities", point,
                           float(np.max(np.abs(eqs))), tol * scale))
    g1, g2 = gv.w, gv.x
    reduced = np.array([[g1, -g2, 0, 0], [g2, g1, 0, 0], [0, 0, g1, 0], [0, 0, 0, g1]])
    report.add(CheckResult("reduced diagonal form", point, _max_dev(m, reduced),
                           tol * scale, asserted=False))
    return report


@dataclass
class StructBlocks:
    """Parameters of the block form of ``J(f)(r + is)``.

    Rows are ``[a1, -b1, -a2, b2]``, ``[b1, a1, b2, a2]``, ``[a3, -b3, a4, -b4]``,
    ``[-b3, -a3, b4, a4]``.
    """

    alpha: tuple[float, float, float, float]
    beta: tuple[float, float, float, float]
    rotation: np.ndarray = field(default_factory=lambda: np.eye(4))
    residual: float = 0.0
    jacobian: np.ndarray | None = None

    def matrix(self) -> np.ndarray:
        return blocks_matrix(self.alpha, self.beta)

    @property
    def complex_det(self) -> float:
        """Determinant of the upper-left complex derivative block."""
        return self.alpha[0] ** 2 + self.beta[0] ** 2

    def as_dict(self) -> dict:
        return {
            "alpha": list(map(float, self.alpha)),
            "beta": list(map(float, self.beta)),
            "residual": self.residual,
        }


def blocks_matrix(alpha, beta) -> np.ndarray:
    a1, a2, a3, a4 = alpha
    b1, b2, b3, b4 = beta
    return np.array([
        [a1, -b1, -a2, b2],
        [b1, a1, b2, a2],
        [a3, -b3, a4, -b4],
        [-b3, -a3, b4, a4],
    ], dtype=float)


def fit_blocks(m: np.ndarray) -> StructBlocks:
    """Least-squares fit of the eight block parameters (pairwise averages)."""
    a1 = 0.5 * (m[0, 0] + m[1, 1])
    b1 = 0.5 * (m[1, 0] - m[0, 1])
    a2 = 0.5 * (m[1, 3] - m[0, 2])
    b2 = 0.5 * (m[0, 3] + m[1, 2])
    a3 = 0.5 * (m[2, 0] - m[3, 1])
    b3 = -0.5 * (m[2, 1] + m[3, 0])
    a4 = 0.5 * (m[2, 2] + m[3, 3])
    b4 = 0.5 * (m[3, 2] - m[2, 3])
    alpha = (float(a1), float(a2), float(a3), float(a4))
    beta = (float(b1), float(b2), float(b3), float(b4))
    resid = _max_dev(m, blocks_matrix(alpha, beta))
    return StructBlocks(alpha, beta, residual=resid, jacobian=np.array(m))


def _is_complex_poly(f: QPolynomial) -> bool:
    return all(c.y == 0 and c.z == 0 for c in f.coeffs)


def cr_check_complex(f: QPolynomial, t0, tol: float = config.EPS_CR) -> StructBlocks:
    """Fit and verify the block pattern of ``J(f)`` at ``t0 = r + is``, ``s != 0``.

    For ``f`` with coefficients in ``span(1, i)`` the off-diagonal blocks must
    vanish and ``det J = (a1^2 + b1^2)(a4^2 + b4^2)``.
    """
    t0 = Quaternion.coerce(t0)
    if t0.y != 0 or t0.z != 0:
        raise ValueError(f"{t0} is not on the complex axis")
    if t0.x == 0:
        raise ZeroImaginaryPart(f"{t0} is real")
    jac = jacobian_at(f, t0)
    blocks = fit_blocks(jac.matrix)
    scale = jac.entry_scale()
    m = jac.matrix
    offenders = []
    if blocks.residual > tol * scale:
        fitted = blocks.matrix()
        offenders = [(r, s, float(m[r, s]), float(fitted[r, s]))
                     for r in range(4) for s in range(4)
                     if abs(m[r, s] - fitted[r, s]) > tol * scale]
        raise PatternViolation(f"block pattern broken at {t0}: residual {blocks.residual:.3e}",
                               offenders)
    if _is_complex_poly(f):
        off = max(abs(blocks.alpha[1]), abs(blocks.beta[1]),
                  abs(blocks.alpha[2]), abs(blocks.beta[2]))
        if off > tol * scale:
            raise PatternViolation(f"off-diagonal blocks of a complex polynomial are {off:.3e}",
                                   [("offdiag", off)])
        product = blocks.complex_det * (blocks.alpha[3] ** 2 + blocks.beta[3] ** 2)
        if abs(jac.det - product) > tol * jac.scale:
            raise PatternViolation("det J differs from |J_C| (gamma^2 + delta^2)",
                                   [("det", jac.det, product)])
    return blocks


def cr_check_general(f: QPolynomial, t0, tol: float = 1e-8) -> CheckReport:
    """Rotate ``t0`` onto the complex axis and verify the transported Jacobian.

    With ``gamma t0 gamma* = r + is`` and ``phi = gamma f gamma*`` one has
    ``A J(f)(t0) A^T = J(phi)(r + is)`` for the rotation ``A`` of ``gamma``;
    ``J(phi)(r + is)`` then carries the complex-point block pattern. The
    one-sided product ``J(f)(t0) = J(f)(r + is) A`` is only reported.
    """
    t0 = Quaternion.coerce(t0)
    gamma, s = find_gamma(t0)
    rot = rotation_matrix(gamma)
    phi = qp_conjugated(f, gamma)
    target = Quaternion(t0.w, s, 0.0, 0.0)
    j0 = jacobian_at(f, t0)
    j1 = jacobian_at(phi, target)
    scale = max(j0.entry_scale(), j1.entry_scale())
    report = CheckReport("cr_general", point=t0)
    report.extra["gamma"] = gamma
    report.add(CheckResult("conjugation transport", t0,
                           _max_dev(rot @ j0.matrix @ rot.T, j1.matrix), tol * scale))
    blocks = fit_blocks(j1.matrix)
    report.add(CheckResult("block pattern at rotated point", target, blocks.residual,
                           config.EPS_CR * scale))
    j_f_target = jacobian_at(f, target).matrix
    report.add(CheckResult("one-sided rotation product", t0,
                           _max_dev(j0.matrix, j_f_target @ rot), tol * scale, asserted=False))
    report.extra["blocks"] = blocks.as_dict()
    return report


# -- symbolic identities for t^n ---------------------------------------------

def det_mpoly(m) -> MPoly4:
    """Determinant of a 4x4 matrix of MPoly4 via 2x2 minors of the row pairs."""
    top = {}
    bottom = {}
    for i in range(4):
        for j in range(i + 1, 4):
            top[i, j] = m[0][i] * m[1][j] - m[0][j] * m[1][i]
            bottom[i, j] = m[2][i] * m[3][j] - m[2][j] * m[3][i]
    return (top[0, 1] * bottom[2, 3] - top[0, 2] * bottom[1, 3] + top[0, 3] * bottom[1, 2]
            + top[1, 2] * bottom[0, 3] - top[1, 3] * bottom[0, 2] + top[2, 3] * bottom[0, 1])


@lru_cache(maxsize=None)
def power_det(n: int) -> MPoly4:
    """``|J(t^n)|`` as an exact polynomial."""
    return det_mpoly(power_partials(n))


def power_identity_checks(n: int) -> CheckReport:
    """Exact polynomial identities satisfied by the components of ``t^n``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    u, v, p, q = generic_power(n)
    report = CheckReport(f"power_identities[n={n}]")

    def zero(name, poly):
        size = max((abs(c) for c in poly.terms.values()), default=0)
        report.add(CheckResult(name, None, float(size), 0.0))

    zero("y*f3 - z*f2", Y * p - Z * v)
    zero("y*f4 - w*f2", Y * q - W * v)
    det_n = power_det(n)
    ux, vx = u.partial(0), v.partial(0)
    zero("y^3 det - n v^2 (v u_x - u v_x)", Y ** 3 * det_n - v * v * (v * ux - u * vx) * n)

    big_u, big_v, _, _ = generic_power(n + 1)
    r2 = X * X + Y * Y + Z * Z + W * W
    s2 = Y * Y + Z * Z + W * W
    zero("y U - (x y u - v (y^2+z^2+w^2))", Y * big_u - (X * Y * u - v * s2))
    zero("V - (y u + x v)", big_v - (Y * u + X * v))
    rhs = big_v * big_v * (Y * r2 * (v * ux - u * vx) + Y * Y * u * u + v * v * s2) * (n + 1)
    zero("y^4 det(n+1) - (n+1) V^2 [...]", Y ** 4 * power_det(n + 1) - rhs)
    if n == 1:
        zero("det J(t) - 1", det_n - 1)
    if n == 2:
        zero("det J(t^2) - 16 x^2 |t|^2", det_n - X * X * r2 * 16)
    return report


# -- Monte-Carlo non-negativity scan -----------------------------------------

def _ball(rng: np.random.Generator, shape, radius: float) -> np.ndarray:
    g = rng.standard_normal((*shape, 4))
    g /= np.linalg.norm(g, axis=-1, keepdims=True)
    r = radius * rng.random(shape) ** 0.25
    return g * r[..., None]


@dataclass
class ScanReport:
    n_samples: int
    seed: int
    min_normalized_det: float
    worst_index: int
    worst_coeffs: list
    worst_point: list
    n_below: int
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.n_below == 0

    def as_dict(self) -> dict:
        return {
            "check": "nonnegative_jacobian_determinant",
            "samples": self.n_samples,
            "seed": self.seed,
            "min_normalized_det": self.min_normalized_det,
            "worst_index": self.worst_index,
            "worst_coeffs": self.worst_coeffs,
            "worst_point": self.worst_point,
            "below_tolerance": self.n_below,
            "tolerance": self.tolerance,
            "pass": self.passed,
        }


def nonnegativity_scan(n_samples: int = 100_000, seed: int = 0, *, max_degree: int = 8,
                       coef_radius: float = 2.0, point_radius: float = 3.0,
                       f: QPolynomial | None = None, tol: float = config.EPS_NONNEG,
                       chunk: int = 10_000) -> ScanReport:
    """Sample ``(f, p)`` and record the smallest ``det J / max(1, ||J||^4)``.

    With ``f`` given only points are sampled. Samples are drawn chunk by chunk
    from one generator, so the result depends only on the arguments.
    """
    rng = np.random.default_rng(seed)
    best = math.inf
    best_idx = -1
    best_c = None
    best_p = None
    below = 0
    done = 0
    while done < n_samples:
        m = min(chunk, n_samples - done)
        if f is None:
            deg = rng.integers(1, max_degree + 1, size=m)
            coeffs = _ball(rng, (m, max_degree + 1), coef_radius)
            mask = np.arange(max_degree + 1)[None, :] <= deg[:, None]
            coeffs = np.where(mask[..., None], coeffs, 0.0)
        else:
            base = np.array([c.as_tuple() for c in f.coeffs], dtype=float)
            coeffs = np.broadcast_to(base, (m, *base.shape))
        points = _ball(rng, (m,), point_radius)
        jac = jacobian_batch(coeffs, points)
        nd = det4(jac) / det_scale(jac)
        below += int(np.count_nonzero(nd < -tol))
        k = int(np.argmin(nd))
        if nd[k] < best:
            best = float(nd[k])
            best_idx = done + k
            best_c = coeffs[k].tolist()
            best_p = points[k].tolist()
        done += m
    return ScanReport(n_samples, seed, best, best_idx, best_c, best_p, below, tol)


# names used by the build contract
lemma31_checks = power_identity_checks
eq4_matrices = power_closed_form_at_i

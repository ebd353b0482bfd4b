"""Roots of left quaternion polynomials via the norm polynomial.

Every root ``c`` of ``f`` is similar to a complex root ``alpha + i beta`` of
the real polynomial ``f* f``. For each conjugate pair, ``f`` is reduced
modulo ``q = t^2 - 2 alpha t + alpha^2 + beta^2``: writing
``f = h q + A t + B`` and using ``q(c) = 0`` for every ``c`` in the class
gives ``f(c) = A c + B``. So the class is a sphere of roots when
``A = B = 0`` and otherwise contains the single root ``c = -A^{-1} B``.
Real roots of ``f* f`` have even multiplicity and are checked by direct
evaluation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from . import config
from .errors import DegreeZero, NotARoot, NotPrimitive, RootExtractionInconsistency
from .jacobian import jacobian_at
from .qpoly import QPolynomial, qp_div_real_quadratic, qp_eval, qp_is_primitive
from .quaternion import Quaternion, char_poly, inv, mul, norm
from .realpoly import RPoly, complex_roots, rpoly_divmod
from .report import CheckReport, CheckResult


class RootKind(str, enum.Enum):
    ISOLATED = "isolated"
    SPHERICAL = "spherical"


@dataclass(frozen=True)
class RootRecord:
    value: Quaternion
    kind: RootKind
    multiplicity: int
    qc: RPoly
    local_degree: int | None = None
    residual: float = 0.0
    norm_multiplicity: int = 0  # multiplicity of value's class as a root of f* f

    @property
    def doubled_multiplicity(self) -> int:
        """Twice the norm-polynomial multiplicity, the alternative count for a sphere."""
        return 2 * self.norm_multiplicity

    def as_dict(self, verbose: bool = False) -> dict:
        d = {
            "value": [float(v) for v in self.value.as_tuple()],
            "kind": self.kind.value,
            "multiplicity": self.multiplicity,
            "local_degree": self.local_degree,
            "residual": self.residual,
        }
        if verbose:
            d["char_poly"] = list(self.qc.coeffs)
            d["norm_multiplicity"] = self.norm_multiplicity
            if self.kind is RootKind.SPHERICAL:
                d["doubled_multiplicity"] = self.doubled_multiplicity
        return d


def root_residual(f: QPolynomial, c: Quaternion) -> float:
    """``|f(c)|`` relative to ``1 + sum |a_k| |c|^k``."""
    return norm(qp_eval(f, c)) / (1.0 + f.eval_scale(c))


def _criterion_multiplicity(nf: RPoly, q: RPoly, tol: float) -> int:
    k = 0
    cur = nf
    while cur.degree >= q.degree:
        quot, rem = rpoly_divmod(cur, q)
        if rem.max_abs() > tol * cur.max_abs():
            break
        k += 1
        cur = quot
    return k


def multiplicity(f: QPolynomial, c, *, tol: float = config.EPS_ROOT) -> int:
    """Largest ``k`` such that ``q_c^k`` divides ``f* f``.

    For a real ``c`` the characteristic polynomial is ``(t - c)^2``.
    """
    c = Quaternion.coerce(c)
    if root_residual(f, c) > tol:
        raise NotARoot(f"{c} is not a root (residual {root_residual(f, c):.3e})")
    return _criterion_multiplicity(f.norm_poly(), char_poly(c), tol)


def find_roots(f: QPolynomial, *, tol: float = config.EPS_ROOT,
               real_tol: float = 1e-7) -> list[RootRecord]:
    """One record per similarity class containing a root, ordered by ``(alpha, beta)``."""
    if f.degree < 1:
        raise DegreeZero("constant polynomial has no roots")
    nf = f.norm_poly()
    records = []
    for z, m in complex_roots(nf):
        if z.imag < 0:
            continue
        alpha, beta = z.real, z.imag
        if beta <= real_tol * (1.0 + abs(z)):
            c = Quaternion(alpha, 0.0, 0.0, 0.0)
            res = root_residual(f, c)
            if res > tol:
                raise RootExtractionInconsistency(
                    f"real root {alpha!r} of the norm polynomial does not annihilate f",
                    {"alpha": alpha, "residual": res})
            q = char_poly(c)
            k = _attached_multiplicity(nf, q, m // 2, tol)
            records.append(RootRecord(c, RootKind.ISOLATED, k, q, residual=res,
                                      norm_multiplicity=m))
            continue
        q = RPoly([alpha * alpha + beta * beta, -2.0 * alpha, 1.0])
        k = _attached_multiplicity(nf, q, m, tol)
        _, a_lin, b_const = qp_div_real_quadratic(f, q)
        scale = f.eval_scale(Quaternion(alpha, beta, 0.0, 0.0)) + 1.0
        if norm(a_lin) <= tol * scale:
            if norm(b_const) > tol * scale:
                raise RootExtractionInconsistency(
                    "vanishing linear remainder with nonzero constant remainder",
                    {"alpha": alpha, "beta": beta, "A": a_lin.as_tuple(), "B": b_const.as_tuple()})
            rep = Quaternion(alpha, beta, 0.0, 0.0)
            records.append(RootRecord(rep, RootKind.SPHERICAL, k, q,
                                      residual=root_residual(f, rep), norm_multiplicity=m))
            continue
        c = -mul(inv(a_lin), b_const)
        records.append(RootRecord(c, RootKind.ISOLATED, k, char_poly(c),
                                  residual=root_residual(f, c), norm_multiplicity=m))
    if records and all(r.kind is RootKind.ISOLATED for r in records) and qp_is_primitive(f):
        records = [replace(r, local_degree=r.multiplicity) for r in records]
    return records


def _attached_multiplicity(nf: RPoly, q: RPoly, expected: int, tol: float) -> int:
    k = _criterion_multiplicity(nf, q, tol)
    if k != expected:
        raise RootExtractionInconsistency(
            f"divisibility count {k} disagrees with root clustering count {expected}",
            {"q": list(q.coeffs), "divisibility": k, "clustering": expected})
    return k


def has_spherical_root(f: QPolynomial, tol: float = 1e-8) -> bool:
    """Whether some similarity sphere consists of roots.

    Decided by the component gcd; a conjugate pair ``alpha +- i beta``
    that both annihilate ``f`` is searched for as a cross-check and any
    disagreement raises.
    """
    by_gcd = not qp_is_primitive(f)
    by_pair = False
    for z, _ in complex_roots(f.norm_poly()):
        if z.imag <= 1e-7 * (1 + abs(z)):
            continue
        up = Quaternion(z.real, z.imag, 0.0, 0.0)
        down = Quaternion(z.real, -z.imag, 0.0, 0.0)
        if root_residual(f, up) <= tol and root_residual(f, down) <= tol:
            by_pair = True
            break
    if by_pair != by_gcd:
        raise RootExtractionInconsistency("primitivity and conjugate-pair tests disagree",
                                          {"gcd": by_gcd, "pair": by_pair})
    return by_gcd


def local_degrees(f: QPolynomial) -> dict[RootRecord, int]:
    """Local degree of each root of a primitive ``f``; they sum to ``deg f``."""
    if not qp_is_primitive(f):
        raise NotPrimitive("local degrees are defined here only for primitive f")
    out = {}
    for rec in find_roots(f):
        if rec.kind is not RootKind.ISOLATED:
            raise NotPrimitive("primitive polynomial produced a spherical class")
        out[rec] = rec.multiplicity
    return out


def simple_root_det_link(f: QPolynomial, *, pos_tol: float = config.EPS_POS,
                         det_tol: float = config.EPS_DET) -> CheckReport:
    """Simple roots have ``det J > 0``; at multiple roots the determinant vanishes."""
    report = CheckReport("simple_root_det_link")
    for rec in find_roots(f):
        if rec.kind is not RootKind.ISOLATED:
            continue
        jac = jacobian_at(f, rec.value)
        det, scale = jac.det, jac.scale
        if rec.multiplicity == 1:
            # residual = how far det falls short of the positivity threshold
            report.add(CheckResult(f"simple root det > {pos_tol:g} scale", rec.value,
                                   max(0.0, pos_tol * scale - det), 0.0))
        else:
            report.add(CheckResult(f"multiple root (m={rec.multiplicity}) |det| small", rec.value,
                                   abs(det), det_tol * scale))
        report.results[-1].detail = {"det": det, "scale": scale}
    return report


def sphere_points(rec: RootRecord, n: int, rng: np.random.Generator) -> list[Quaternion]:
    """Random members ``alpha + beta u`` of a spherical class (``u`` an imaginary unit)."""
    alpha, beta = rec.value.w, rec.value.x
    out = []
    for _ in range(n):
        u = rng.standard_normal(3)
        u /= np.linalg.norm(u)
        out.append(Quaternion(alpha, *(beta * u)))
    return out

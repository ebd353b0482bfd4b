"""Real univariate polynomials and sparse real polynomials in ``(x, y, z, w)``."""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping

import numpy as np

from . import config
from .errors import BothZero, DegreeZero, NonConvergence, ZeroPolynomial


def _snap(coeffs: list, tol: float) -> list:
    if not coeffs:
        return coeffs
    big = max(abs(c) for c in coeffs)
    if big == 0:
        return []
    cut = tol * big
    out = [c if abs(c) > cut else 0 * c for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return out


class RPoly:
    """Univariate real polynomial, coefficients in ascending degree.

    Coefficients smaller than ``EPS_COEF`` times the largest one are snapped
    to zero on construction, so the leading coefficient is always nonzero
    (the zero polynomial has no coefficients at all).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = (), *, snap: float = config.EPS_COEF):
        self.coeffs = tuple(_snap(list(coeffs), snap))

    @classmethod
    def monomial(cls, degree: int, coef=1.0) -> RPoly:
        return cls([0.0] * degree + [coef])

    @classmethod
    def from_roots(cls, roots) -> RPoly:
        """Real polynomial with the given roots; complex roots should come in conjugate pairs."""
        c = np.polynomial.polynomial.polyfromroots(list(roots))
        return cls(np.real_if_close(c, tol=1e6).real.tolist())

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0.0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0.0

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = RPoly([other])
        if not isinstance(other, RPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"RPoly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                parts.append(("+" if c > 0 else "-") + mono)
            else:
                parts.append(f"{c:+g}{mono}")
        return "".join(parts).lstrip("+")

    def __call__(self, t):
        acc = 0.0 * t
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __neg__(self):
        return RPoly([-c for c in self.coeffs])

    def __add__(self, other):
        other = _as_rpoly(other)
        n = max(len(self), len(other))
        return RPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_rpoly(other))

    def __rsub__(self, other):
        return _as_rpoly(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return RPoly([c * other for c in self.coeffs])
        other = _as_rpoly(other)
        if self.is_zero() or other.is_zero():
            return RPoly()
        out = [0.0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = RPoly([1.0])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other):
        return rpoly_divmod(self, _as_rpoly(other))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> RPoly:
        return RPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> RPoly:
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial cannot be made monic")
        lead = self.lead
        return RPoly([c / lead for c in self.coeffs])

    def max_abs(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def allclose(self, other, rtol: float = 1e-10) -> bool:
        other = _as_rpoly(other)
        n = max(len(self), len(other))
        scale = max(self.max_abs(), other.max_abs(), 1e-300)
        return all(abs(self[k] - other[k]) <= rtol * scale for k in range(n))


def _as_rpoly(p) -> RPoly:
    if isinstance(p, RPoly):
        return p
    if isinstance(p, (int, float)):
        return RPoly([p])
    return RPoly(p)


def rpoly_divmod(p: RPoly, q: RPoly) -> tuple[RPoly, RPoly]:
    if q.is_zero():
        raise ZeroPolynomial("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = q.degree
    if p.degree < dq:
        return RPoly(), p
    quot = [0.0] * (p.degree - dq + 1)
    lead = q.lead
    for k in range(p.degree - dq, -1, -1):
        c = rem[k + dq] / lead
        quot[k] = c
        if c == 0:
            continue
        for j, b in enumerate(q.coeffs):
            rem[k + j] -= c * b
        rem[k + dq] = 0.0
    # Snap the remainder against the dividend's scale, not its own.
    scale = p.max_abs()
    rem = [0.0 if abs(r) <= config.EPS_COEF * scale else r for r in rem[:dq]]
    return RPoly(quot), RPoly(rem, snap=0.0)


def rpoly_gcd(p: RPoly, q: RPoly, tol: float = config.EPS_GCD) -> RPoly:
    """Monic gcd by the Euclidean algorithm, renormalizing each remainder to monic.

    A remainder whose largest coefficient is at most ``tol`` times the
    largest coefficient of the current (monic) dividend counts as zero.
    """
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if q.is_zero():
        return p.monic()
    if p.is_zero():
        return q.monic()
    a, b = p.monic(), q.monic()
    if a.degree < b.degree:
        a, b = b, a
    while True:
        if b.degree == 0:
            return RPoly([1.0])
        _, r = rpoly_divmod(a, b)
        if r.is_zero() or r.max_abs() <= tol * max(a.max_abs(), b.max_abs()):
            return b
        a, b = b, r.monic()


def squarefree_decomposition(p: RPoly, tol: float = config.EPS_GCD) -> list[tuple[RPoly, int]]:
    """Yun's algorithm: monic ``s_i`` with ``p = lead * prod s_i^i``; trivial factors dropped."""
    if p.degree < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    a = rpoly_gcd(p, dp, tol)
    b = p // a
    c = dp // a
    d = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = rpoly_gcd(b, d, tol) if not d.is_zero() else b.monic()
        b_next = b // a
        if a.degree > 0:
            out.append((a.monic(), i))
        c = d // a
        b = b_next
        d = c - b.derivative()
        i += 1
        if i > p.degree + 1:
            break
    return out


def _quadratic_roots(c0: float, c1: float, c2: float) -> list[complex]:
    disc = c1 * c1 - 4.0 * c2 * c0
    if disc >= 0:
        sq = math.sqrt(disc)
        if c1 >= 0:
            r1 = (-c1 - sq) / (2 * c2)
        else:
            r1 = (-c1 + sq) / (2 * c2)
        r2 = c0 / (c2 * r1) if r1 != 0 else -c1 / c2
        return [complex(r1), complex(r2)]
    sq = math.sqrt(-disc)
    re_part = -c1 / (2 * c2)
    im_part = abs(sq / (2 * c2))
    return [complex(re_part, im_part), complex(re_part, -im_part)]


def aberth_roots(p: RPoly, max_iter: int = config.ROOT_MAX_ITER,
                 step_tol: float = config.ROOT_STEP_TOL) -> list[complex]:
    """Simultaneous Aberth-Ehrlich iteration started on the Cauchy-bound circle."""
    n = p.degree
    if n < 1:
        raise DegreeZero("constant polynomial has no roots")
    a = np.array(p.coeffs, dtype=float) / p.lead
    if n == 1:
        return [complex(-a[0])]
    if n == 2:
        return _quadratic_roots(a[0], a[1], 1.0)
    # numpy's polyval wants descending order
    desc = a[::-1]
    ddesc = np.polyder(desc)
    radius = 1.0 + np.max(np.abs(a[:-1]))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    converged = False
    for _ in range(max_iter):
        pv = np.polyval(desc, z)
        dv = np.polyval(ddesc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pv / dv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            recip = 1.0 / diff
            np.fill_diagonal(recip, 0.0)
            corr = ratio / (1.0 - ratio * recip.sum(axis=1))
        corr = np.where(np.isfinite(corr), corr, 0.0)
        corr = np.where(pv == 0, 0.0, corr)
        z = z - corr
        if np.all(np.abs(corr) < step_tol * (1.0 + np.abs(z))):
            converged = True
            break
    if not converged:
        # Accept a stagnated iterate sitting on the rounding floor.
        absc = np.abs(a)
        floor = 1e3 * np.finfo(float).eps * np.polyval(absc[::-1], np.abs(z))
        resid = np.abs(np.polyval(desc, z))
        if np.any(resid > floor):
            raise NonConvergence(f"Aberth iteration did not converge in {max_iter} steps",
                                 float(np.max(resid / np.maximum(floor, 1e-300))))
    return [complex(v) for v in z]


def _symmetrize(roots: list[complex], tol: float = 1e-10) -> list[complex]:
    """Snap near-real roots onto the axis and make complex ones exact conjugate pairs."""
    real = []
    upper = []
    lower = []
    for r in roots:
        if abs(r.imag) <= tol * (1.0 + abs(r)):
            real.append(complex(r.real, 0.0))
        elif r.imag > 0:
            upper.append(r)
        else:
            lower.append(r)
    out = list(real)
    if len(upper) != len(lower):
        return sorted(roots, key=lambda r: (r.real, r.imag))
    remaining = list(lower)
    for u in upper:
        best = min(range(len(remaining)), key=lambda m: abs(remaining[m].conjugate() - u))
        lo = remaining.pop(best)
        avg = 0.5 * (u + lo.conjugate())
        out.extend([avg, avg.conjugate()])
    return out


def _cluster(pairs: list[tuple[complex, int]], radius: float) -> list[tuple[complex, int]]:
    out: list[tuple[complex, int]] = []
    for z, m in pairs:
        for k, (c, mc) in enumerate(out):
            if abs(z - c) <= radius * (1.0 + abs(c)):
                out[k] = ((c * mc + z * m) / (mc + m), mc + m)
                break
        else:
            out.append((z, m))
    return out


def _reconstructs(p: RPoly, pairs, rtol: float = 1e-8) -> bool:
    roots = [z for z, m in pairs for _ in range(m)]
    if len(roots) != p.degree:
        return False
    rebuilt = np.polynomial.polynomial.polyfromroots(roots) * p.lead
    target = np.array(p.coeffs)
    scale = max(np.max(np.abs(target)), 1e-300)
    return bool(np.max(np.abs(rebuilt - target)) <= rtol * scale)


def complex_roots(p: RPoly, *, max_iter: int = config.ROOT_MAX_ITER,
                  cluster_radius: float = config.EPS_CLUSTER,
                  gcd_tol: float = config.EPS_GCD) -> list[tuple[complex, int]]:
    """All complex roots of a real polynomial with multiplicities.

    Multiplicities come from a gcd-based square-free split; each square-free
    factor is solved by Aberth iteration. Roots closer than ``cluster_radius``
    are merged. If the split fails to reproduce ``p`` the whole polynomial is
    solved directly and multiplicities are read off the clusters instead.
    Returned sorted by ``(real, imag)``; conjugates are exact mirror images.
    """
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no well-defined roots")
    if p.degree < 1:
        raise DegreeZero("constant polynomial has no roots")
    pairs = []
    for factor, mult in squarefree_decomposition(p, gcd_tol):
        for z in _symmetrize(aberth_roots(factor, max_iter)):
            pairs.append((z, mult))
    pairs = _cluster(pairs, cluster_radius)
    if not _reconstructs(p, pairs):
        raw = _symmetrize(aberth_roots(p, max_iter), tol=cluster_radius)
        pairs = _cluster([(z, 1) for z in raw], cluster_radius)
    pairs = [(complex(z.real + 0.0, z.imag + 0.0), m) for z, m in pairs]
    return sorted(pairs, key=lambda zm: (round(zm[0].real, 12), zm[0].imag))


def upper_roots(p: RPoly, **kwargs) -> list[tuple[complex, int]]:
    """Representatives with ``imag >= 0`` of each conjugate pair (real roots included)."""
    return [(z, m) for z, m in complex_roots(p, **kwargs) if z.imag >= 0]


# -- sparse multivariate polynomials in four variables -----------------------

Exponent = tuple[int, int, int, int]
VARS = ("x", "y", "z", "w")


class MPoly4:
    """Sparse real polynomial in ``x, y, z, w``: exponent tuple -> coefficient.

    Coefficient arithmetic is whatever the stored numbers support, so Python
    ints stay exact integers through products and derivatives.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c) -> MPoly4:
        return cls({(0, 0, 0, 0): c})

    @classmethod
    def var(cls, index: int | str) -> MPoly4:
        if isinstance(index, str):
            index = VARS.index(index)
        e = [0, 0, 0, 0]
        e[index] = 1
        return cls({tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, (int, float)):
            other = MPoly4.const(other)
        if not isinstance(other, MPoly4):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"MPoly4({self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (-sum(e), tuple(-v for v in e))):
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(VARS, e) if k)
            parts.append(f"{self.terms[e]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def __neg__(self):
        return MPoly4({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, MPoly4):
            other = MPoly4.const(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly4(out)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, MPoly4):
            other = MPoly4.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly4):
            if other == 0:
                return MPoly4()
            return MPoly4({e: c * other for e, c in self.terms.items()})
        out: dict = {}
        get = out.get
        for (a0, a1, a2, a3), ca in self.terms.items():
            for (b0, b1, b2, b3), cb in other.terms.items():
                e = (a0 + b0, a1 + b1, a2 + b2, a3 + b3)
                out[e] = get(e, 0) + ca * cb
        return MPoly4(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly4.const(1)
        for _ in range(k):
            out = out * self
        return out

    def partial(self, var: int | str) -> MPoly4:
        if isinstance(var, str):
            var = VARS.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[var]
            if k:
                e2 = list(e)
                e2[var] = k - 1
                out[tuple(e2)] = c * k
        return MPoly4(out)

    def eval(self, point) -> float:
        x, y, z, w = point
        total = 0.0
        for (a, b, c, d), coef in self.terms.items():
            total += coef * x ** a * y ** b * z ** c * w ** d
        return total

    __call__ = eval


def mpoly_add(p: MPoly4, q: MPoly4) -> MPoly4:
    return p + q


def mpoly_mul(p: MPoly4, q: MPoly4) -> MPoly4:
    return p * q


def mpoly_partial(p: MPoly4, var: int | str) -> MPoly4:
    return p.partial(var)


def mpoly_eval(p: MPoly4, point) -> float:
    return p.eval(point)


__all__ = [
    "RPoly", "MPoly4", "rpoly_divmod", "rpoly_gcd", "squarefree_decomposition",
    "aberth_roots", "complex_roots", "upper_roots", "mpoly_add", "mpoly_mul",
    "mpoly_partial", "mpoly_eval",
]

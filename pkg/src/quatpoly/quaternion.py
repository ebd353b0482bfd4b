"""Quaternion arithmetic and the real 4x4 representations built on it."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import config
from .errors import DivisionByZero, NotUnitQuaternion, ZeroImaginaryPart
from .realpoly import RPoly


@dataclass(frozen=True, slots=True)
class Quaternion:
    """``w + i x + j y + k z`` with real components."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    # numpy scalars must defer to our reflected operators
    __array_ufunc__ = None

    @classmethod
    def from_seq(cls, values) -> Quaternion:
        w, x, y, z = (float(v) for v in values)
        return cls(w, x, y, z)

    @classmethod
    def coerce(cls, value) -> Quaternion:
        if isinstance(value, Quaternion):
            return value
        if isinstance(value, complex):
            return cls(value.real, value.imag, 0.0, 0.0)
        if isinstance(value, (int, float, np.integer, np.floating)):
            return cls(value, 0, 0, 0)
        return cls.from_seq(value)

    def __iter__(self):
        yield self.w
        yield self.x
        yield self.y
        yield self.z

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def as_array(self) -> np.ndarray:
        return np.array(self.as_tuple(), dtype=float)

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, float)):
                return Quaternion(self.w + other, self.x, self.y, self.z)
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            if isinstance(other, (int, float)):
                return Quaternion(self.w - other, self.x, self.y, self.z)
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            if other == 0:
                raise DivisionByZero("division of a quaternion by zero")
            return Quaternion(self.w / other, self.x / other,
                              self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self):
        return norm(self)

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def __str__(self):
        from .textformat import format_quaternion

        return format_quaternion(self)

    def conj(self) -> Quaternion:
        return conj(self)

    def inv(self) -> Quaternion:
        return inv(self)

    @property
    def re(self) -> float:
        return self.w

    @property
    def im(self) -> Quaternion:
        return im(self)

    def is_real(self, tol: float = 0.0) -> bool:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z) <= tol

    def isclose(self, other, tol: float = 1e-12) -> bool:
        """Componentwise closeness, ``tol`` relative to ``1 + |self|``."""
        other = Quaternion.coerce(other)
        return norm(self - other) <= tol * (1.0 + norm(self))


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
BASIS = (ONE, I, J, K)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b``."""
    aw, ax, ay, az = a.w, a.x, a.y, a.z
    bw, bx, by, bz = b.w, b.x, b.y, b.z
    return Quaternion(
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


def conj(c: Quaternion) -> Quaternion:
    return Quaternion(c.w, -c.x, -c.y, -c.z)


def norm2(c: Quaternion) -> float:
    return c.w * c.w + c.x * c.x + c.y * c.y + c.z * c.z


def norm(c: Quaternion) -> float:
    return math.sqrt(norm2(c))


def inv(c: Quaternion) -> Quaternion:
    n2 = norm2(c)
    if n2 == 0:
        raise DivisionByZero("zero quaternion has no inverse")
    return Quaternion(c.w / n2, -c.x / n2, -c.y / n2, -c.z / n2)


def re(c: Quaternion) -> float:
    return c.w


def im(c: Quaternion) -> Quaternion:
    return Quaternion(0.0, c.x, c.y, c.z)


def imag_norm(c: Quaternion) -> float:
    return math.sqrt(c.x * c.x + c.y * c.y + c.z * c.z)


def to_matrix(c: Quaternion) -> np.ndarray:
    """Left-multiplication matrix: ``to_matrix(c) @ v`` is the coordinate vector of ``c * v``."""
    c0, c1, c2, c3 = c.w, c.x, c.y, c.z
    return np.array([
        [c0, -c1, -c2, -c3],
        [c1, c0, -c3, c2],
        [c2, c3, c0, -c1],
        [c3, -c2, c1, c0],
    ], dtype=float)


def right_matrix(c: Quaternion) -> np.ndarray:
    """Right-multiplication matrix: ``right_matrix(c) @ v`` is the coordinates of ``v * c``."""
    c0, c1, c2, c3 = c.w, c.x, c.y, c.z
    return np.array([
        [c0, -c1, -c2, -c3],
        [c1, c0, c3, -c2],
        [c2, -c3, c0, c1],
        [c3, c2, -c1, c0],
    ], dtype=float)


def left_matrices(coeffs: np.ndarray) -> np.ndarray:
    """Vectorised :func:`to_matrix` over a trailing axis of length 4."""
    c0, c1, c2, c3 = (coeffs[..., m] for m in range(4))
    rows = [
        [c0, -c1, -c2, -c3],
        [c1, c0, -c3, c2],
        [c2, c3, c0, -c1],
        [c3, -c2, c1, c0],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def char_poly(c: Quaternion) -> RPoly:
    """Monic quadratic ``t^2 - 2 Re(c) t + |c|^2`` annihilating ``c``."""
    return RPoly([norm2(c), -2.0 * c.w + 0.0, 1.0])


def is_similar(a: Quaternion, b: Quaternion, tol: float = config.EPS_SIM) -> bool:
    """Whether ``a eta = eta b`` for some nonzero ``eta``; tested via real part and norm."""
    scale = 1.0 + max(norm(a), norm(b))
    return abs(a.w - b.w) <= tol * scale and abs(norm(a) - norm(b)) <= tol * scale


def find_gamma(t0: Quaternion) -> tuple[Quaternion, float]:
    """Unit ``gamma`` with ``gamma t0 gamma* = Re(t0) + i s``, ``s = |Im(t0)|``."""
    s = imag_norm(t0)
    if s == 0:
        raise ZeroImaginaryPart(f"{t0} is real; no rotation onto the complex axis is needed")
    u1, u2, u3 = t0.x / s, t0.y / s, t0.z / s
    if u2 == 0 and u3 == 0 and u1 < 0:
        return J, s
    # gamma is 1 - iu normalized; near u = -i the real part 1 + u1 is taken
    # from (u2^2 + u3^2) / (1 - u1) to avoid cancellation
    w = 1.0 + u1 if u1 >= 0 else (u2 * u2 + u3 * u3) / (1.0 - u1)
    g = Quaternion(w, 0.0, u3, -u2)
    g = g / max(abs(w), abs(u2), abs(u3))  # rescale first so the norm cannot underflow
    return g / norm(g), s


def rotate(c: Quaternion, t: Quaternion) -> Quaternion:
    """``c t c*``."""
    return mul(mul(c, t), conj(c))


def rotation_matrix(c: Quaternion, tol: float = config.EPS_UNIT) -> np.ndarray:
    """Orthogonal matrix of ``t -> c t c*`` for unit ``c``."""
    if abs(norm(c) - 1.0) > tol:
        raise NotUnitQuaternion(f"|c| = {norm(c)!r} is not 1")
    cols = [rotate(c, e).as_array() for e in BASIS]
    return np.column_stack(cols)

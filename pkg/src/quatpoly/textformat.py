"""Text and JSON formats for quaternions and polynomials.

Quaternion literals look like ``1-2i+0.5k``: signed terms in any order, an
optional decimal scalar, an optional unit ``i``/``j``/``k``. Polynomials are
written highest degree first as ``(q_n)t^n+...+(q_1)t+(q_0)``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import ParseError
from .qpoly import QPolynomial
from .quaternion import Quaternion

_NUMBER = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_TERM = re.compile(rf"\s*([+-]?)\s*({_NUMBER})?\s*\*?\s*([ijk]?)\s*")
_UNITS = {"": 0, "i": 1, "j": 2, "k": 3}


def parse_quaternion(text: str, offset: int = 0) -> Quaternion:
    comps = [0.0, 0.0, 0.0, 0.0]
    pos = 0
    seen = False
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty quaternion literal", text, offset)
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) == ""):
            raise ParseError("expected a term like 2, -i or 0.5k", text, offset + pos)
        if seen and m.group(1) == "":
            raise ParseError("terms must be separated by + or -", text, offset + pos)
        sign = -1.0 if m.group(1) == "-" else 1.0
        value = float(m.group(2)) if m.group(2) is not None else 1.0
        comps[_UNITS[m.group(3)]] += sign * value
        seen = True
        pos = m.end()
    return Quaternion(*comps)


def _fmt_scalar(v: float) -> str:
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def format_quaternion(q: Quaternion) -> str:
    """Canonical ``a+bi+cj+dk`` form; zero terms and unit coefficients elided."""
    parts = []
    for v, unit in zip(q.as_tuple(), ("", "i", "j", "k")):
        if v == 0:
            continue
        if unit and abs(v) == 1:
            body = unit
        else:
            body = _fmt_scalar(abs(v)) + unit
        parts.append(("-" if v < 0 else "+") + body)
    if not parts:
        return "0"
    s = "".join(parts)
    return s[1:] if s[0] == "+" else s


def format_polynomial(f: QPolynomial) -> str:
    if f.is_zero():
        return "(0)"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if not c:
            continue
        mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        parts.append(f"({format_quaternion(c)}){mono}")
    return "+".join(parts)


_POLY_TERM = re.compile(r"\s*([+-]?)\s*\(([^()]*)\)\s*(\*?\s*t(?:\s*\^\s*(\d+))?)?\s*")


def parse_polynomial(text: str) -> QPolynomial:
    """Inverse of :func:`format_polynomial`; repeated powers are summed."""
    coeffs: dict[int, Quaternion] = {}
    pos = 0
    if not text.strip():
        raise ParseError("empty polynomial", text, 0)
    first = True
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _POLY_TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError("expected a term like (1+i)t^2", text, pos)
        if not first and m.group(1) == "":
            raise ParseError("terms must be separated by + or -", text, pos)
        q = parse_quaternion(m.group(2), offset=m.start(2))
        if m.group(1) == "-":
            q = -q
        if m.group(3):
            k = int(m.group(4)) if m.group(4) else 1
        else:
            k = 0
        coeffs[k] = coeffs.get(k, Quaternion()) + q
        first = False
        pos = m.end()
    n = max(coeffs)
    return QPolynomial([coeffs.get(k, Quaternion()) for k in range(n + 1)])


def poly_to_json(f: QPolynomial) -> list[list[float]]:
    return [list(map(float, c.as_tuple())) for c in f.coeffs]


def poly_from_json(data) -> QPolynomial:
    if not isinstance(data, list):
        raise ParseError("polynomial JSON must be a list of [re, i, j, k]", str(data)[:40], 0)
    coeffs = []
    for n, entry in enumerate(data):
        if not (isinstance(entry, list) and len(entry) == 4
                and all(isinstance(v, (int, float)) for v in entry)):
            raise ParseError(f"coefficient {n} is not a 4-number list", json.dumps(entry), n)
        coeffs.append(Quaternion.from_seq(entry))
    return QPolynomial(coeffs)


def load_polynomial(path: str | Path) -> QPolynomial:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON ({exc.msg})", str(path), exc.pos) from exc
    return poly_from_json(data)


def quaternion_to_json(q: Quaternion) -> list[float]:
    return [float(v) for v in q.as_tuple()]

"""Check records shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _jsonable(value):
    from .quaternion import Quaternion

    if isinstance(value, Quaternion):
        return [float(v) for v in value.as_tuple()]
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.floating, np.integer)):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    return value


@dataclass
class CheckResult:
    check: str
    point: object
    residual: float
    tolerance: float
    asserted: bool = True
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    def as_dict(self) -> dict:
        d = {
            "check": self.check,
            "point": _jsonable(self.point),
            "residual": float(self.residual),
            "tolerance": float(self.tolerance),
            "pass": self.passed,
        }
        if not self.asserted:
            d["informational"] = True
        if self.detail:
            d["detail"] = _jsonable(self.detail)
        return d

    def line(self) -> str:
        tag = "PASS" if self.passed else ("FAIL" if self.asserted else "info")
        return f"[{tag}] {self.check}: residual {self.residual:.3e} (tol {self.tolerance:.1e})"


@dataclass
class CheckReport:
    name: str
    point: object = None
    results: list[CheckResult] = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def extend(self, other: CheckReport) -> None:
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if r.asserted)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.asserted and not r.passed]

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "point": _jsonable(self.point),
            "pass": self.passed,
            "checks": [r.as_dict() for r in self.results],
            **{k: _jsonable(v) for k, v in self.extra.items()},
        }

    def lines(self) -> list[str]:
        return [f"{self.name}: {'PASS' if self.passed else 'FAIL'}"] + [
            "  " + r.line() for r in self.results]


def jsonable(value):
    return _jsonable(value)

"""Command-line front end.

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import config
from .errors import (NonConvergence, ParseError, PatternViolation, QuatPolyError,
                     RootExtractionInconsistency)
from .jacobian import (COMPLEX_STRUCTURE, cr_check_complex, cr_check_general, cr_check_real,
                       det_I_plus_CA, power_closed_form_at_i, jacobian_at, power_identity_checks,
                       nonnegativity_scan, structural_at_i)
from .qpoly import QPolynomial, qp_div_linear, qp_div_real_quadratic
from .quaternion import I, Quaternion, char_poly
from .report import CheckReport, CheckResult, jsonable
from .roots import find_roots
from .textformat import (format_polynomial, format_quaternion, load_polynomial,
                         parse_polynomial, parse_quaternion, poly_to_json)

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_NONCONV = 0, 1, 2, 3

TOLERANCES = {
    "root": "EPS_ROOT",
    "cr": "EPS_CR",
    "det": "EPS_DET",
    "pos": "EPS_POS",
    "nonneg": "EPS_NONNEG",
}


class _Usage(Exception):
    pass


def _emit(args, payload: dict, text: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(jsonable(payload), sort_keys=True, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(text) + "\n")


def _tol(args, key: str) -> float:
    v = getattr(args, f"tol_{key}", None)
    return float(v) if v is not None else getattr(config, TOLERANCES[key])


def _poly(args, attr: str = "poly") -> QPolynomial:
    text = getattr(args, attr, None)
    if getattr(args, "file", None) and attr == "poly":
        if text is not None:
            raise _Usage("give the polynomial inline or with --file, not both")
        return load_polynomial(args.file)
    if text is None:
        raise _Usage("a polynomial is required (inline or --file)")
    return parse_polynomial(text)


def _point(args) -> Quaternion:
    if args.at is None:
        raise _Usage("--at is required")
    return parse_quaternion(args.at)


def _report_payload(report: CheckReport) -> dict:
    d = report.as_dict()
    d["failures"] = [r.as_dict() for r in report.failures()]
    return d


# -- subcommands --------------------------------------------------------------

def cmd_eval(args) -> int:
    f, p = _poly(args), _point(args)
    v = f(p)
    _emit(args, {"polynomial": poly_to_json(f), "point": p, "value": v}, [format_quaternion(v)])
    return EXIT_OK


def cmd_mul(args) -> int:
    f, g = _poly(args), parse_polynomial(args.other)
    h = f * g
    _emit(args, {"product": poly_to_json(h)}, [format_polynomial(h)])
    return EXIT_OK


def cmd_divide(args) -> int:
    f = _poly(args)
    if (args.at is None) == (args.char is None):
        raise _Usage("divide needs exactly one of --at (linear divisor) or --char")
    if args.at is not None:
        c = parse_quaternion(args.at)
        g, r = qp_div_linear(f, c)
        payload = {"divisor": poly_to_json(QPolynomial.linear(c)), "quotient": poly_to_json(g),
                   "remainder": r}
        text = [f"quotient: {format_polynomial(g)}", f"remainder: {format_quaternion(r)}"]
    else:
        c = parse_quaternion(args.char)
        q = char_poly(c)
        h, a, b = qp_div_real_quadratic(f, q)
        payload = {"divisor": list(q.coeffs), "quotient": poly_to_json(h),
                   "remainder_linear": a, "remainder_constant": b}
        text = [f"divisor: {q}", f"quotient: {format_polynomial(h)}",
                f"remainder: ({format_quaternion(a)})t+({format_quaternion(b)})"]
    _emit(args, payload, text)
    return EXIT_OK


def cmd_roots(args) -> int:
    f = _poly(args)
    records = find_roots(f, tol=_tol(args, "root"))
    rows = [r.as_dict(verbose=args.verbose) for r in records]
    text = []
    for r in records:
        ld = "-" if r.local_degree is None else str(r.local_degree)
        line = (f"{format_quaternion(r.value):<32} {r.kind.value:<10} "
                f"multiplicity {r.multiplicity}  local_degree {ld}  residual {r.residual:.1e}")
        if args.verbose:
            line += f"  q_c {r.qc}  norm_multiplicity {r.norm_multiplicity}"
        text.append(line)
    if not records:
        text.append("no roots")
    _emit(args, {"polynomial": poly_to_json(f), "roots": rows}, text)
    return EXIT_OK


def cmd_jacobian(args) -> int:
    f, p = _poly(args), _point(args)
    jac = jacobian_at(f, p)
    payload = {"point": p, "matrix": jac.matrix, "det": jac.det,
               "normalized_det": jac.normalized_det}
    with np.printoptions(precision=12, suppress=True):
        text = [str(jac.matrix), f"det {jac.det:.12g}  normalized {jac.normalized_det:.3e}"]
    _emit(args, payload, text)
    return EXIT_OK


def cmd_cr(args) -> int:
    f, p = _poly(args), _point(args)
    tol = _tol(args, "cr")
    if p.x == 0 and p.y == 0 and p.z == 0:
        report = cr_check_real(f, p.w, tol)
    elif p.y == 0 and p.z == 0:
        report = CheckReport("cr_complex", point=p)
        try:
            blocks = cr_check_complex(f, p, tol)
        except PatternViolation as exc:
            report.add(CheckResult("block pattern", p, float("inf"), tol,
                                   detail={"entries": exc.entries}))
        else:
            scale = jacobian_at(f, p).entry_scale()
            report.add(CheckResult("block pattern", p, blocks.residual, tol * scale))
            report.extra["blocks"] = blocks.as_dict()
    else:
        report = cr_check_general(f, p)
    _emit(args, _report_payload(report), report.lines())
    return EXIT_OK if report.passed else EXIT_CHECK


def cmd_scan(args) -> int:
    f = _poly(args) if (args.poly is not None or args.file) else None
    rep = nonnegativity_scan(args.samples, args.seed, max_degree=args.max_degree, f=f,
                             tol=_tol(args, "nonneg"))
    d = rep.as_dict()
    text = [f"samples {rep.n_samples}  seed {rep.seed}",
            f"min normalized det {rep.min_normalized_det:.3e} at sample {rep.worst_index}",
            f"below -{rep.tolerance:g}: {rep.n_below}  {'PASS' if rep.passed else 'FAIL'}"]
    if not rep.passed:
        d["failures"] = [{"index": rep.worst_index, "coeffs": rep.worst_coeffs,
                          "point": rep.worst_point, "value": rep.min_normalized_det}]
    _emit(args, d, text)
    return EXIT_OK if rep.passed else EXIT_CHECK


def verify_suite(n_max: int = 8, samples: int = 200, seed: int = 0) -> list[CheckReport]:
    """Identity checks for ``t^n``, the closed forms at ``i`` and the complex structure."""
    reports = [power_identity_checks(n) for n in range(1, n_max + 1)]

    closed = CheckReport("closed forms of J(t^k)(i)")
    for k in range(1, 11):
        m = jacobian_at(QPolynomial.monomial(k), I).matrix
        dev = float(np.max(np.abs(m - power_closed_form_at_i(k))))
        closed.add(CheckResult(f"k={k}", I, dev, 0.0))
    reports.append(closed)

    rng = np.random.default_rng(seed)
    struct = CheckReport("structure at i")
    struct.add(CheckResult("A^2 = -I", None,
                           float(np.max(np.abs(COMPLEX_STRUCTURE @ COMPLEX_STRUCTURE + np.eye(4)))),
                           0.0))
    worst = 0.0
    for _ in range(samples):
        deg = int(rng.integers(1, 9))
        f = QPolynomial(rng.standard_normal((deg + 1, 4)).tolist())
        if f.degree < 1:
            continue
        jac = jacobian_at(f, I)
        worst = max(worst, float(np.max(np.abs(structural_at_i(f)[2] - jac.matrix)))
                    / jac.entry_scale())
    struct.add(CheckResult("J(f)(i) = C(B_e) + C(B_o) A", I, worst, 1e-10))
    worst = 0.0
    for _ in range(samples):
        direct, closed = det_I_plus_CA(Quaternion.from_seq(rng.standard_normal(4)))
        worst = max(worst, abs(direct - closed) / max(1.0, abs(closed)))
    struct.add(CheckResult("det(I + C A) closed form", None, worst, 1e-9))
    reports.append(struct)
    return reports


def cmd_verify(args) -> int:
    reports = verify_suite(args.n_max, seed=args.seed)
    ok = all(r.passed for r in reports)
    payload = {"pass": ok, "reports": [_report_payload(r) for r in reports],
               "failures": [dict(f.as_dict(), report=r.name)
                            for r in reports for f in r.failures()]}
    text = [line for r in reports for line in r.lines()]
    text.append("ALL PASS" if ok else "FAILURES PRESENT")
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_CHECK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--file", help="JSON list of [re, i, j, k] coefficients, ascending degree")
    for key, name in TOLERANCES.items():
        common.add_argument(f"--tol-{key}", type=float, default=None,
                            help=f"override {name} (default {getattr(config, name):g})")

    parser = argparse.ArgumentParser(prog="quatpoly",
                                     description="Quaternion left polynomials: algebra, "
                                                 "Jacobians, CR checks and roots.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, poly="required", at=False):
        p = sub.add_parser(name, parents=[common], help=help_)
        if poly:
            p.add_argument("poly", nargs="?", help='polynomial like "(1)t^2+(i)t+(1)"')
        if at:
            p.add_argument("--at", help="quaternion point like 1-2i+0.5k")
        p.set_defaults(func=func)
        return p

    add("eval", cmd_eval, "evaluate f at a point", at=True)
    p = add("mul", cmd_mul, "product f g")
    p.add_argument("other", help="right factor g")
    p = add("divide", cmd_divide, "divide by t - c or by the characteristic polynomial of c",
            at=True)
    p.add_argument("--char", help="divide by the characteristic quadratic of this quaternion")
    p = add("roots", cmd_roots, "roots with multiplicities and local degrees")
    p.add_argument("--verbose", action="store_true")
    add("jacobian", cmd_jacobian, "Jacobian matrix and determinant", at=True)
    add("cr", cmd_cr, "Cauchy-Riemann structure checks at a point", at=True)
    p = add("scan", cmd_scan, "Monte-Carlo non-negativity of det J")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-degree", type=int, default=8)
    p = add("verify", cmd_verify, "symbolic identity suite", poly=None)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _error(args, code: str, message: str, extra=None) -> None:
    if args is not None and getattr(args, "format", "text") == "json":
        payload = {"pass": False, "error": {"code": code, "message": message}}
        if extra is not None:
            payload["error"]["detail"] = jsonable(extra)
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    else:
        sys.stderr.write(f"error [{code}]: {message}\n")


_VALUE_FLAGS = ("--at", "--char")


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--at -i`` into ``--at=-i`` so argparse does not read ``-i`` as a flag."""
    out = []
    it = iter(argv)
    for a in it:
        if a in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{a}={nxt}")
                continue
            out.append(a)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(a)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except _Usage as exc:
        _error(args, "E_USAGE", str(exc))
        return EXIT_USAGE
    except NonConvergence as exc:
        _error(args, exc.code, str(exc), {"residual": exc.residual})
        return EXIT_NONCONV
    except (PatternViolation, RootExtractionInconsistency) as exc:
        _error(args, exc.code, str(exc), getattr(exc, "entries", None)
               or getattr(exc, "diagnostics", None))
        return EXIT_CHECK
    except ParseError as exc:
        _error(args, exc.code, str(exc), {"position": exc.position})
        return EXIT_USAGE
    except QuatPolyError as exc:
        _error(args, exc.code, str(exc))
        return EXIT_USAGE
    except OSError as exc:
        _error(args, "E_IO", str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

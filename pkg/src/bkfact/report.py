"""Per-root certification reports with deterministic text and JSON forms.

A report runs, for every requested characteristic root: the residual, the
exact-factorizability verdict, the open-box certificate for the difference
a00 - R, and the two cheap sufficient conditions.  Serialization is
canonical (sorted keys, canonical monomial order, rationals as exact
strings), so identical inputs produce byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .certify import (
    Certificate,
    CertifiedInside,
    CertRequest,
    ReducedProblem,
    Unknown,
    Violated,
    certify_open_box,
    lifted_sufficient,
    sample_falsify,
    triangle_sufficient,
)
from .errors import DegreeTooHighError
from .lpdo import LPDO2, CharRoot, characteristic_roots, reduced_coeffs, residual
from .poly import Box, Poly2, Scalar, as_fraction, format_poly


def reduced_problem(op: LPDO2, root: CharRoot) -> ReducedProblem:
    """Collapse a canonical operator with affine coefficients into the six
    free variables of the box problem (b's from a00, s's from a10, a01)."""
    if not op.symbol.is_canonical:
        raise ValueError("reduced problem requires the canonical symbol")
    if op.a10.degree > 1 or op.a01.degree > 1 or op.a00.degree > 1:
        raise DegreeTooHighError("reduced problem needs affine coefficients")
    rc = reduced_coeffs(op.a10, op.a01, int(root.omega))
    return ReducedProblem(
        b1=op.a00.coeff(0, 0), b2=op.a00.coeff(0, 1), b3=op.a00.coeff(1, 0),
        s1=rc.s1, s2=rc.s2, s3=rc.s3)


@dataclass(frozen=True)
class RootReport:
    """Certification outcome for one characteristic root."""

    omega: Fraction
    residual: Poly2
    exact: bool
    certificate: Certificate
    theorem1: Optional[bool]  # None when the lifted condition does not apply
    triangle: bool


@dataclass(frozen=True)
class Report:
    eps: Fraction
    m: Fraction
    n: Fraction
    roots: tuple[RootReport, ...]

    def to_json_dict(self) -> dict:
        return {
            "parameters": {"eps": str(self.eps), "m": str(self.m), "n": str(self.n)},
            "roots": [_root_json(r) for r in self.roots],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    def to_text(self) -> str:
        lines = [f"parameters: eps = {self.eps}, m = {self.m}, n = {self.n}"]
        for r in self.roots:
            theorem1 = "n/a" if r.theorem1 is None else _bool_text(r.theorem1)
            lines.append(
                f"omega = {r.omega}: exact = {_bool_text(r.exact)}, "
                f"certificate = {_certificate_text(r.certificate)}, "
                f"theorem1 = {theorem1}, triangle = {_bool_text(r.triangle)}")
        return "\n".join(lines)


def _bool_text(value: bool) -> str:
    return "true" if value else "false"


def _certificate_text(cert: Certificate) -> str:
    if isinstance(cert, CertifiedInside):
        return f"inside(margin = {cert.margin})"
    if isinstance(cert, Violated):
        return f"violated(witness = ({cert.witness[0]}, {cert.witness[1]}), value = {cert.value})"
    return f"unknown(gap = {cert.gap})"


def certificate_json(cert: Certificate) -> dict:
    if isinstance(cert, CertifiedInside):
        return {"kind": "inside", "margin": str(cert.margin)}
    if isinstance(cert, Violated):
        return {"kind": "violated",
                "witness": [str(cert.witness[0]), str(cert.witness[1])],
                "value": str(cert.value)}
    if isinstance(cert, Unknown):
        return {"kind": "unknown", "gap": str(cert.gap)}
    raise TypeError(f"not a certificate: {cert!r}")


def _root_json(r: RootReport) -> dict:
    return {
        "omega": str(r.omega),
        "residual": format_poly(r.residual),
        "exact": r.exact,
        "certificate": certificate_json(r.certificate),
        "sufficient": {
            "theorem1": "n/a" if r.theorem1 is None else r.theorem1,
            "triangle": r.triangle,
        },
    }


def _theorem1_applicable(op: LPDO2, eps: Fraction, box: Box) -> bool:
    return (op.symbol.is_canonical
            and eps == 1 and box.m == 1 and box.n == 1
            and op.a10.degree <= 1 and op.a01.degree <= 1 and op.a00.degree <= 1)


def approx_factor_report(op: LPDO2, box: Box, eps: Scalar,
                         max_depth: int = 12, grid_k: int = 0,
                         roots: Optional[tuple[CharRoot, ...]] = None) -> Report:
    """Run the full per-root analysis of an operator on a box.

    For each characteristic root (ascending omega unless an explicit subset
    is given): residual, exact verdict, difference certificate, and the
    sufficient-condition verdicts.  The lifted condition is reported only
    for canonical operators with affine coefficients at eps = m = n = 1,
    otherwise as not applicable.  When grid_k >= 2, an Unknown certificate
    is retried with the grid falsifier and upgraded to Violated if a witness
    turns up.
    """
    eps_v = as_fraction(eps)
    if roots is None:
        roots = characteristic_roots(op.symbol)
    theorem1_ok = _theorem1_applicable(op, eps_v, box)
    entries = []
    for root in roots:
        trace = residual(op, root)
        difference = op.a00 - trace.r
        request = CertRequest(d=difference, box=box, eps=eps_v, max_depth=max_depth)
        certificate = certify_open_box(request)
        if isinstance(certificate, Unknown) and grid_k >= 2:
            witness = sample_falsify(request, grid_k)
            if witness is not None:
                # Re-verify by direct evaluation before certifying a violation.
                value = difference.eval(witness.x, witness.y)
                if abs(value) >= eps_v:
                    certificate = Violated(witness=(witness.x, witness.y), value=value)
        theorem1 = lifted_sufficient(reduced_problem(op, root)) if theorem1_ok else None
        entries.append(RootReport(
            omega=root.omega,
            residual=trace.r,
            exact=difference.is_zero,
            certificate=certificate,
            theorem1=theorem1,
            triangle=triangle_sufficient(difference, box, eps_v),
        ))
    return Report(eps=eps_v, m=box.m, n=box.n, roots=tuple(entries))

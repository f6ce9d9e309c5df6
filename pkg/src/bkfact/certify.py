"""Decision procedures and sufficient conditions for bounding a polynomial
on an open box.

The central predicate is "for all (x, y) with |x| < m and |y| < n we have
|D(x, y)| < eps".  Because the region is open, strictness only bites at
points that actually attain an extremum inside: a supremum of exactly eps
that is approached only on the excluded boundary still satisfies the
predicate.  Every procedure here makes that distinction explicitly and
works in exact rational arithmetic, so equality cases are decided, never
approximated.

Three layers are provided:

* closed-form quantifier-free criteria for the instance |a*x^2 + b*x + c| < 4
  on (-1, 1), in the four printed variants (two for a < 0, one for a = 0
  with b != 0, one combined for a <= 0);
* exact decisions: the univariate quadratic on (-m, m) at any eps, and the
  bivariate quadratic on a box via exact extrema with attainment tracking;
* certified numerics for higher degree: Bernstein enclosures with recursive
  subdivision, plus a deterministic grid falsifier.

A certificate is CertifiedInside (with a margin), Violated (with an exact
interior witness), or Unknown (with the residual enclosure gap).  Violated
witnesses are always verified by exact evaluation before they are returned;
enclosures alone never produce a violation.

All functions are pure and all values immutable; subdivision visits
subrectangles in a fixed order, so results are deterministic and the module
is safe for unrestricted concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import ClassVar, Optional, Union

from .errors import DegreeTooHighError, PreconditionViolatedError
from .poly import Box, Poly2, Scalar, as_fraction, bernstein_on_rect

Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class UnivQuad:
    """Univariate quadratic a*x^2 + b*x + c (a may be zero)."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_fraction(self.a))
        object.__setattr__(self, "b", as_fraction(self.b))
        object.__setattr__(self, "c", as_fraction(self.c))

    def eval(self, x: Scalar) -> Fraction:
        xv = as_fraction(x)
        return (self.a * xv + self.b) * xv + self.c

    def __call__(self, x: Scalar) -> Fraction:
        return self.eval(x)


class QfVariant(Enum):
    """The four printed quantifier-free criteria for |a*x^2+b*x+c| < 4 on (-1, 1)."""

    NEG_COMPACT = "neg-compact"      # requires a < 0; endpoint conjuncts + one disjunction
    NEG_CASEWISE = "neg-casewise"    # requires a < 0; three-case vertex analysis
    LINEAR = "linear"                # requires a = 0, b != 0; endpoint conjuncts only
    NONPOS_COMBINED = "nonpos"       # requires a <= 0; compact form with an a = 0 disjunct


def _endpoint_conjuncts(q: UnivQuad) -> bool:
    # Limits at x -> -1 and x -> +1 must stay within [-4, 4]; non-strict
    # because the endpoints themselves are outside the open interval.
    a, b, c = q.a, q.b, q.c
    return (c - b + a + 4 >= 0 and c - b + a - 4 <= 0
            and c + b + a + 4 >= 0 and c + b + a - 4 <= 0)


def qf_neg_compact(q: UnivQuad) -> bool:
    """Compact criterion for a < 0: endpoint bounds, and either the vertex
    lies outside [-1, 1] (b - 2a <= 0 or b + 2a >= 0) or its value is
    strictly below 4 (4ac - b^2 - 16a > 0)."""
    if q.a >= 0:
        raise PreconditionViolatedError("criterion requires a < 0")
    a, b, c = q.a, q.b, q.c
    return _endpoint_conjuncts(q) and (
        b - 2 * a <= 0 or b + 2 * a >= 0 or 4 * a * c - b * b - 16 * a > 0)


def qf_neg_casewise(q: UnivQuad) -> bool:
    """Hand-derived three-case criterion for a < 0, split on the vertex
    position -b/(2a) relative to the interval."""
    if q.a >= 0:
        raise PreconditionViolatedError("criterion requires a < 0")
    a, b, c = q.a, q.b, q.c
    case_left = (2 * a - b >= 0 and a + b + c + 4 >= 0 and a - b + c - 4 <= 0)
    case_right = (2 * a + b >= 0 and a - b + c + 4 >= 0 and a + b + c - 4 <= 0)
    case_inside = (2 * a - b < 0 and 2 * a + b < 0
                   and 4 * a * c - b * b - 16 * a > 0
                   and a - b + c + 4 >= 0 and a + b + c + 4 >= 0)
    return case_left or case_right or case_inside


def qf_linear(q: UnivQuad) -> bool:
    """Criterion for a = 0, b != 0: the line is monotone, so the endpoint
    bounds |c - b| <= 4 and |c + b| <= 4 are necessary and sufficient."""
    if q.a != 0 or q.b == 0:
        raise PreconditionViolatedError("criterion requires a = 0 and b != 0")
    b, c = q.b, q.c
    return (c - b + 4 >= 0 and c - b - 4 <= 0
            and c + b + 4 >= 0 and c + b - 4 <= 0)


def qf_nonpos_combined(q: UnivQuad) -> bool:
    """Combined criterion for a <= 0, obtained by inserting the disjunct
    a = 0 into the compact a < 0 form.

    Known boundary artifact: at a = 0, b = 0, |c| = 4 this formula evaluates
    true while the predicate is false (a constant of magnitude exactly 4 is
    not strictly inside).  It is evaluated as printed; callers that need
    soundness on that degenerate set must exclude it, as
    univariate_sufficient() does.
    """
    if q.a > 0:
        raise PreconditionViolatedError("criterion requires a <= 0")
    a, b, c = q.a, q.b, q.c
    return _endpoint_conjuncts(q) and (
        b - 2 * a <= 0 or b + 2 * a >= 0
        or 4 * a * c - b * b - 16 * a > 0 or a == 0)


_QF_DISPATCH = {
    QfVariant.NEG_COMPACT: qf_neg_compact,
    QfVariant.NEG_CASEWISE: qf_neg_casewise,
    QfVariant.LINEAR: qf_linear,
    QfVariant.NONPOS_COMBINED: qf_nonpos_combined,
}


def qf_predicate(variant: QfVariant, q: UnivQuad) -> bool:
    """Evaluate one of the printed quantifier-free criteria exactly."""
    return _QF_DISPATCH[variant](q)


def quad_interval_decision(q: UnivQuad, m: Scalar, eps: Scalar) -> bool:
    """Exact truth of: for all x in (-m, m), |q(x)| < eps.

    Decided from the extrema of q on the closed interval [-m, m] (endpoints
    plus the vertex -b/(2a) when it lies inside).  An extremum of magnitude
    exactly eps is acceptable only when it is attained at the endpoints
    alone, since those are excluded from the open interval.  A constant q
    must satisfy |c| < eps strictly.
    """
    mv = as_fraction(m)
    ev = as_fraction(eps)
    if mv <= 0 or ev <= 0:
        raise ValueError("half-width and tolerance must be positive")
    if q.a == 0 and q.b == 0:
        return abs(q.c) < ev
    values = [q.eval(-mv), q.eval(mv)]
    vertex_value: Optional[Fraction] = None
    if q.a != 0:
        xv = -q.b / (2 * q.a)
        if -mv < xv < mv:
            vertex_value = q.eval(xv)
            values.append(vertex_value)
    hi = max(values)
    lo = min(values)
    hi_interior = vertex_value is not None and vertex_value == hi
    lo_interior = vertex_value is not None and vertex_value == lo
    hi_ok = hi < ev or (hi == ev and not hi_interior)
    lo_ok = lo > -ev or (lo == -ev and not lo_interior)
    return hi_ok and lo_ok


def quad_from_reduced(b1: Scalar, b3: Scalar, s1: Scalar, s3: Scalar) -> UnivQuad:
    """The univariate quadratic of the y-free box problem, after clearing the
    denominator 4:  a = -s3^2, b = 4*b3 - 2*s1*s3, c = 4*b1 - 2*s3 - s1^2.
    The leading coefficient is never positive."""
    b1v, b3v, s1v, s3v = (as_fraction(v) for v in (b1, b3, s1, s3))
    return UnivQuad(-s3v * s3v, 4 * b3v - 2 * s1v * s3v, 4 * b1v - 2 * s3v - s1v * s1v)


def univariate_sufficient(b1: Scalar, b3: Scalar, s1: Scalar, s3: Scalar) -> bool:
    """Exact decision of the y-free instance: |4*b3*x + 4*b1 - 2*s3 -
    (s3*x + s1)^2| < 4 for all x in (-1, 1).

    Uses the combined a <= 0 criterion, with the constant case decided
    directly so the criterion's boundary artifact at a = b = 0, |c| = 4
    cannot produce an unsound answer.
    """
    q = quad_from_reduced(b1, b3, s1, s3)
    if q.a == 0 and q.b == 0:
        return abs(q.c) < 4
    return qf_nonpos_combined(q)


@dataclass(frozen=True)
class ReducedProblem:
    """The six free coefficients of the box problem: a00 = b3*x + b2*y + b1
    against the residual built from s3*x + s2*y + s1."""

    b1: Fraction
    b2: Fraction
    b3: Fraction
    s1: Fraction
    s2: Fraction
    s3: Fraction

    def __post_init__(self):
        for name in ("b1", "b2", "b3", "s1", "s2", "s3"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))


def lifted_sufficient(p: ReducedProblem) -> bool:
    """Sufficient condition for the full box predicate at eps = m = n = 1:
    both y-coefficients vanish and the remaining y-free instance holds.

    When b2 = s2 = 0 the difference polynomial has no y terms, so the box
    quantifier collapses to the x interval and the lift is sound (and, with
    the exact constant case above, complete for b2 = s2 = 0 instances).
    """
    return (p.b2 == 0 and p.s2 == 0
            and univariate_sufficient(p.b1, p.b3, p.s1, p.s3))


def triangle_sufficient(d: Poly2, box: Box, eps: Scalar) -> bool:
    """Coefficient-wise sufficient condition: sum over monomials of
    |coeff| * m^i * n^j strictly below eps bounds sup |d| on the closed box,
    hence certifies the open-box predicate."""
    ev = as_fraction(eps)
    if ev <= 0:
        raise ValueError("tolerance must be positive")
    total = Fraction(0)
    for (i, j), coeff in d.terms():
        total += abs(coeff) * box.m ** i * box.n ** j
    return total < ev


# ---------------------------------------------------------------------------
# Exact extrema of a bivariate quadratic on a closed rectangle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Extrema:
    """Exact extrema over the closed box with attainment information.

    The point tuples hold exact attaining points (all corner, edge-vertex
    and isolated critical attainers; one representative point when a whole
    critical segment attains).  The interior flags are exact: they are true
    iff some point of the open box attains the corresponding value.
    """

    min_val: Fraction
    max_val: Fraction
    min_points: tuple[Point, ...]
    max_points: tuple[Point, ...]
    interior_min_attained: bool
    interior_max_attained: bool


def _edge_candidates(d: Poly2, box: Box) -> list[tuple[Point, Fraction, bool]]:
    m, n = box.m, box.n
    out: list[tuple[Point, Fraction, bool]] = []
    for cx in (-m, m):
        for cy in (-n, n):
            out.append(((cx, cy), d.eval(cx, cy), False))
    # Horizontal edges y = +/-n: vertex of the x-restriction, if interior.
    for cy in (-n, n):
        g = d.restrict("y", cy)
        if g.coeff(2) != 0:
            xv = -g.coeff(1) / (2 * g.coeff(2))
            if -m < xv < m:
                out.append(((xv, cy), g.eval(xv), False))
    # Vertical edges x = +/-m.
    for cx in (-m, m):
        h = d.restrict("x", cx)
        if h.coeff(2) != 0:
            yv = -h.coeff(1) / (2 * h.coeff(2))
            if -n < yv < n:
                out.append(((cx, yv), h.eval(yv), False))
    return out


def _clip_line_to_box(p0: Point, direction: Point, box: Box
                      ) -> Optional[tuple[Point, bool]]:
    """Intersect the line p0 + t*direction with the box.

    Returns (representative point, meets_open_box) for a nonempty closed
    intersection, preferring a representative strictly inside the open box
    whenever one exists, else None.
    """
    tlo: Optional[Fraction] = None
    thi: Optional[Fraction] = None
    strict_const_ok = True
    for coord, step, bound in ((p0[0], direction[0], box.m), (p0[1], direction[1], box.n)):
        if step == 0:
            if abs(coord) > bound:
                return None
            if abs(coord) == bound:
                strict_const_ok = False
            continue
        t1 = (-bound - coord) / step
        t2 = (bound - coord) / step
        if t1 > t2:
            t1, t2 = t2, t1
        tlo = t1 if tlo is None or t1 > tlo else tlo
        thi = t2 if thi is None or t2 < thi else thi
    # direction is nonzero, so at least one axis bounded t.
    if tlo is None or thi is None or tlo > thi:
        return None
    t_mid = (tlo + thi) / 2
    point = (p0[0] + t_mid * direction[0], p0[1] + t_mid * direction[1])
    meets_open = strict_const_ok and tlo < thi
    return point, meets_open


def _critical_candidates(d: Poly2, box: Box) -> list[tuple[Point, Fraction, bool]]:
    """Stationary points of the quadratic inside the closed box.

    Solves the affine gradient system; a singular but consistent system
    yields a critical line on which the quadratic is constant, a degenerate
    gradient yields a constant polynomial.
    """
    a2 = d.coeff(2, 0)
    a11 = d.coeff(1, 1)
    b2 = d.coeff(0, 2)
    cx = d.coeff(1, 0)
    cy = d.coeff(0, 1)
    # Gradient: (2*a2*x + a11*y + cx, a11*x + 2*b2*y + cy).
    det = 4 * a2 * b2 - a11 * a11
    out: list[tuple[Point, Fraction, bool]] = []
    if det != 0:
        x0 = (a11 * cy - 2 * b2 * cx) / det
        y0 = (a11 * cx - 2 * a2 * cy) / det
        if box.contains_closed(x0, y0):
            interior = box.contains_open(x0, y0)
            out.append(((x0, y0), d.eval(x0, y0), interior))
        return out
    row1 = (2 * a2, a11)
    row2 = (a11, 2 * b2)
    if row1 == (0, 0) and row2 == (0, 0):
        # No quadratic part at all.
        if cx == 0 and cy == 0:
            center = (Fraction(0), Fraction(0))
            out.append((center, d.eval(0, 0), True))  # constant: attained everywhere
        return out
    if row1 == (0, 0):
        # det = 0 with row1 = 0 forces a2 = a11 = 0, so row2 = (0, 2*b2) with
        # b2 != 0: the critical set is the horizontal line y = -cy/(2*b2),
        # provided the first gradient equation 0 = -cx is consistent.
        if cx != 0:
            return out
        line_point = (Fraction(0), -cy / (2 * b2))
        direction = (Fraction(1), Fraction(0))
    elif row2 == (0, 0):
        # Symmetric: a11 = b2 = 0 and a2 != 0; vertical line x = -cx/(2*a2).
        if cy != 0:
            return out
        line_point = (-cx / (2 * a2), Fraction(0))
        direction = (Fraction(0), Fraction(1))
    else:
        # Two parallel nonzero rows; det = 0 then forces a2 != 0.
        lam = a11 / (2 * a2)
        if cy != lam * cx:
            return out
        line_point = (-cx / (2 * a2), Fraction(0))
        direction = (-a11, 2 * a2)
    clipped = _clip_line_to_box(line_point, direction, box)
    if clipped is not None:
        point, meets_open = clipped
        out.append((point, d.eval(*point), meets_open))
    return out


def quad_box_extrema(d: Poly2, box: Box) -> Extrema:
    """Exact minimum and maximum of a total-degree <= 2 polynomial on the
    closed box, with exact attainment bookkeeping.

    Candidates are the four corners, the interior vertices of the four edge
    restrictions, and interior stationary points (isolated, along a critical
    line, or everywhere for a constant).  An extremum over the closed box is
    always attained at one of these.
    """
    if d.degree > 2:
        raise DegreeTooHighError("exact box extrema require total degree <= 2")
    candidates = _edge_candidates(d, box) + _critical_candidates(d, box)
    by_point: dict[Point, tuple[Fraction, bool]] = {}
    for point, value, interior in candidates:
        known = by_point.get(point)
        if known is None or (interior and not known[1]):
            by_point[point] = (value, interior)
    max_val = max(value for value, _ in by_point.values())
    min_val = min(value for value, _ in by_point.values())
    max_points = tuple(sorted(pt for pt, (v, _) in by_point.items() if v == max_val))
    min_points = tuple(sorted(pt for pt, (v, _) in by_point.items() if v == min_val))
    interior_max = any(interior for pt, (v, interior) in by_point.items() if v == max_val)
    interior_min = any(interior for pt, (v, interior) in by_point.items() if v == min_val)
    return Extrema(min_val=min_val, max_val=max_val,
                   min_points=min_points, max_points=max_points,
                   interior_min_attained=interior_min,
                   interior_max_attained=interior_max)


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CertifiedInside:
    """|D| < eps throughout the open box; margin is a valid lower bound on
    eps minus the supremum of |D| over the open box (zero when the supremum
    equals eps on the excluded boundary)."""

    kind: ClassVar[str] = "inside"
    margin: Fraction

    def __post_init__(self):
        object.__setattr__(self, "margin", as_fraction(self.margin))
        if self.margin < 0:
            raise ValueError("margin must be nonnegative")


@dataclass(frozen=True)
class Violated:
    """An exact witness strictly inside the open box with |value| >= eps."""

    kind: ClassVar[str] = "violated"
    witness: Point
    value: Fraction


@dataclass(frozen=True)
class Unknown:
    """Subdivision exhausted its depth budget; gap is the worst remaining
    enclosure overshoot beyond (-eps, eps)."""

    kind: ClassVar[str] = "unknown"
    gap: Fraction


Certificate = Union[CertifiedInside, Violated, Unknown]


@dataclass(frozen=True)
class CertRequest:
    """A certification problem: difference polynomial, box, tolerance, and
    the subdivision depth budget used by the Bernstein path."""

    d: Poly2
    box: Box
    eps: Fraction
    max_depth: int = 12

    def __post_init__(self):
        object.__setattr__(self, "eps", as_fraction(self.eps))
        if self.eps <= 0:
            raise ValueError("tolerance must be positive")
        if self.max_depth < 0:
            raise ValueError("depth budget must be nonnegative")


def _inward_witness(d: Poly2, boundary_point: Point, eps: Fraction, sign: int
                    ) -> tuple[Point, Fraction]:
    """Shrink a boundary attainer toward the box center until the violation
    shows up strictly inside.

    Scaling toward the origin strictly reduces both coordinate magnitudes,
    and d is continuous with |d| > eps at the boundary point, so the loop
    terminates with an exactly verified interior witness.
    """
    bx, by = boundary_point
    t = Fraction(1, 2)
    while True:
        candidate = ((1 - t) * bx, (1 - t) * by)
        value = d.eval(*candidate)
        if (sign > 0 and value >= eps) or (sign < 0 and value <= -eps):
            return candidate, value
        t /= 2


def certify_open_box(request: CertRequest) -> Certificate:
    """Decide |D| < eps on the open box.

    For total degree <= 2 the decision is exact and never Unknown: the
    closed-box extrema are compared against eps with the open-box
    strictness rule (an extremum equal to eps is tolerated only when it is
    not attained at any interior point).  Violations return an interior
    witness: an interior attainer when one exists, otherwise a point pulled
    inward from a boundary attainer and verified by exact evaluation.
    Higher degrees delegate to bernstein_certify.
    """
    d = request.d
    if d.degree > 2:
        return bernstein_certify(request)
    eps = request.eps
    ext = quad_box_extrema(d, request.box)
    hi_ok = ext.max_val < eps or (ext.max_val == eps and not ext.interior_max_attained)
    lo_ok = ext.min_val > -eps or (ext.min_val == -eps and not ext.interior_min_attained)
    if hi_ok and lo_ok:
        sup_abs = max(ext.max_val, -ext.min_val)
        return CertifiedInside(margin=eps - sup_abs)
    if not hi_ok:
        points, sign = ext.max_points, +1
    else:
        points, sign = ext.min_points, -1
    for point in points:
        if request.box.contains_open(*point):
            return Violated(witness=point, value=d.eval(*point))
    witness, value = _inward_witness(d, points[0], eps, sign)
    return Violated(witness=witness, value=value)


def bernstein_certify(request: CertRequest) -> Certificate:
    """Certify |D| < eps on the open box by Bernstein subdivision.

    Each subrectangle whose enclosure lies strictly inside (-eps, eps) is
    certified; otherwise the exact value at the subrectangle center (always
    strictly inside the original box) is checked for a violation, and the
    rectangle is bisected along its longer side (ties split x) until the
    depth budget runs out.  Remaining rectangles produce Unknown with the
    largest enclosure overshoot as the gap.  The traversal order is fixed,
    so results are deterministic.
    """
    d = request.d
    eps = request.eps
    box = request.box
    worst_inside = Fraction(0)
    overshoots: list[Fraction] = []
    stack: list[tuple[Fraction, Fraction, Fraction, Fraction, int]] = [
        (-box.m, box.m, -box.n, box.n, 0)]
    while stack:
        xlo, xhi, ylo, yhi, depth = stack.pop()
        enclosure = bernstein_on_rect(d, xlo, xhi, ylo, yhi)
        if -eps < enclosure.lo and enclosure.hi < eps:
            bound = max(enclosure.hi, -enclosure.lo)
            if bound > worst_inside:
                worst_inside = bound
            continue
        cx = (xlo + xhi) / 2
        cy = (ylo + yhi) / 2
        if box.contains_open(cx, cy):  # centers on the outer boundary are skipped
            value = d.eval(cx, cy)
            if abs(value) >= eps:
                return Violated(witness=(cx, cy), value=value)
        if depth < request.max_depth:
            if xhi - xlo >= yhi - ylo:
                stack.append((cx, xhi, ylo, yhi, depth + 1))
                stack.append((xlo, cx, ylo, yhi, depth + 1))
            else:
                stack.append((xlo, xhi, cy, yhi, depth + 1))
                stack.append((xlo, xhi, ylo, cy, depth + 1))
        else:
            overshoots.append(max(enclosure.hi - eps, -eps - enclosure.lo))
    if overshoots:
        return Unknown(gap=max(overshoots))
    return CertifiedInside(margin=eps - worst_inside)


@dataclass(frozen=True)
class GridWitness:
    """A grid point strictly inside the box where |D| reaches the tolerance."""

    x: Fraction
    y: Fraction
    value: Fraction


def sample_falsify(request: CertRequest, grid_k: int) -> Optional[GridWitness]:
    """Scan the interior grid (m*i/K, n*j/K), |i|,|j| < K, for |D| >= eps.

    Points are visited row-major (i ascending outermost, then j) and the
    first violation is returned, or None after a full sweep.  Evaluation is
    exact: the polynomial is lifted to integer coefficients by clearing
    denominators once, so each grid value is an integer comparison.
    """
    if grid_k < 2:
        raise ValueError("grid resolution must be at least 2")
    d = request.d
    if d.is_zero:
        return None
    m, n, eps = request.box.m, request.box.n, request.eps
    deg = d.degree
    # N(i, j) = Q * K^deg * D(m*i/K, n*j/K) with integer coefficients.
    scaled: dict[tuple[int, int], Fraction] = {}
    for (i, j), coeff in d.terms():
        scaled[(i, j)] = coeff * m ** i * n ** j * grid_k ** (deg - i - j)
    denom_lcm = lcm(*(value.denominator for value in scaled.values()))
    columns: dict[int, dict[int, int]] = {}
    for (i, j), value in scaled.items():
        lifted = value * denom_lcm
        columns.setdefault(j, {})[i] = lifted.numerator
    max_b = max(columns)
    scale = denom_lcm * grid_k ** deg
    threshold = eps * scale
    t_num, t_den = threshold.numerator, threshold.denominator
    span = range(-(grid_k - 1), grid_k)
    for i in span:
        powers = [1]
        for _ in range(d.x_degree):
            powers.append(powers[-1] * i)
        row = [sum(c * powers[a] for a, c in columns.get(b, {}).items())
               for b in range(max_b + 1)]
        while len(row) > 1 and row[-1] == 0:
            row.pop()
        if len(row) == 1:
            # No y dependence on this row: one comparison covers every j.
            if abs(row[0]) * t_den >= t_num:
                j = span[0]
                return GridWitness(x=Fraction(i, grid_k) * m,
                                   y=Fraction(j, grid_k) * n,
                                   value=Fraction(row[0], scale))
            continue
        for j in span:
            value = 0
            for coeff in reversed(row):
                value = value * j + coeff
            if abs(value) * t_den >= t_num:
                return GridWitness(x=Fraction(i, grid_k) * m,
                                   y=Fraction(j, grid_k) * n,
                                   value=Fraction(value, scale))
    return None

"""Shared generators and independent oracles for the test suite."""

from __future__ import annotations

import math
import random
from fractions import Fraction

from bkfact import Box, Poly2


def rand_frac(rng: random.Random, num_max: int = 9, den_max: int = 9) -> Fraction:
    return Fraction(rng.randint(-num_max, num_max), rng.randint(1, den_max))


def rand_nonzero_frac(rng: random.Random, num_max: int = 9, den_max: int = 9) -> Fraction:
    while True:
        value = rand_frac(rng, num_max, den_max)
        if value != 0:
            return value


def rand_poly2(rng: random.Random, max_deg: int, num_max: int = 5, den_max: int = 4) -> Poly2:
    terms = {}
    for i in range(max_deg + 1):
        for j in range(max_deg + 1 - i):
            if rng.random() < 0.7:
                terms[(i, j)] = rand_frac(rng, num_max, den_max)
    return Poly2(terms)


def rand_point_in_box(rng: random.Random, box: Box, den: int = 64) -> tuple[Fraction, Fraction]:
    """Random exact rational point of the closed box."""
    x = box.m * Fraction(rng.randint(-den, den), den)
    y = box.n * Fraction(rng.randint(-den, den), den)
    return x, y


def difference_from_expansion(b1, b2, b3, s1, s2, s3) -> Poly2:
    """The difference a00 - R for affine data, written out monomial by
    monomial (independent oracle; hand expansion of
    b3*x + b2*y + b1 - (s3 - s2)/2 - (s3*x + s2*y + s1)^2 / 4):

        (-s3^2/4)*x^2 + (-s3*s2/2)*x*y + (-s2^2/4)*y^2
        + (b3 - s1*s3/2)*x + (b2 - s1*s2/2)*y
        + (b1 - (s3 - s2)/2 - s1^2/4).
    """
    b1, b2, b3, s1, s2, s3 = (Fraction(v) for v in (b1, b2, b3, s1, s2, s3))
    return Poly2({
        (2, 0): -s3 * s3 / 4,
        (1, 1): -s3 * s2 / 2,
        (0, 2): -s2 * s2 / 4,
        (1, 0): b3 - s1 * s3 / 2,
        (0, 1): b2 - s1 * s2 / 2,
        (0, 0): b1 - (s3 - s2) / 2 - s1 * s1 / 4,
    })


def exact_grid_extrema(d: Poly2, box: Box, grid_k: int) -> tuple[Fraction, Fraction]:
    """Exact (min, max) of a total-degree <= 2 polynomial over the grid
    (m*i/K, n*j/K), |i|, |j| < K.

    Independent of quad_box_extrema: the polynomial is lifted to integer
    coefficients, and each row (fixed i) is an integer quadratic in j whose
    extreme over an integer interval sits at the endpoints or next to the
    real vertex.
    """
    assert d.degree <= 2
    deg = max(d.degree, 0)
    scaled = {}
    for (i, j), coeff in d.terms():
        scaled[(i, j)] = coeff * box.m ** i * box.n ** j * grid_k ** (deg - i - j)
    if not scaled:
        return Fraction(0), Fraction(0)
    denom = math.lcm(*(v.denominator for v in scaled.values()))
    lifted = {key: (v * denom).numerator for key, v in scaled.items()}
    scale = denom * grid_k ** deg
    lo = hi = None
    span_lo, span_hi = -(grid_k - 1), grid_k - 1

    def row_coeff(b: int, i: int) -> int:
        return sum(c * i ** a for (a, bb), c in lifted.items() if bb == b)

    for i in range(span_lo, span_hi + 1):
        c2 = row_coeff(2, i)
        c1 = row_coeff(1, i)
        c0 = row_coeff(0, i)
        candidates = {span_lo, span_hi}
        if c2 != 0:
            vertex = Fraction(-c1, 2 * c2)
            for j in (math.floor(vertex), math.floor(vertex) + 1):
                if span_lo <= j <= span_hi:
                    candidates.add(j)
        values = [(c2 * j + c1) * j + c0 for j in candidates]
        row_lo, row_hi = min(values), max(values)
        lo = row_lo if lo is None or row_lo < lo else lo
        hi = row_hi if hi is None or row_hi > hi else hi
    return Fraction(lo, scale), Fraction(hi, scale)

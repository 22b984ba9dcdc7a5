"""Exact planar lattice arithmetic.

Rational scalars, integer lattice vectors, primitive decomposition, and
affine unimodular maps (x -> Ax + b with A integral, det A = +-1).
All arithmetic is exact; nothing in this package touches floating point
except the SVG renderer.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction

# Integer lattice vector and rational plane point are plain pairs; the
# invariant-free types do not earn a class.
LatticeVector = tuple[int, int]
PlanePoint = tuple[Fraction, Fraction]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (optional leading minus). No decimals."""
    token = text.strip()
    if not _RATIONAL_RE.match(token):
        raise ValueError(f"not a rational token: {text!r} (expected 'p' or 'p/q')")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {text!r}") from None


def format_rational(x: Fraction) -> str:
    """Inverse of parse_rational: "p/q", or "p" when the denominator is 1."""
    return str(x)


def primitive_decompose(v: tuple[Fraction, Fraction]) -> tuple[Fraction, LatticeVector]:
    """Split a nonzero rational vector into size * primitive direction.

    The size is the positive rational c such that v = c * d with d a
    primitive integer vector; d inherits the orientation of v.
    """
    vx, vy = Fraction(v[0]), Fraction(v[1])
    if vx == 0 and vy == 0:
        raise ValueError("zero vector has no primitive decomposition")
    q = (vx.denominator * vy.denominator) // gcd(vx.denominator, vy.denominator)
    ix, iy = int(vx * q), int(vy * q)
    g = gcd(abs(ix), abs(iy))
    return Fraction(g, q), (ix // g, iy // g)


@dataclass(frozen=True)
class AffineUnimodularMap:
    """x -> Ax + b with A = [[a, b], [c, d]] integral of determinant +-1."""

    a: int
    b: int
    c: int
    d: int
    translation: PlanePoint = (Fraction(0), Fraction(0))

    def __post_init__(self) -> None:
        if self.det not in (1, -1):
            raise ValueError(f"matrix [[{self.a},{self.b}],[{self.c},{self.d}]] has det {self.det}, not +-1")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def apply_vector(self, v: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
        """Linear part only (directions and normals transform without b)."""
        return (self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def inverse(self) -> "AffineUnimodularMap":
        s = self.det  # 1/det = det for det = +-1
        ia, ib, ic, id_ = s * self.d, -s * self.b, -s * self.c, s * self.a
        tx, ty = self.translation
        return AffineUnimodularMap(ia, ib, ic, id_, (-(ia * tx + ib * ty), -(ic * tx + id_ * ty)))


IDENTITY_MAP = AffineUnimodularMap(1, 0, 0, 1)


def apply_map(t: AffineUnimodularMap, p: PlanePoint) -> PlanePoint:
    """Apply the affine map to a point: A*p + b."""
    x, y = t.apply_vector((Fraction(p[0]), Fraction(p[1])))
    return (x + t.translation[0], y + t.translation[1])


# Generators of GL(2,Z): a shear, the quarter turn, and a reflection.
_GENERATORS = ((1, 1, 0, 1), (0, -1, 1, 0), (1, 0, 0, -1))


def random_unimodular_map(seed: int, word_length: int) -> AffineUnimodularMap:
    """Deterministic pseudo-random product of the standard GL(2,Z) generators.

    Multiplies word_length factors drawn from the shear [[1,1],[0,1]], the
    rotation [[0,-1],[1,0]] and the flip [[1,0],[0,-1]], then attaches a
    bounded random rational translation.  Same (seed, word_length) always
    yields the same map.
    """
    if word_length < 0:
        raise ValueError("word_length must be >= 0")
    # fold both arguments into one integer seed (hash-based seeding is deprecated
    # and not stable across processes for arbitrary objects)
    rng = random.Random(seed * 1000003 + word_length)
    a, b, c, d = 1, 0, 0, 1
    for _ in range(word_length):
        ga, gb, gc, gd = rng.choice(_GENERATORS)
        a, b, c, d = a * ga + b * gc, a * gb + b * gd, c * ga + d * gc, c * gb + d * gd
    tx = Fraction(rng.randint(-8, 8), rng.randint(1, 8))
    ty = Fraction(rng.randint(-8, 8), rng.randint(1, 8))
    return AffineUnimodularMap(a, b, c, d, (tx, ty))

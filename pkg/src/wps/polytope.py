"""Torus weights in H = Q^{n+1}/Q.a, section and Newton polytopes.

H is identified with Q^n by dropping the last coordinate after moving
along a: pi(i)_j = i_j - i_n * a_j / a_n.
"""

from __future__ import annotations

import enum
import os
from fractions import Fraction
from typing import Iterable, Sequence

from .core import WeightedPolynomial, WeightedSpace, enumerate_monomials
from .errors import DimensionNot2, EmptyLinearSystem, ZeroPolynomial
from .linalg import rank
from .lp import simplex


class MembershipStatus(enum.Enum):
    OUTSIDE = "Outside"
    BOUNDARY = "Boundary"
    INTERIOR = "Interior"

    def __str__(self):
        return self.value


class HPointSet(tuple):
    """Deduplicated, order-preserving tuple of points of H (Fraction tuples)."""

    def __new__(cls, points: Iterable[Sequence] = ()):
        seen = {}
        for p in points:
            p = tuple(Fraction(x) for x in p)
            seen.setdefault(p, None)
        return super().__new__(cls, seen)

    @property
    def dim(self) -> int:
        return len(self[0]) if self else 0

    def to_json(self):
        return [[[x.numerator, x.denominator] for x in p] for p in self]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(Fraction(n, d) for n, d in p) for p in data)


def project_exponent(X: WeightedSpace, e: Sequence[int]) -> tuple:
    a, an, top = X.weights, X.max_weight, e[-1]
    return tuple(Fraction(e[j]) - Fraction(top * a[j], an) for j in range(X.n))


def section_polytope(X: WeightedSpace, d: int) -> HPointSet:
    monos = enumerate_monomials(X, d)
    if not monos:
        raise EmptyLinearSystem(f"no monomials of degree {d} on {X}")
    return HPointSet(project_exponent(X, e) for e in monos)


def newton_points(f: WeightedPolynomial) -> HPointSet:
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no Newton polytope")
    return HPointSet(project_exponent(f.space, e) for e in f.terms)


def origin_certificate(S: Sequence[Sequence]):
    """Maximize min mu_i over convex combinations sum mu_i w_i = 0.

    Returns (t, mu) with t = max min mu_i, or None when 0 is not in conv(S).
    Variables are nu_i = mu_i - t >= 0 and t >= 0.
    """
    S = [tuple(Fraction(x) for x in p) for p in S]
    k, D = len(S), len(S[0])
    A = []
    b = []
    for j in range(D):
        A.append([p[j] for p in S] + [sum(p[j] for p in S)])
        b.append(0)
    A.append([Fraction(1)] * k + [Fraction(k)])
    b.append(1)
    c = [0] * k + [1]
    res = simplex(A, b, c)
    if res.status != "optimal":
        return None
    t = res.x[-1]
    return t, [nu + t for nu in res.x[:-1]]


def origin_membership(S: Sequence[Sequence]) -> MembershipStatus:
    if not S:
        raise ValueError("empty point set")
    cert = origin_certificate(S)
    if cert is None:
        return MembershipStatus.OUTSIDE
    t, _ = cert
    if t > 0 and rank(S) == len(S[0]):
        return MembershipStatus.INTERIOR
    return MembershipStatus.BOUNDARY


def vertices(S: Sequence[Sequence]) -> HPointSet:
    """Points of S not in the convex hull of the others."""
    S = HPointSet(S)
    out = []
    for i, p in enumerate(S):
        rest = [tuple(q[j] - p[j] for j in range(len(p))) for k, q in enumerate(S) if k != i]
        if not rest or origin_certificate(rest) is None:
            out.append(p)
    return HPointSet(out)


def hull_polygon(S: Sequence[Sequence]) -> list:
    """Counter-clockwise hull of 2-D points (monotone chain), no collinear points."""
    pts = sorted(set(tuple(p) for p in S))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def svg2d(S: Sequence[Sequence], hull: bool = True, labels: Sequence[str] | None = None, size: int = 400) -> str:
    if not S or any(len(p) != 2 for p in S):
        raise DimensionNot2("SVG output needs 2-dimensional points")
    xs = [p[0] for p in S] + [Fraction(0)]
    ys = [p[1] for p in S] + [Fraction(0)]
    lo = min(min(xs), min(ys)) - 1
    hi = max(max(xs), max(ys)) + 1
    margin = 20
    scale = Fraction(size - 2 * margin) / (hi - lo)

    def sx(v):
        return float(margin + (v - lo) * scale)

    def sy(v):
        return float(size - margin - (v - lo) * scale)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<line x1="{margin}" y1="{sy(0):.3f}" x2="{size - margin}" y2="{sy(0):.3f}" stroke="black" stroke-width="1"/>',
        f'<line x1="{sx(0):.3f}" y1="{margin}" x2="{sx(0):.3f}" y2="{size - margin}" stroke="black" stroke-width="1"/>',
    ]
    if hull and len(S) >= 2:
        poly = hull_polygon(S)
        pts = " ".join(f"{sx(p[0]):.3f},{sy(p[1]):.3f}" for p in poly)
        out.append(f'<polygon points="{pts}" fill="steelblue" fill-opacity="0.25" stroke="steelblue" stroke-dasharray="4,2"/>')
    for k, p in enumerate(S):
        out.append(f'<circle cx="{sx(p[0]):.3f}" cy="{sy(p[1]):.3f}" r="3" fill="black"><title>({p[0]}, {p[1]})</title></circle>')
        if labels:
            out.append(f'<text x="{sx(p[0]) + 5:.3f}" y="{sy(p[1]) - 5:.3f}" font-size="12">{labels[k]}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg2d(S: Sequence[Sequence], hull: bool, path: str | os.PathLike, labels: Sequence[str] | None = None) -> None:
    text = svg2d(S, hull, labels)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)

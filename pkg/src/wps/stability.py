"""Torus Hilbert-Mumford status, G-stability certificates, the A-matrix and
open-stratum discriminant membership."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .aut import default_N
from .core import WeightedPolynomial, WeightedSpace, enumerate_monomials, is_cartier_degree
from .cstar import cstar_holds
from .errors import EmptyLinearSystem, NotCartierDegree, ZeroPolynomial
from .groebner import has_torus_zero
from .polytope import MembershipStatus, newton_points, origin_certificate, origin_membership
from .quasismooth import is_quasismooth

TORUS_CAVEAT = (
    "torus-level verdict only: G-stability needs every G-translate to be torus-stable, "
    "which is not decided here"
)


class TorusStatus(enum.Enum):
    UNSTABLE = "Unstable"
    STRICTLY_SEMISTABLE = "StrictlySemistable"
    STABLE = "Stable"

    def __str__(self):
        return self.value


_FROM_MEMBERSHIP = {
    MembershipStatus.OUTSIDE: TorusStatus.UNSTABLE,
    MembershipStatus.BOUNDARY: TorusStatus.STRICTLY_SEMISTABLE,
    MembershipStatus.INTERIOR: TorusStatus.STABLE,
}


def torus_status(f: WeightedPolynomial) -> TorusStatus:
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a hypersurface")
    return _FROM_MEMBERSHIP[origin_membership(newton_points(f))]


def _frac_json(x: Fraction):
    return [x.numerator, x.denominator]


@dataclass
class StabilityReport:
    space: WeightedSpace
    degree: int
    N: int
    torus_status: TorusStatus
    certificate_kind: str  # "QuasismoothCertificate" | "TorusOnly"
    details: dict = field(default_factory=dict)
    newton_points: tuple = ()
    mu_certificate: list | None = None

    @property
    def g_stable(self) -> bool:
        return self.certificate_kind == "QuasismoothCertificate"

    def to_json(self):
        out = {
            "space": list(self.space.weights),
            "degree": self.degree,
            "N": self.N,
            "torus_status": str(self.torus_status),
            "certificate": {"kind": self.certificate_kind, "details": self.details},
            "newton_points": [[_frac_json(x) for x in p] for p in self.newton_points],
        }
        if self.mu_certificate is not None:
            out["mu_certificate"] = [_frac_json(x) for x in self.mu_certificate]
        return out


def g_stability_certificate(f: WeightedPolynomial, N: int | None = None) -> StabilityReport:
    """Certify G-stability through the quasismooth route, or fall back to the
    torus verdict with an explicit caveat."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a hypersurface")
    X, d = f.space, f.degree
    if not is_cartier_degree(X, d):
        raise NotCartierDegree(f"degree {d} is not divisible by lcm{X.weights} = {X.lcm}")
    if N is None:
        N = default_N(d)
    pts = newton_points(f)
    cert = origin_certificate(pts)
    status = _FROM_MEMBERSHIP[origin_membership(pts)]
    hypotheses = {
        "n_gt_1": X.n > 1,
        "degree_ge_max_plus_2": d >= X.max_weight + 2,
        "cstar": cstar_holds(X).holds,
        "quasismooth": is_quasismooth(f),
    }
    if all(hypotheses.values()):
        kind = "QuasismoothCertificate"
        details = dict(hypotheses, conclusion="G-stable", torus_consistent=status is TorusStatus.STABLE)
    else:
        kind = "TorusOnly"
        details = dict(hypotheses, caveat=TORUS_CAVEAT)
    return StabilityReport(X, d, N, status, kind, details, tuple(pts), cert[1] if cert else None)


@dataclass(frozen=True)
class AMatrix:
    space: WeightedSpace
    degree: int
    columns: tuple  # exponent vectors, canonical order

    @property
    def rows(self) -> list:
        return [[e[i] for e in self.columns] for i in range(self.space.nvars)]

    def to_csv(self) -> str:
        return "".join(",".join(map(str, r)) + "\n" for r in self.rows)

    def to_json(self):
        return {
            "space": list(self.space.weights),
            "degree": self.degree,
            "monomials": [self.space.format_monomial(e) for e in self.columns],
            "matrix": self.rows,
        }


def a_matrix(X: WeightedSpace, d: int) -> AMatrix:
    cols = enumerate_monomials(X, d)
    if not cols:
        raise EmptyLinearSystem(f"no monomials of degree {d} on {X}")
    return AMatrix(X, d, tuple(cols))


def in_nabla_open(f: WeightedPolynomial, max_steps: int | None = None) -> bool:
    """Does V(f) have a singular point on the torus (open stratum of the
    A-discriminant locus)?"""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a hypersurface")
    gens = [f] + [f.partial(i) for i in range(f.space.nvars)]
    return has_torus_zero(gens, f.space.nvars, max_steps=max_steps, weights=f.space.weights)

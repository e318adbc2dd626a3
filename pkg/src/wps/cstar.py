"""Minimal-weight stratum for lambda_{g,N} and the (C*) condition.

The (C*) test is a combinatorial criterion; :func:`cstar_oracle` re-derives
the answer by solving the Lie-algebra stabilizer system at the monomial
points of Z_min, and the two must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .aut import aut_report, derivation_system, lie_unknowns
from .core import WeightedPolynomial, WeightedSpace, enumerate_monomials
from .errors import CStarFails, NoMinWeightSpace, UnsupportedPositiveDimensionalZmin
from .linalg import nullspace


@dataclass(frozen=True)
class ZminDescription:
    basis: tuple
    is_point: bool

    def to_json(self, X: WeightedSpace):
        return {"basis": [X.format_monomial(e) for e in self.basis], "is_point": self.is_point}


def zmin(X: WeightedSpace, d: int) -> ZminDescription:
    if d % X.max_weight:
        raise NoMinWeightSpace(f"top weight {X.max_weight} does not divide degree {d}")
    top = set(X.maximal_indices)
    basis = tuple(e for e in enumerate_monomials(X, d) if all(k == 0 for i, k in enumerate(e) if i not in top))
    return ZminDescription(basis, len(basis) == 1)


def in_Ymin0(f: WeightedPolynomial) -> bool:
    top = set(f.space.maximal_indices)
    return any(all(k == 0 for i, k in enumerate(e) if i not in top) for e in f.terms)


@dataclass(frozen=True)
class CStarVerdict:
    holds: bool
    explanation: str
    witness: str | None = None
    variable: str | None = None

    def __bool__(self):
        return self.holds

    def to_json(self):
        out = {"holds": self.holds, "explanation": self.explanation}
        if self.witness is not None:
            out["witness"] = self.witness
            out["variable"] = self.variable
        return out


def cstar_holds(X: WeightedSpace) -> CStarVerdict:
    """(C*): trivial U-stabilizer at every point of Z_min.

    Holds iff no non-maximal variable has a unipotent direction and either
    the top weight is simple or U is trivial.
    """
    rep = aut_report(X)
    top = X.max_weight
    for i, a in enumerate(X.weights):
        if a == top or not rep.unipotent_directions[i]:
            continue
        m = X.format_monomial(rep.unipotent_directions[i][0])
        return CStarVerdict(
            False,
            f"{X.names[i]} -> {X.names[i]} + {m} fixes every point of Z_min",
            f"{m} direction on weight-{a} variable",
            X.names[i],
        )
    if X.n_max > 1 and rep.dim_unipotent:
        i = next(i for i in X.maximal_indices if rep.unipotent_directions[i])
        other = next(k for k in X.maximal_indices if k != i)
        m = X.format_monomial(rep.unipotent_directions[i][0])
        return CStarVerdict(
            False,
            f"{X.names[i]} -> {X.names[i]} + {m} fixes the Z_min point {X.names[other]}^d'",
            f"{m} direction on maximal weight-{top} variable",
            X.names[i],
        )
    if rep.dim_unipotent == 0:
        return CStarVerdict(True, "unipotent radical is trivial")
    return CStarVerdict(True, "Z_min is a point and U moves it along every direction")


def cstar_oracle(X: WeightedSpace, d: int | None = None) -> dict:
    """Dimension of the unipotent Lie stabilizer of [z] for each monomial z
    spanning Z_min (default degree lcm of the weights)."""
    if d is None:
        d = X.lcm
    unknowns = lie_unknowns(X, unipotent_only=True)
    out = {}
    for z in zmin(X, d).basis:
        f = WeightedPolynomial.monomial(X, z)
        M, ncols = derivation_system(f, unknowns, with_scalar=True)
        out[z] = len(nullspace(M, ncols)) if ncols else 0
    return out


def orbit_parameter(f: WeightedPolynomial):
    """For f = c*(y + p)^d' return (c, p); None if f is not of that form.

    Only for Z_min a point (one top-weight variable y).
    """
    X = f.space
    if X.n_max != 1:
        raise UnsupportedPositiveDimensionalZmin("U-orbit membership is implemented only when Z_min is a point")
    y = X.nvars - 1
    if f.degree % X.max_weight:
        raise NoMinWeightSpace(f"top weight {X.max_weight} does not divide degree {f.degree}")
    dp = f.degree // X.max_weight
    top = tuple(0 for _ in range(y)) + (dp,)
    c = f.coefficient(top)
    if c == 0:
        return None
    slice_terms = {}
    for e, coeff in f.terms.items():
        if e[y] == dp - 1:
            e2 = e[:y] + (0,)
            slice_terms[e2] = coeff / (dp * c)
    p = WeightedPolynomial(X, X.max_weight, slice_terms)
    candidate = (WeightedPolynomial.variable(X, y) + p) ** dp * c
    if candidate == f:
        return c, p
    return None


def in_U_orbit_of_zmin(f: WeightedPolynomial) -> bool:
    return orbit_parameter(f) is not None


def uhat_stable(f: WeightedPolynomial) -> bool:
    """Membership in Y0_min minus U.Z_min, the U-hat stable locus."""
    X = f.space
    verdict = cstar_holds(X)
    if not verdict.holds:
        raise CStarFails(f"(C*) fails for {X}: {verdict.explanation}")
    if X.n_max != 1:
        raise UnsupportedPositiveDimensionalZmin("U-hat stability is implemented only when Z_min is a point")
    return in_Ymin0(f) and not in_U_orbit_of_zmin(f)

"""Graded automorphism group of the Cox ring of a weighted projective space.

G = Aut_gr(k[x_0..x_n]) has a Levi factor prod GL(n_j), one block per
distinct weight b_j, and unipotent radical U made of substitutions
x_i -> x_i + (composite monomials of weight a_i).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import WeightedPolynomial, WeightedSpace, enumerate_monomials
from .errors import NoMinWeightSpace, ZeroPolynomial
from .linalg import nullspace


def composite_monomials(X: WeightedSpace, a: int) -> list:
    """Monomials of weighted degree a and total degree >= 2."""
    return [e for e in enumerate_monomials(X, a) if sum(e) >= 2]


@dataclass(frozen=True)
class AutReport:
    space: WeightedSpace
    levi_blocks: tuple
    dim_aut: int
    dim_unipotent: int
    unipotent_directions: tuple  # per variable: tuple of exponent vectors

    def to_json(self):
        X = self.space
        return {
            "weights": list(X.weights),
            "levi_blocks": [list(b) for b in self.levi_blocks],
            "dim_aut": self.dim_aut,
            "dim_unipotent": self.dim_unipotent,
            "unipotent_directions": {
                X.names[i]: [X.format_monomial(m) for m in dirs]
                for i, dirs in enumerate(self.unipotent_directions)
            },
        }


def aut_report(X: WeightedSpace) -> AutReport:
    directions = tuple(tuple(composite_monomials(X, a)) for a in X.weights)
    dim_aut = sum(nj * len(enumerate_monomials(X, b)) for b, nj in X.distinct_weights)
    dim_u = sum(len(d) for d in directions)
    return AutReport(X, X.distinct_weights, dim_aut, dim_u, directions)


@dataclass(frozen=True)
class GradingOneParameter:
    """lambda_a (kind "a") or lambda_{g,N} (kind "gN").

    Weights are for the action on functions: lambda_{g,N} scales
    non-maximal variables by t^N and maximal ones by t^-1.
    """

    kind: str
    N: int | None = None

    def __post_init__(self):
        if self.kind not in ("a", "gN"):
            raise ValueError(f"unknown one-parameter subgroup {self.kind!r}")
        if self.kind == "gN" and (self.N is None or self.N < 1):
            raise ValueError("lambda_{g,N} needs a positive N")

    @classmethod
    def euler(cls):
        return cls("a")

    @classmethod
    def grading(cls, N: int):
        return cls("gN", N)

    def variable_weight(self, X: WeightedSpace, i: int) -> int:
        if self.kind == "a":
            return X.weights[i]
        return -1 if X.weights[i] == X.max_weight else self.N


def lambda_weight(X: WeightedSpace, g: GradingOneParameter, m) -> int:
    return sum(k * g.variable_weight(X, i) for i, k in enumerate(m))


def omega_min(X: WeightedSpace, d: int) -> Fraction:
    if d % X.max_weight:
        raise NoMinWeightSpace(f"top weight {X.max_weight} does not divide degree {d}")
    return Fraction(-d, X.max_weight)


def adapted_twist(X: WeightedSpace, d: int, epsilon) -> Fraction:
    """Character -omega_min - epsilon/2; the twisted minimal weight is -epsilon/2."""
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    return -omega_min(X, d) - epsilon / 2


def default_N(d: int) -> int:
    return d + 1


@dataclass
class LieElement:
    """Element of Lie(G): xi(x_i) for every variable, split into a Levi
    matrix per block and unipotent coefficients per variable."""

    space: WeightedSpace
    levi: dict = field(default_factory=dict)  # block j -> n_j x n_j matrix (rows: targets)
    unipotent: dict = field(default_factory=dict)  # var i -> {monomial: coeff}

    def image(self, i: int) -> WeightedPolynomial:
        X = self.space
        terms = {}
        j = X.block_of(i)
        members = [k for k in range(X.nvars) if X.weights[k] == X.weights[i]]
        row = members.index(i)
        M = self.levi.get(j)
        if M is not None:
            for col, k in enumerate(members):
                e = [0] * X.nvars
                e[k] = 1
                terms[tuple(e)] = M[row][col]
        for m, c in self.unipotent.get(i, {}).items():
            terms[m] = terms.get(m, 0) + c
        return WeightedPolynomial(X, X.weights[i], terms)

    def apply(self, f: WeightedPolynomial) -> WeightedPolynomial:
        """Derivation action xi(f) = sum_i f_i xi(x_i)."""
        out = WeightedPolynomial.zero(f.space, f.degree)
        for i in range(f.space.nvars):
            fi = f.partial(i)
            if fi:
                out = out + fi * self.image(i)
        return WeightedPolynomial(f.space, f.degree, out.terms)

    def is_unipotent(self) -> bool:
        return all(c == 0 for M in self.levi.values() for row in M for c in row)

    @classmethod
    def euler(cls, X: WeightedSpace) -> "LieElement":
        """The lambda_a direction xi(x_i) = a_i x_i."""
        levi = {}
        for j, (b, nj) in enumerate(X.distinct_weights):
            levi[j] = [[Fraction(b) if r == c else Fraction(0) for c in range(nj)] for r in range(nj)]
        return cls(X, levi, {})


def lie_unknowns(X: WeightedSpace, unipotent_only: bool = False) -> list:
    """Coordinates on Lie(G) (or Lie(U)): pairs (variable, monomial of its weight)."""
    out = []
    for i, a in enumerate(X.weights):
        for m in enumerate_monomials(X, a):
            if unipotent_only and sum(m) < 2:
                continue
            out.append((i, m))
    return out


def _vector_to_element(X: WeightedSpace, unknowns, v) -> LieElement:
    el = LieElement(X, {j: [[Fraction(0)] * nj for _ in range(nj)] for j, (_, nj) in enumerate(X.distinct_weights)}, {})
    for (i, m), c in zip(unknowns, v):
        if sum(m) == 1:
            k = m.index(1)
            j = X.block_of(i)
            members = [t for t in range(X.nvars) if X.weights[t] == X.weights[i]]
            el.levi[j][members.index(i)][members.index(k)] += c
        elif c:
            el.unipotent.setdefault(i, {})[m] = c
    return el


def derivation_system(f: WeightedPolynomial, unknowns, with_scalar: bool = True):
    """Matrix of xi -> xi(f) - alpha*f on the monomial basis of degree d.

    Columns follow ``unknowns`` (then alpha, if ``with_scalar``).
    """
    X = f.space
    rows_index = {e: r for r, e in enumerate(enumerate_monomials(X, f.degree))}
    ncols = len(unknowns) + (1 if with_scalar else 0)
    M = [[Fraction(0)] * ncols for _ in rows_index]
    partials = [f.partial(i) for i in range(X.nvars)]
    for col, (i, m) in enumerate(unknowns):
        for e, c in partials[i].terms.items():
            e2 = tuple(a + b for a, b in zip(e, m))
            M[rows_index[e2]][col] += c
    if with_scalar:
        for e, c in f.terms.items():
            M[rows_index[e]][-1] -= c
    return M, ncols


def lie_stabilizer(f: WeightedPolynomial) -> list:
    """Basis of {(xi, alpha) : xi(f) = alpha f} as (LieElement, alpha) pairs."""
    if f.is_zero():
        raise ZeroPolynomial("stabilizer of the zero polynomial is undefined")
    unknowns = lie_unknowns(f.space)
    M, ncols = derivation_system(f, unknowns)
    return [(_vector_to_element(f.space, unknowns, v[:-1]), v[-1]) for v in nullspace(M, ncols)]


def lie_stabilizer_dimension(f: WeightedPolynomial) -> int:
    if f.is_zero():
        raise ZeroPolynomial("stabilizer of the zero polynomial is undefined")
    unknowns = lie_unknowns(f.space)
    M, ncols = derivation_system(f, unknowns)
    return len(nullspace(M, ncols))

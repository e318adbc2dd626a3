"""Quasismoothness: Fletcher's criterion for the general member of a degree,
and the exact test V(f_0, ..., f_n) = {0} for an explicit form."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import WeightedPolynomial, WeightedSpace
from .errors import BadPrime, ZeroPolynomial
from .groebner import cone_is_origin_only


@lru_cache(maxsize=None)
def _represent(weights: tuple, target: int):
    """Nonnegative m with sum m_k * weights[k] == target, or None."""
    if target == 0:
        return (0,) * len(weights)
    if not weights or target < 0:
        return None
    a = weights[0]
    for k in range(target // a, -1, -1):
        rest = _represent(weights[1:], target - a * k)
        if rest is not None:
            return (k,) + rest
    return None


def _monomial_on(X: WeightedSpace, subset: Sequence[int], target: int, extra: int | None = None):
    m = _represent(tuple(X.weights[i] for i in subset), target)
    if m is None:
        return None
    e = [0] * X.nvars
    for i, k in zip(subset, m):
        e[i] += k
    if extra is not None:
        e[extra] += 1
    return tuple(e)


@dataclass(frozen=True)
class SubsetEvidence:
    subset: tuple
    kind: str  # "2a" or "2b"
    monomials: tuple

    def to_json(self, X: WeightedSpace):
        return {
            "subset": [X.names[i] for i in self.subset],
            "condition": self.kind,
            "monomials": [X.format_monomial(e) for e in self.monomials],
        }


@dataclass(frozen=True)
class FletcherVerdict:
    general_quasismooth: bool
    condition: str  # "1", "2" or "fails"
    variable: int | None = None
    evidence: tuple = field(default_factory=tuple)
    failing_subset: tuple | None = None

    def __bool__(self):
        return self.general_quasismooth

    def to_json(self, X: WeightedSpace):
        out = {"general_quasismooth": self.general_quasismooth, "condition": self.condition}
        if self.variable is not None:
            out["variable"] = X.names[self.variable]
        if self.evidence:
            out["evidence"] = [ev.to_json(X) for ev in self.evidence]
        if self.failing_subset is not None:
            out["failing_subset"] = [X.names[i] for i in self.failing_subset]
        return out


def _subset_evidence(X: WeightedSpace, d: int, I: tuple):
    mono = _monomial_on(X, I, d)
    if mono is not None:
        return SubsetEvidence(I, "2a", (mono,))
    found = []
    for e in range(X.nvars):
        mono = _monomial_on(X, I, d - X.weights[e], extra=e)
        if mono is not None:
            found.append(mono)
            if len(found) == len(I):
                return SubsetEvidence(I, "2b", tuple(found))
    return None


def fletcher_general(X: WeightedSpace, d: int) -> FletcherVerdict:
    """Is the general degree-d hypersurface of X quasismooth?"""
    if d < 1:
        raise ValueError("degree must be positive")
    for i, a in enumerate(X.weights):
        if a == d:
            return FletcherVerdict(True, "1", variable=i)
    evidence = []
    for k in range(1, X.nvars + 1):
        for I in itertools.combinations(range(X.nvars), k):
            ev = _subset_evidence(X, d, I)
            if ev is None:
                return FletcherVerdict(False, "fails", evidence=tuple(evidence), failing_subset=I)
            evidence.append(ev)
    return FletcherVerdict(True, "2", evidence=tuple(evidence))


def is_quasismooth(f: WeightedPolynomial, max_steps: int | None = None) -> bool:
    """V(df) = {0} in affine space. f itself is in the ideal of its partials
    (weighted Euler identity), so only the partials are used."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a hypersurface")
    partials = [f.partial(i) for i in range(f.space.nvars)]
    return cone_is_origin_only(partials, f.space.weights, max_steps=max_steps)


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))


def finite_field_common_zero(gens: Sequence, nvars: int, p: int):
    """A nonzero common zero of ``gens`` in F_p^nvars, or None (exhaustive)."""
    if nvars > 4 or p > 64:
        raise ValueError("exhaustive search limited to 4 variables and p <= 64")
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    reduced = []
    for g in gens:
        terms = getattr(g, "terms", g)
        poly = []
        for e, c in terms.items():
            if c.denominator % p == 0:
                raise BadPrime(f"coefficient {c} has denominator divisible by {p}")
            v = c.numerator * pow(c.denominator, -1, p) % p
            if v:
                poly.append((e, v))
        reduced.append(poly)
    grid = np.stack(np.meshgrid(*[np.arange(p, dtype=np.int64)] * nvars, indexing="ij"), -1).reshape(-1, nvars)
    alive = np.any(grid != 0, axis=1)
    maxdeg = max((max(e) for poly in reduced for e, _ in poly), default=0)
    powers = [[np.ones(len(grid), dtype=np.int64)] for _ in range(nvars)]
    for i in range(nvars):
        for _ in range(maxdeg):
            powers[i].append(powers[i][-1] * grid[:, i] % p)
    for poly in reduced:
        val = np.zeros(len(grid), dtype=np.int64)
        for e, c in poly:
            term = np.full(len(grid), c, dtype=np.int64)
            for i, k in enumerate(e):
                if k:
                    term = term * powers[i][k] % p
            val = (val + term) % p
        alive &= val == 0
        if not alive.any():
            return None
    idx = int(np.flatnonzero(alive)[0])
    return tuple(int(v) for v in grid[idx])


def finite_field_zero_search(f: WeightedPolynomial, p: int) -> bool:
    """Test oracle: do the partials of f share a nonzero zero over F_p?"""
    if f.space.n > 3:
        raise ValueError("finite-field search supports n <= 3")
    partials = [f.partial(i) for i in range(f.space.nvars)]
    return finite_field_common_zero(partials, f.space.nvars, p) is not None

"""Buchberger's algorithm over Q.

Polynomials are plain dicts ``{exponent tuple: coefficient}``. Internally
they are kept primitive with integer coefficients (content removed after
every reduction step); the returned reduced basis is monic over Q.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import NonHomogeneousInput, ResourceLimit

DEFAULT_MAX_STEPS = 10**6


def default_max_steps() -> int:
    env = os.environ.get("WPS_LIMIT_STEPS")
    if env:
        return int(env)
    return DEFAULT_MAX_STEPS


@dataclass(frozen=True)
class MonomialOrder:
    """Degree reverse lexicographic order, optionally after permuting the
    variables (``perm[k]`` is the variable compared in position k).

    ``weights`` replaces total degree by the weighted degree, which keeps
    Buchberger degree-by-degree on weighted-homogeneous ideals.
    """

    kind: str = "grevlex"
    perm: tuple | None = None
    weights: tuple | None = None

    def __post_init__(self):
        if self.kind != "grevlex":
            raise ValueError(f"unsupported monomial order {self.kind!r}")
        if self.weights is not None:
            if any(w < 1 for w in self.weights):
                raise ValueError("order weights must be positive")
            object.__setattr__(self, "weights", tuple(self.weights))

    def key(self, m):
        deg = sum(m) if self.weights is None else sum(w * k for w, k in zip(self.weights, m))
        if self.perm is not None:
            m = tuple(m[i] for i in self.perm)
        return (deg, tuple(-k for k in reversed(m)))


GREVLEX = MonomialOrder()


@dataclass(frozen=True)
class PolyIdeal:
    generators: tuple
    nvars: int

    def __init__(self, generators, nvars: int):
        gens = tuple(_as_dict(g) for g in generators)
        object.__setattr__(self, "generators", tuple(g for g in gens if g))
        object.__setattr__(self, "nvars", nvars)


@dataclass
class GroebnerBasis:
    polys: list
    order: MonomialOrder
    nvars: int
    reduced: bool = True
    steps: int = 0
    _keys: dict = field(default_factory=dict, repr=False)

    def _k(self, m):
        k = self._keys.get(m)
        if k is None:
            k = self._keys[m] = self.order.key(m)
        return k

    def leading_monomial(self, p):
        return max(p, key=self._k)

    @property
    def leading_monomials(self):
        return [self.leading_monomial(p) for p in self.polys]

    def contains_one(self) -> bool:
        zero = (0,) * self.nvars
        return any(set(p) == {zero} for p in self.polys)

    def reduce(self, p) -> dict:
        """Normal form of p modulo the basis (exact over Q)."""
        p = _as_dict(p)
        lms = [(self.leading_monomial(g), g) for g in self.polys]
        r = {}
        while p:
            m = max(p, key=self._k)
            c = p.pop(m)
            for lm, g in lms:
                if _divides(lm, m):
                    f = c / g[lm]
                    shift = tuple(a - b for a, b in zip(m, lm))
                    for e, v in g.items():
                        if e == lm:
                            continue
                        e2 = tuple(x + y for x, y in zip(e, shift))
                        nv = p.get(e2, 0) - f * v
                        if nv:
                            p[e2] = nv
                        else:
                            p.pop(e2, None)
                    break
            else:
                r[m] = c
        return r

    def __contains__(self, p) -> bool:
        return not self.reduce(p)


def _as_dict(p) -> dict:
    terms = getattr(p, "terms", p)
    return {tuple(e): Fraction(c) for e, c in terms.items() if c != 0}


def _to_int_poly(p: Mapping) -> dict:
    den = 1
    for c in p.values():
        den = math.lcm(den, Fraction(c).denominator)
    return {e: int(Fraction(c) * den) for e, c in p.items() if c != 0}


def _content(p: Mapping) -> int:
    g = 0
    for c in p.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


class _Reducer:
    def __init__(self, order: MonomialOrder, nvars: int, max_steps: int | None):
        self.order = order
        self.nvars = nvars
        self.max_steps = max_steps
        self.steps = 0
        self.keys = {}
        self.polys = []  # (lm, lc, poly)

    def key(self, m):
        k = self.keys.get(m)
        if k is None:
            k = self.keys[m] = self.order.key(m)
        return k

    def lm(self, p):
        return max(p, key=self.key)

    def primitive(self, p: dict) -> dict:
        if not p:
            return p
        g = _content(p)
        if self.lm_coeff(p) < 0:
            g = -g
        return {e: c // g for e, c in p.items()} if g != 1 else p

    def lm_coeff(self, p):
        return p[self.lm(p)]

    def add(self, p: dict):
        p = self.primitive(p)
        lm = self.lm(p)
        self.polys.append((lm, p[lm], p))


    def tick(self):
        self.steps += 1
        if self.max_steps is not None and self.steps > self.max_steps:
            raise ResourceLimit(f"Groebner basis computation exceeded {self.max_steps} reduction steps")

    def normal_form(self, p: dict, skip: int | None = None) -> dict:
        """Full reduction of p. ``skip`` excludes one basis index."""
        p = dict(p)
        r = {}
        key = self.key
        divisors = self.polys if skip is None else self.polys[:skip] + self.polys[skip + 1:]
        while p:
            m = max(p, key=key)
            c = p.pop(m)
            hit = None
            for lm, lc, g in divisors:
                if all(a <= b for a, b in zip(lm, m)):
                    hit = (lm, lc, g)
                    break
            if hit is None:
                r[m] = c
                continue
            lm, lc, g = hit
            shift = tuple(a - b for a, b in zip(m, lm))
            gg = math.gcd(c, lc)
            a, b = lc // gg, c // gg
            if a < 0:
                a, b = -a, -b
            if a != 1:
                for e in p:
                    p[e] *= a
                for e in r:
                    r[e] *= a
            for e, v in g.items():
                if e == lm:
                    continue
                e2 = tuple(x + y for x, y in zip(e, shift))
                nv = p.get(e2, 0) - b * v
                if nv:
                    p[e2] = nv
                else:
                    p.pop(e2, None)
            self.tick()
            cont = math.gcd(_content(p), _content(r))
            if cont > 1:
                p = {e: v // cont for e, v in p.items()}
                r = {e: v // cont for e, v in r.items()}
        return self.primitive(r)


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def buchberger(ideal: PolyIdeal, order: MonomialOrder = GREVLEX, max_steps: int | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal``.

    Normal selection strategy with Buchberger's coprime and chain criteria.
    Raises ResourceLimit when more than ``max_steps`` reduction steps are
    needed (default ``WPS_LIMIT_STEPS`` or 10**6).
    """
    if max_steps is None:
        max_steps = default_max_steps()
    nvars = ideal.nvars
    red = _Reducer(order, nvars, max_steps)
    zero = (0,) * nvars

    def unit():
        return GroebnerBasis([{zero: Fraction(1)}], order, nvars, steps=red.steps)

    for g in ideal.generators:
        if len(g) != 0 and any(len(e) != nvars for e in g):
            raise ValueError("generator exponent length does not match nvars")
        p = _to_int_poly(g)
        if set(p) == {zero}:
            return unit()
        red.add(p)

    pending = {(i, j) for j in range(len(red.polys)) for i in range(j)}
    key = red.key

    while pending:
        i, j = min(pending, key=lambda ij: (key(_lcm(red.polys[ij[0]][0], red.polys[ij[1]][0])), ij))
        pending.discard((i, j))
        lmi, lci, gi = red.polys[i]
        lmj, lcj, gj = red.polys[j]
        if all(x == 0 or y == 0 for x, y in zip(lmi, lmj)):
            continue
        L = _lcm(lmi, lmj)
        if any(
            k != i and k != j
            and _divides(red.polys[k][0], L)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(red.polys))
        ):
            continue
        s = _spoly(gi, lmi, lci, gj, lmj, lcj, L)
        h = red.normal_form(s)
        if not h:
            continue
        if set(h) == {zero}:
            return unit()
        red.add(h)
        new = len(red.polys) - 1
        pending.update((k, new) for k in range(new))

    return _interreduce(red, order)


def _spoly(gi, lmi, lci, gj, lmj, lcj, L):
    si = tuple(a - b for a, b in zip(L, lmi))
    sj = tuple(a - b for a, b in zip(L, lmj))
    gg = math.gcd(lci, lcj)
    ci, cj = lcj // gg, lci // gg
    out = {}
    for e, v in gi.items():
        e2 = tuple(a + b for a, b in zip(e, si))
        out[e2] = out.get(e2, 0) + ci * v
    for e, v in gj.items():
        e2 = tuple(a + b for a, b in zip(e, sj))
        nv = out.get(e2, 0) - cj * v
        if nv:
            out[e2] = nv
        else:
            out.pop(e2, None)
    return out


def _interreduce(red: _Reducer, order: MonomialOrder) -> GroebnerBasis:
    polys = red.polys
    keep = []
    for idx, (lm, _, _) in enumerate(polys):
        redundant = False
        for jdx, (lm2, _, _) in enumerate(polys):
            if jdx == idx or not _divides(lm2, lm):
                continue
            if lm2 != lm or jdx < idx:
                redundant = True
                break
        if not redundant:
            keep.append(polys[idx])
    red.polys = keep
    out = []
    for idx in range(len(keep)):
        p = red.normal_form(keep[idx][2], skip=idx)
        lc = p[red.lm(p)]
        out.append({e: Fraction(c, lc) for e, c in p.items()})
    key = red.key
    out.sort(key=lambda p: key(max(p, key=key)))
    return GroebnerBasis(out, order, red.nvars, steps=red.steps)


def groebner(gens: Sequence, nvars: int, order: MonomialOrder = GREVLEX, max_steps: int | None = None) -> GroebnerBasis:
    return buchberger(PolyIdeal(gens, nvars), order, max_steps)


def weighted_degree_of(p: Mapping, weights: Sequence[int]):
    """Common weighted degree of the terms of p, or None if inhomogeneous."""
    degs = {sum(a * k for a, k in zip(weights, e)) for e in p}
    return degs.pop() if len(degs) == 1 else None


def cone_is_origin_only(gens: Sequence, weights: Sequence[int], max_steps: int | None = None) -> bool:
    """True iff the weighted-homogeneous ``gens`` have no common zero other
    than the origin over the algebraic closure."""
    polys = [_as_dict(g) for g in gens]
    polys = [p for p in polys if p]
    nvars = len(weights)
    for p in polys:
        if weighted_degree_of(p, weights) is None:
            raise NonHomogeneousInput("generator is not weighted-homogeneous")
    if not polys:
        return False
    gb = groebner(polys, nvars, MonomialOrder(weights=weights), max_steps=max_steps)
    return gb.contains_one() or _has_all_pure_powers(gb)


def _has_all_pure_powers(gb: GroebnerBasis) -> bool:
    pure = set()
    for lm in gb.leading_monomials:
        support = [i for i, k in enumerate(lm) if k]
        if len(support) == 1:
            pure.add(support[0])
    return len(pure) == gb.nvars


def has_torus_zero(gens: Sequence, nvars: int, max_steps: int | None = None, weights: Sequence[int] | None = None) -> bool:
    """True iff the gens have a common zero with all coordinates nonzero.

    Adjoins t with t*x_0*...*x_{n-1} - 1 and tests whether 1 is in the
    resulting ideal. ``weights`` (a grading the gens are homogeneous for)
    only affects speed.
    """
    if nvars < 1:
        raise ValueError("nvars must be positive")
    polys = [p for p in (_as_dict(g) for g in gens) if p]
    if not polys:
        return True
    order = GREVLEX
    if weights is not None:
        if any(weighted_degree_of(p, weights) is None for p in polys):
            raise NonHomogeneousInput("generator is not weighted-homogeneous")
        order = MonomialOrder(weights=tuple(weights))
    # reduce the original ideal first: far less coefficient swell than
    # feeding the raw generators together with the t-relation
    base = groebner(polys, nvars, order, max_steps=max_steps)
    if base.contains_one():
        return False
    if weights is not None and _has_all_pure_powers(base):
        return False  # a zero-dimensional cone is the origin
    budget = None if max_steps is None else max(max_steps - base.steps, 0)
    lifted = [{e + (0,): c for e, c in p.items()} for p in base.polys]
    lifted.append({(1,) * (nvars + 1): Fraction(1), (0,) * (nvars + 1): Fraction(-1)})
    lifted_order = GREVLEX if weights is None else MonomialOrder(weights=tuple(weights) + (1,))
    gb = groebner(lifted, nvars + 1, lifted_order, max_steps=budget)
    return not gb.contains_one()

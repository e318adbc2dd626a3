"""Weighted projective spaces, graded monomials and sparse exact polynomials.

Coefficients are ``fractions.Fraction`` throughout; nothing here touches
floating point.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import (
    DegreeMismatch,
    GradingViolation,
    IndexOutOfRange,
    NotWellFormed,
    PolynomialSyntaxError,
    TooFewVariables,
    UnknownVariable,
)

Exponent = tuple  # tuple[int, ...] of length n + 1


@dataclass(frozen=True)
class WeightedSpace:
    """The weighted projective space P(a_0, ..., a_n) with a_0 <= ... <= a_n.

    Build instances with :func:`make_space`, which sorts the weights and
    checks well-formedness.
    """

    weights: tuple
    names: tuple
    distinct_weights: tuple = field(init=False)

    def __post_init__(self):
        blocks = [(w, len(list(g))) for w, g in itertools.groupby(self.weights)]
        object.__setattr__(self, "distinct_weights", tuple(blocks))

    @property
    def n(self) -> int:
        """Projective dimension; there are n + 1 variables."""
        return len(self.weights) - 1

    @property
    def nvars(self) -> int:
        return len(self.weights)

    @property
    def max_weight(self) -> int:
        return self.weights[-1]

    @property
    def maximal_indices(self) -> tuple:
        return tuple(i for i, a in enumerate(self.weights) if a == self.max_weight)

    @property
    def n_max(self) -> int:
        """Multiplicity n_l of the largest weight."""
        return self.distinct_weights[-1][1]

    @property
    def lcm(self) -> int:
        return math.lcm(*self.weights)

    def is_well_formed(self) -> bool:
        return _well_formed(self.weights)

    def block_of(self, i: int) -> int:
        """Index j of the distinct-weight block containing variable i."""
        a = self.weights[i]
        for j, (b, _) in enumerate(self.distinct_weights):
            if b == a:
                return j
        raise AssertionError("unreachable")

    def index(self, name: str) -> int:
        """Variable index for a declared name or an ``x<i>`` alias."""
        if name in self.names:
            return self.names.index(name)
        m = re.fullmatch(r"x(\d+)", name)
        if m and int(m.group(1)) < self.nvars:
            return int(m.group(1))
        raise UnknownVariable(f"unknown variable {name!r}; declared: {', '.join(self.names)}")

    def weighted_degree(self, e: Sequence[int]) -> int:
        return sum(a * i for a, i in zip(self.weights, e))

    def format_monomial(self, e: Sequence[int]) -> str:
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts) if parts else "1"

    def to_json(self):
        return {
            "weights": list(self.weights),
            "names": list(self.names),
            "distinct_weights": [list(b) for b in self.distinct_weights],
            "well_formed": self.is_well_formed(),
            "lcm": self.lcm,
        }

    def __str__(self):
        return "P(" + ",".join(map(str, self.weights)) + ")"


def _well_formed(weights: Sequence[int]) -> bool:
    n = len(weights) - 1
    return all(math.gcd(*sub) == 1 for sub in itertools.combinations(weights, n))


def default_names(nvars: int) -> tuple:
    if nvars <= 3:
        return ("x", "y", "z")[:nvars]
    return tuple(f"x{i}" for i in range(nvars))


def make_space(weights: Iterable[int], names: Sequence[str] | None = None, *, check_well_formed: bool = True) -> WeightedSpace:
    """Build P(weights), sorting weights ascending.

    ``check_well_formed=False`` admits spaces such as P(2,3), which are fine
    for purely combinatorial questions (monomials, Fletcher's criterion).
    """
    weights = list(weights)
    if not weights:
        raise TooFewVariables("need at least two weights")
    if any(not isinstance(a, int) or a < 1 for a in weights):
        raise ValueError(f"weights must be positive integers, got {weights}")
    if len(weights) < 2:
        raise TooFewVariables("P(a_0) has n = 0; need at least two weights")
    if names is None:
        order = sorted(range(len(weights)), key=lambda i: weights[i])
        names = default_names(len(weights))
        weights = [weights[i] for i in order]
    else:
        if len(names) != len(weights) or len(set(names)) != len(names):
            raise ValueError("names must be distinct and match the weights")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                raise ValueError(f"invalid variable name {name!r}")
        pairs = sorted(zip(weights, names), key=lambda p: p[0])
        weights = [p[0] for p in pairs]
        names = tuple(p[1] for p in pairs)
    if check_well_formed and not _well_formed(weights):
        bad = [s for s in itertools.combinations(weights, len(weights) - 1) if math.gcd(*s) != 1][0]
        raise NotWellFormed(f"P{tuple(weights)} is not well-formed: gcd{bad} = {math.gcd(*bad)}")
    return WeightedSpace(tuple(weights), tuple(names))


def is_cartier_degree(X: WeightedSpace, d: int) -> bool:
    if d < 1:
        raise ValueError("degree must be positive")
    return d % X.lcm == 0


def monomial_key(X: WeightedSpace, e: Sequence[int]):
    """Canonical order: ascending degree in the top-weight block, then
    descending lexicographic on the exponent vector."""
    top = sum(e[i] for i in X.maximal_indices)
    return (top, tuple(-k for k in e))


def _solutions(weights: Sequence[int], d: int):
    if len(weights) == 1:
        if d % weights[0] == 0:
            yield (d // weights[0],)
        return
    a = weights[0]
    for k in range(d // a, -1, -1):
        for rest in _solutions(weights[1:], d - a * k):
            yield (k,) + rest


def enumerate_monomials(X: WeightedSpace, d: int) -> list:
    """All exponent vectors of weighted degree d, in canonical order."""
    if d < 0:
        return []
    return sorted(_solutions(X.weights, d), key=lambda e: monomial_key(X, e))


def graded_dimension(X: WeightedSpace, d: int) -> int:
    return len(enumerate_monomials(X, d))


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class WeightedPolynomial:
    """Weighted-homogeneous polynomial with exact rational coefficients.

    Immutable. The zero polynomial is allowed and keeps its nominal degree.
    """

    __slots__ = ("space", "degree", "_terms", "_hash")

    def __init__(self, space: WeightedSpace, degree: int, terms: Mapping | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != space.nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent vector {e}")
            c = Fraction(c)
            if c == 0:
                continue
            if space.weighted_degree(e) != degree:
                raise GradingViolation(
                    f"monomial {space.format_monomial(e)} has weighted degree "
                    f"{space.weighted_degree(e)}, expected {degree}"
                )
            clean[e] = c
        ordered = sorted(clean, key=lambda e: monomial_key(space, e))
        self.space = space
        self.degree = degree
        self._terms = {e: clean[e] for e in ordered}
        self._hash = None

    @classmethod
    def zero(cls, space: WeightedSpace, degree: int) -> "WeightedPolynomial":
        return cls(space, degree)

    @classmethod
    def variable(cls, space: WeightedSpace, i: int) -> "WeightedPolynomial":
        if not 0 <= i < space.nvars:
            raise IndexOutOfRange(f"variable index {i} out of range 0..{space.n}")
        e = [0] * space.nvars
        e[i] = 1
        return cls(space, space.weights[i], {tuple(e): 1})

    @classmethod
    def monomial(cls, space: WeightedSpace, e: Sequence[int], coeff=1) -> "WeightedPolynomial":
        return cls(space, space.weighted_degree(e), {tuple(e): coeff})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    @property
    def support(self) -> list:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        if self.space.weights != other.space.weights:
            return False
        if not self._terms and not other._terms:
            return True
        return self.degree == other.degree and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.space.weights, self.degree if self._terms else None, frozenset(self._terms.items())))
        return self._hash

    def _check_compatible(self, other: "WeightedPolynomial"):
        if self.space.weights != other.space.weights:
            raise GradingViolation("polynomials live in different spaces")

    def _sum_degree(self, other):
        if self.degree == other.degree or not other._terms:
            return self.degree
        if not self._terms:
            return other.degree
        raise GradingViolation(f"cannot add degree {self.degree} and degree {other.degree}")

    def __add__(self, other):
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return WeightedPolynomial(self.space, self._sum_degree(other), out)

    def __neg__(self):
        return WeightedPolynomial(self.space, self.degree, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return WeightedPolynomial(self.space, self.degree, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, WeightedPolynomial):
            return NotImplemented
        self._check_compatible(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return WeightedPolynomial(self.space, self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = WeightedPolynomial(self.space, 0, {(0,) * self.space.nvars: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def partial(self, i: int) -> "WeightedPolynomial":
        return partial_derivative(self, i)

    def substitute(self, subst: Mapping) -> "WeightedPolynomial":
        return apply_substitution(self, subst)

    def evaluate(self, point: Sequence):
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e, c in self._terms.items():
            mono = self.space.format_monomial(e)
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if mono == "1":
                body = _fmt_coeff(a)
            elif a == 1:
                body = mono
            else:
                body = f"{_fmt_coeff(a)}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = to_text

    def __repr__(self):
        return f"WeightedPolynomial({self.space}, {self.degree}, {self.to_text()!r})"

    def to_json(self):
        return {"degree": self.degree, "text": self.to_text()}


def partial_derivative(f: WeightedPolynomial, i: int) -> WeightedPolynomial:
    X = f.space
    if not 0 <= i < X.nvars:
        raise IndexOutOfRange(f"variable index {i} out of range 0..{X.n}")
    out = {}
    for e, c in f.terms.items():
        if e[i]:
            e2 = list(e)
            e2[i] -= 1
            out[tuple(e2)] = c * e[i]
    return WeightedPolynomial(X, f.degree - X.weights[i], out)


def _resolve_var(X: WeightedSpace, key) -> int:
    if isinstance(key, str):
        return X.index(key)
    if not 0 <= key < X.nvars:
        raise IndexOutOfRange(f"variable index {key} out of range 0..{X.n}")
    return key


def apply_substitution(f: WeightedPolynomial, subst: Mapping) -> WeightedPolynomial:
    """Replace variables by weighted forms of the same weight and expand.

    Keys may be indices or names; unmapped variables are left alone.
    """
    X = f.space
    images = [WeightedPolynomial.variable(X, i) for i in range(X.nvars)]
    for key, value in subst.items():
        i = _resolve_var(X, key)
        if value.space.weights != X.weights:
            raise GradingViolation("substituted value lives in a different space")
        if value.degree != X.weights[i] and not value.is_zero():
            raise GradingViolation(
                f"image of {X.names[i]} has weighted degree {value.degree}, expected {X.weights[i]}"
            )
        images[i] = WeightedPolynomial(X, X.weights[i], value.terms)
    powers = [{0: images[i] ** 0, 1: images[i]} for i in range(X.nvars)]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * images[i]
        return cache[k]

    result = WeightedPolynomial.zero(X, f.degree)
    for e, c in f.terms.items():
        term = WeightedPolynomial(X, 0, {(0,) * X.nvars: c})
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        result = result + term
    return WeightedPolynomial(X, f.degree, result.terms)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("ident", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise PolynomialSyntaxError(f"unexpected character {ch!r}", start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


def parse_polynomial(X: WeightedSpace, d: int, text: str) -> WeightedPolynomial:
    """Parse ``text`` as a weighted form of degree ``d`` on ``X``.

    Grammar: signed terms joined by ``+``/``-``; a term is a ``*``-product of
    rational constants (``p`` or ``p/q``) and powers ``var^k``.
    """
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise PolynomialSyntaxError(f"expected {kind}, found {what}", tok[2])
        pos += 1
        return tok

    def term():
        nonlocal pos
        coeff = Fraction(1)
        e = [0] * X.nvars
        start = peek()[2]
        while True:
            tok = peek()
            if tok[0] == "num":
                pos += 1
                num = tok[1]
                if peek()[0] == "/":
                    pos += 1
                    den = take("num")
                    if den[1] == 0:
                        raise PolynomialSyntaxError("zero denominator", den[2])
                    coeff *= Fraction(num, den[1])
                else:
                    coeff *= num
            elif tok[0] == "ident":
                pos += 1
                i = X.index(tok[1])
                k = 1
                if peek()[0] == "^":
                    pos += 1
                    k = take("num")[1]
                e[i] += k
            else:
                what = "end of input" if tok[0] == "end" else repr(tok[1])
                raise PolynomialSyntaxError(f"expected a coefficient or variable, found {what}", tok[2])
            if peek()[0] == "*":
                pos += 1
                continue
            return coeff, tuple(e), start

    terms = {}
    sign = 1
    if peek()[0] in "+-":
        sign = -1 if peek()[0] == "-" else 1
        pos += 1
    while True:
        coeff, e, start = term()
        coeff *= sign
        if coeff != 0:
            deg = X.weighted_degree(e)
            if deg != d:
                raise DegreeMismatch(
                    f"term {text[start:tokens[pos][2]].strip()!r} has weighted degree {deg}, expected {d}"
                )
            terms[e] = terms.get(e, 0) + coeff
        tok = peek()
        if tok[0] == "end":
            break
        if tok[0] not in "+-":
            raise PolynomialSyntaxError(f"expected '+' or '-', found {tok[1]!r}", tok[2])
        sign = -1 if tok[0] == "-" else 1
        pos += 1
    return WeightedPolynomial(X, d, terms)


def random_polynomial(X: WeightedSpace, d: int, rng, density: float = 1.0) -> WeightedPolynomial:
    """Random form of degree d; each monomial kept with probability
    ``density``, coefficients uniform in {-9..9} minus 0."""
    coeffs = [c for c in range(-9, 10) if c]
    terms = {}
    for e in enumerate_monomials(X, d):
        if density >= 1 or rng.random() < density:
            terms[e] = rng.choice(coeffs)
    return WeightedPolynomial(X, d, terms)

"""Exact semigroup weights and sparse multivariate polynomial arithmetic.

Vertex weights live in a commutative semigroup with two realizations: formal
multisets of generator labels, and fixed-length vectors of exact complex
scalars.  Polynomials are sparse maps from monomials to exact complex-rational
coefficients over four variable families: one gamma variable per edge, one x
variable per semigroup element, a shared theta/q variable, and the classical
Tutte pair x, y.

All values are immutable and all operations are pure, so everything here is
safe to share across threads.  Equality of polynomials is decidable because
coefficients and weight components are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Tuple, Union

from .errors import EvaluationError

__all__ = [
    "ExactComplex",
    "FormalWeight",
    "FieldWeight",
    "Weight",
    "weight_add",
    "Var",
    "THETA",
    "TUTTE_X",
    "TUTTE_Y",
    "gamma_var",
    "weight_var",
    "var_text",
    "SparsePolynomial",
    "poly_add",
    "poly_mul",
    "coefficient_of",
    "evaluate",
]

_ZERO = Fraction(0)


def _fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # Fraction(float) is the exact binary value, so no precision is lost.
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


@dataclass(frozen=True)
class ExactComplex:
    """Complex scalar with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction = _ZERO

    @staticmethod
    def of(value) -> "ExactComplex":
        """Coerce an int, float, Fraction, complex, or ExactComplex."""
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, complex):
            return ExactComplex(_fraction(value.real), _fraction(value.imag))
        return ExactComplex(_fraction(value), _ZERO)

    def __post_init__(self):
        object.__setattr__(self, "re", _fraction(self.re))
        object.__setattr__(self, "im", _fraction(self.im))

    def __add__(self, other) -> "ExactComplex":
        other = ExactComplex.of(other)
        return ExactComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def __sub__(self, other) -> "ExactComplex":
        return self + (-ExactComplex.of(other))

    def __rsub__(self, other) -> "ExactComplex":
        return ExactComplex.of(other) + (-self)

    def __mul__(self, other) -> "ExactComplex":
        other = ExactComplex.of(other)
        return ExactComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "ExactComplex":
        if exponent < 0:
            raise ValueError("negative exponents are not supported")
        result = ExactComplex(Fraction(1))
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __abs__(self) -> float:
        return abs(complex(self))

    def text(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"({self.re}{sign}{abs(self.im)}i)"


_CZERO = ExactComplex(_ZERO)
_CONE = ExactComplex(Fraction(1))


@dataclass(frozen=True)
class FormalWeight:
    """Multiset of generator labels; addition is multiset union."""

    labels: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(sorted(self.labels)))

    def __add__(self, other) -> "FormalWeight":
        if not isinstance(other, FormalWeight):
            raise TypeError("cannot add a formal weight to a field weight")
        return FormalWeight(self.labels + other.labels)

    def text(self) -> str:
        return "+".join(self.labels)


@dataclass(frozen=True)
class FieldWeight:
    """Length-q vector of exact complex field values; addition is componentwise."""

    values: Tuple[ExactComplex, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(ExactComplex.of(v) for v in self.values))

    @staticmethod
    def zero(q: int) -> "FieldWeight":
        return FieldWeight((0,) * q)

    @property
    def q(self) -> int:
        return len(self.values)

    def __add__(self, other) -> "FieldWeight":
        if not isinstance(other, FieldWeight):
            raise TypeError("cannot add a field weight to a formal weight")
        if len(self.values) != len(other.values):
            raise TypeError(
                f"cannot add field weights of lengths {len(self.values)} and {len(other.values)}"
            )
        return FieldWeight(tuple(a + b for a, b in zip(self.values, other.values)))

    def text(self) -> str:
        return "[" + ",".join(v.text() for v in self.values) + "]"


Weight = Union[FormalWeight, FieldWeight]


def weight_add(a: Weight, b: Weight) -> Weight:
    """Commutative semigroup sum of two vertex weights.

    Raises TypeError when the realizations differ or field vector lengths
    disagree.
    """
    if isinstance(a, (FormalWeight, FieldWeight)) and type(a) is type(b):
        return a + b
    raise TypeError(
        f"cannot add weights of kinds {type(a).__name__} and {type(b).__name__}"
    )


# A variable key is a small tuple: ("x", weight) for a semigroup-indexed
# variable, ("g", edge_id) for an edge weight, ("q",) for theta/q, and
# ("t", "x") / ("t", "y") for the classical Tutte pair.
Var = tuple

THETA: Var = ("q",)
TUTTE_X: Var = ("t", "x")
TUTTE_Y: Var = ("t", "y")


def gamma_var(edge_id: str) -> Var:
    return ("g", edge_id)


def weight_var(weight: Weight) -> Var:
    return ("x", weight)


def var_text(var: Var) -> str:
    kind = var[0]
    if kind == "x":
        return "x{" + var[1].text() + "}"
    if kind == "q":
        return "q"
    if kind == "g":
        return "g{" + var[1] + "}"
    if kind == "t":
        return var[1]
    raise ValueError(f"unknown variable kind {kind!r}")


_KIND_RANK = {"x": 0, "q": 1, "g": 2, "t": 3}


def _var_rank(var: Var):
    # Ranks compare structured keys, not rendered text, so that e.g. the
    # variable of weight {a} precedes the variable of weight {a, b}.
    kind = var[0]
    if kind == "x":
        weight = var[1]
        if isinstance(weight, FormalWeight):
            key = (0, weight.labels)
        else:
            key = (1, tuple((v.re, v.im) for v in weight.values))
        return (_KIND_RANK[kind], key)
    if kind == "q":
        return (_KIND_RANK[kind], "")
    return (_KIND_RANK[kind], var[1])


# A monomial is a tuple of (var, exponent) pairs sorted by _var_rank.
Monomial = Tuple[Tuple[Var, int], ...]


def _canonical_mono(pairs) -> Monomial:
    acc: dict = {}
    for var, exp in pairs:
        if exp < 0:
            raise ValueError("negative exponents are not supported")
        if exp:
            acc[var] = acc.get(var, 0) + exp
    return tuple(sorted(acc.items(), key=lambda item: _var_rank(item[0])))


def _mono_order_key(mono: Monomial):
    total = sum(exp for _, exp in mono)
    return (-total, tuple((_var_rank(var), -exp) for var, exp in mono))


class SparsePolynomial:
    """Exact sparse polynomial with canonical equality and a bit-stable text form.

    Terms map canonical monomials to nonzero ExactComplex coefficients.
    Addition and multiplication are exact; instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        self._terms = terms if terms is not None else {}

    @classmethod
    def zero(cls) -> "SparsePolynomial":
        return cls()

    @classmethod
    def one(cls) -> "SparsePolynomial":
        return cls.constant(1)

    @classmethod
    def constant(cls, value) -> "SparsePolynomial":
        c = ExactComplex.of(value)
        return cls({(): c} if not c.is_zero() else {})

    @classmethod
    def variable(cls, var: Var, power: int = 1) -> "SparsePolynomial":
        if power < 0:
            raise ValueError("negative exponents are not supported")
        if power == 0:
            return cls.one()
        return cls({((var, power),): _CONE})

    @classmethod
    def from_terms(cls, terms: Iterable) -> "SparsePolynomial":
        """Build from (monomial, coefficient) pairs.

        Each monomial may be a mapping var -> exponent or an iterable of
        (var, exponent) pairs; like terms are combined and zeros dropped.
        """
        acc: dict = {}
        for pairs, coeff in terms:
            if isinstance(pairs, Mapping):
                pairs = pairs.items()
            mono = _canonical_mono(pairs)
            c = acc.get(mono, _CZERO) + ExactComplex.of(coeff)
            if c.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = c
        return cls(acc)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def variables(self) -> set:
        seen = set()
        for mono in self._terms:
            for var, _ in mono:
                seen.add(var)
        return seen

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __add__(self, other) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            other = SparsePolynomial.constant(other)
        acc = dict(self._terms)
        for mono, coeff in other._terms.items():
            c = acc.get(mono, _CZERO) + coeff
            if c.is_zero():
                acc.pop(mono, None)
            else:
                acc[mono] = c
        return SparsePolynomial(acc)

    __radd__ = __add__

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            other = SparsePolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> "SparsePolynomial":
        return SparsePolynomial.constant(other) + (-self)

    def __mul__(self, other) -> "SparsePolynomial":
        if not isinstance(other, SparsePolynomial):
            other = SparsePolynomial.constant(other)
        acc: dict = {}
        for mono_a, coeff_a in self._terms.items():
            for mono_b, coeff_b in other._terms.items():
                if mono_b:
                    mono = _canonical_mono(mono_a + mono_b)
                else:
                    mono = mono_a
                c = acc.get(mono, _CZERO) + coeff_a * coeff_b
                if c.is_zero():
                    acc.pop(mono, None)
                else:
                    acc[mono] = c
        return SparsePolynomial(acc)

    __rmul__ = __mul__

    def coefficient_of(self, var: Var, power: int) -> "SparsePolynomial":
        """The coefficient of var**power: matching monomials with var removed."""
        acc: dict = {}
        for mono, coeff in self._terms.items():
            exp = 0
            rest = []
            for v, e in mono:
                if v == var:
                    exp = e
                else:
                    rest.append((v, e))
            if exp == power:
                key = tuple(rest)
                c = acc.get(key, _CZERO) + coeff
                if c.is_zero():
                    acc.pop(key, None)
                else:
                    acc[key] = c
        return SparsePolynomial(acc)

    def evaluate(self, bindings: Mapping[Var, object]):
        """Substitute every variable and return a scalar.

        Returns an ExactComplex when every binding is exact (int, Fraction,
        or ExactComplex) and a complex float otherwise.  Raises
        EvaluationError when a variable of the polynomial is unbound.
        """
        needed = self.variables()
        missing = needed - set(bindings)
        if missing:
            name = var_text(sorted(missing, key=_var_rank)[0])
            raise EvaluationError(f"unbound variable {name}")
        exact = all(
            isinstance(bindings[v], (int, Fraction, ExactComplex)) for v in needed
        )
        order = sorted(self._terms, key=_mono_order_key)
        if exact:
            total = _CZERO
            for mono in order:
                term = self._terms[mono]
                for var, exp in mono:
                    term = term * (ExactComplex.of(bindings[var]) ** exp)
                total = total + term
            return total
        total = 0j
        for mono in order:
            term = complex(self._terms[mono])
            for var, exp in mono:
                term *= complex(bindings[var]) ** exp
            total += term
        return total

    def canonical_text(self) -> str:
        """Deterministic text form: monomials by descending total degree, then
        by variable rank; factors inside a monomial alphabetically; reduced
        fraction coefficients."""
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=_mono_order_key):
            piece = self._terms[mono].text()
            for text, exp in sorted((var_text(v), e) for v, e in mono):
                piece += "*" + (text if exp == 1 else f"{text}^{exp}")
            parts.append(piece)
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.canonical_text()

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.canonical_text()})"


def poly_add(p: SparsePolynomial, r: SparsePolynomial) -> SparsePolynomial:
    return p + r


def poly_mul(p: SparsePolynomial, r: SparsePolynomial) -> SparsePolynomial:
    return p * r


def coefficient_of(p: SparsePolynomial, var: Var, power: int) -> SparsePolynomial:
    return p.coefficient_of(var, power)


def evaluate(p: SparsePolynomial, bindings: Mapping[Var, object]):
    return p.evaluate(bindings)

"""Exact arithmetic in the (x, theta) divisor-class ring of a symmetric power.

For a smooth projective curve of genus g, the d-th symmetric power C_d is a
smooth projective variety of dimension d carrying two basic divisor classes:
x, the class of the embedding D' -> D' + p of C_{d-1}, and theta, the
pullback of a theta-divisor under the Abel-Jacobi map.  This module models
the subring of algebraic cohomology generated by x and theta as formal
polynomials with exact rational coefficients, graded by total degree and
truncated above degree d (those classes vanish for dimension reasons).

Top-degree monomials evaluate by the Poincare formula

    x^k * theta^(d-k) = g! / (g-d+k)!        for 0 <= k <= d <= g,

extended linearly; `pair` composes a ring product with this evaluation.

Equality of classes is formal (coefficient-wise): no relations among the
monomials x^i theta^j below top degree are imposed, so the ring is valid
for any curve, not only those whose Neron-Severi space the two classes span.

Everything here is immutable after construction and all operations are pure
functions, so values can be shared freely between concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

__all__ = [
    "Ambient",
    "NSClass",
    "canonical_class",
    "eval_top",
    "format_class",
    "format_rational",
    "pair",
]

RationalInput = int | Fraction


def _coerce_coeff(value: RationalInput) -> Fraction:
    if isinstance(value, float):
        raise TypeError("coefficients must be exact rationals, not floats")
    return Fraction(value)


@dataclass(frozen=True)
class Ambient:
    """The pair (g, d): genus of the curve and index of the symmetric power."""

    g: int
    d: int

    def __post_init__(self) -> None:
        if self.g < 2:
            raise ValueError(f"genus must be at least 2, got g={self.g}")
        if self.d < 1:
            raise ValueError(f"symmetric power index must be at least 1, got d={self.d}")

    def zero(self) -> "NSClass":
        return NSClass(self, {})

    def one(self) -> "NSClass":
        return NSClass(self, {(0, 0): 1})

    def x(self) -> "NSClass":
        return NSClass(self, {(1, 0): 1})

    def theta(self) -> "NSClass":
        return NSClass(self, {(0, 1): 1})

    def monomial(self, i: int, j: int, coeff: RationalInput = 1) -> "NSClass":
        return NSClass(self, {(i, j): coeff})

    def __str__(self) -> str:
        return f"(g={self.g}, d={self.d})"


class NSClass:
    """A formal polynomial in x and theta with exact rational coefficients.

    Terms are stored sparsely as a map (i, j) -> coefficient for the monomial
    x^i theta^j.  Terms of total degree above the ambient d are dropped at
    construction, and zero coefficients are pruned, so equal classes always
    have identical term maps.
    """

    __slots__ = ("ambient", "_terms")

    def __init__(self, ambient: Ambient, terms=None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), raw in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term x^{i}*theta^{j}")
            if i + j > ambient.d:
                continue  # vanishes for dimension reasons
            coeff = _coerce_coeff(raw)
            if coeff:
                clean[(i, j)] = coeff
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NSClass is immutable")

    # -- inspection ---------------------------------------------------------

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def coefficient(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def pure_degree(self) -> int | None:
        """Total degree if the class is homogeneous and nonzero, else None."""
        degrees = {i + j for (i, j) in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def homogeneous_part(self, k: int) -> "NSClass":
        return NSClass(self.ambient, {key: c for key, c in self._terms.items() if key[0] + key[1] == k})

    def truncate_degree(self, k: int) -> "NSClass":
        return NSClass(self.ambient, {key: c for key, c in self._terms.items() if key[0] + key[1] <= k})

    # -- ring structure -----------------------------------------------------

    def _require_same_ambient(self, other: "NSClass") -> None:
        if self.ambient != other.ambient:
            raise ValueError(f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other):
        if not isinstance(other, NSClass):
            return NotImplemented
        self._require_same_ambient(other)
        merged = dict(self._terms)
        for key, c in other._terms.items():
            merged[key] = merged.get(key, Fraction(0)) + c
        return NSClass(self.ambient, merged)

    def __sub__(self, other):
        if not isinstance(other, NSClass):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return NSClass(self.ambient, {key: -c for key, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, NSClass):
            self._require_same_ambient(other)
            product: dict[tuple[int, int], Fraction] = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    key = (i1 + i2, j1 + j2)
                    if key[0] + key[1] > self.ambient.d:
                        continue
                    product[key] = product.get(key, Fraction(0)) + c1 * c2
            return NSClass(self.ambient, product)
        if isinstance(other, (int, Fraction)):
            scale = _coerce_coeff(other)
            return NSClass(self.ambient, {key: c * scale for key, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _coerce_coeff(other))
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ambient.one()
        for _ in range(exponent):
            result = result * self
        return result

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NSClass):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self._terms.items())))

    def __str__(self) -> str:
        return format_class(self)

    def __repr__(self) -> str:
        return f"NSClass{self.ambient}: {format_class(self)}"


def format_rational(q: RationalInput) -> str:
    """Canonical string for an exact rational: "p/q", or "p" when integral."""
    return str(_coerce_coeff(q))


def _format_monomial(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("theta" if j == 1 else f"theta^{j}")
    return "*".join(parts)


def format_class(c: NSClass) -> str:
    """Canonical textual form, the interchange format for the CLI and reports.

    Terms are ordered by total degree descending, then by x-exponent
    ascending; coefficients are always written explicitly, e.g.
    "1/6*theta^3 - 1*x*theta^2 + 3*x^2*theta - 4*x^3".
    """
    if c.is_zero():
        return "0"
    keys = sorted(c.terms(), key=lambda key: (-(key[0] + key[1]), key[0]))
    pieces = []
    for index, (i, j) in enumerate(keys):
        coeff = c.coefficient(i, j)
        monomial = _format_monomial(i, j)
        body = format_rational(abs(coeff)) + (f"*{monomial}" if monomial else "")
        if index == 0:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


def eval_top(c: NSClass) -> Fraction:
    """Evaluate a top-degree class as a rational number.

    By the Poincare formula, x^k theta^(d-k) = g!/(g-d+k)! on C_d when
    d <= g; the input must be homogeneous of degree exactly d (the zero
    class is allowed and evaluates to 0).
    """
    g, d = c.ambient.g, c.ambient.d
    if d > g:
        raise ValueError(f"evaluation undefined: requires d <= g, got {c.ambient}")
    if c.is_zero():
        return Fraction(0)
    if c.pure_degree() != d:
        raise ValueError(f"not a top-degree class: need pure degree {d}, got {format_class(c)}")
    total = Fraction(0)
    for (i, _j), coeff in c.terms().items():
        total += coeff * (factorial(g) // factorial(g - d + i))
    return total


def pair(a: NSClass, b: NSClass) -> Fraction:
    """Intersection pairing of classes of complementary degree.

    Multiplies and evaluates the top-degree product; symmetric and bilinear
    over exact rational scalars.
    """
    a._require_same_ambient(b)
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    da, db = a.pure_degree(), b.pure_degree()
    if da is None or db is None or da + db != a.ambient.d:
        raise ValueError(
            f"degree mismatch: degrees must be pure and sum to d={a.ambient.d}, "
            f"got {da} and {db}"
        )
    return eval_top(a * b)


def canonical_class(amb: Ambient) -> NSClass:
    """Class of the canonical bundle of C_d: theta + (g-d-1)*x."""
    return NSClass(amb, {(0, 1): 1, (1, 0): amb.g - amb.d - 1})

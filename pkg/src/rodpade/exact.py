"""Exact univariate polynomials and truncated Laurent tails at infinity.

All coefficients are ``fractions.Fraction``: canonical lowest terms, positive
denominator, arbitrary precision.  A :class:`LaurentTail` stores a truncation
of an element of (1/z)*Q[[1/z]] together with the number of coefficients that
are guaranteed correct, so no operation can ever report a coefficient beyond
what was actually proved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

#: degree of the zero polynomial (keeps deg(P*Q) = deg P + deg Q testable)
NEG_INF = float("-inf")

#: order at infinity of the zero Laurent series
INF = math.inf

Scalar = Union[int, Fraction]


class InsufficientDepthError(Exception):
    """An operation would need Laurent coefficients beyond the proved depth."""


def format_rational(x: Fraction) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def log_int(n: int) -> float:
    """log of a positive integer, safe for huge values."""
    if n <= 0:
        raise ValueError("log of nonpositive integer")
    if n.bit_length() <= 62:
        return math.log(n)
    shift = n.bit_length() - 62
    return math.log(n >> shift) + shift * math.log(2)


def log_fraction(q: Fraction) -> float:
    """log of a positive rational, via exact integer parts."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log of nonpositive rational")
    return log_int(q.numerator) - log_int(q.denominator)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


class Poly:
    """Dense univariate polynomial over Q.

    ``coeffs[i]`` is the coefficient of z^i; trailing zeros are stripped so
    the representation is canonical and the zero polynomial is the empty
    tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        return cls((0,) * k + (c,))

    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self):
        """Degree, or NEG_INF for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> "Poly":
        return Poly(c / Fraction(scalar) for c in self.coeffs)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result, base = Poly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self, k: int = 1) -> "Poly":
        """k-th derivative, exact."""
        if k < 0:
            raise ValueError("negative derivative order")
        cs = self.coeffs
        for _ in range(k):
            cs = tuple(Fraction(i) * c for i, c in enumerate(cs))[1:]
        return Poly(cs)

    def shift(self, k: int) -> "Poly":
        """Multiply by z^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        return Poly((Fraction(0),) * k + self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(x) + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _as_poly(other)
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(format_rational(c))
            else:
                mono = "z" if i == 1 else f"z^{i}"
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append(f"-{mono}")
                else:
                    parts.append(f"{format_rational(c)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_strings(self) -> list[str]:
        """Ascending coefficients as rational strings (JSON form)."""
        return [format_rational(c) for c in self.coeffs]


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to Poly")


#: the polynomial z
Z = Poly((0, 1))


def interpolate(xs: Sequence[Scalar], ys: Sequence[Scalar]) -> Poly:
    """Exact polynomial through the given points (Newton divided differences)."""
    if len(xs) != len(ys):
        raise ValueError("point count mismatch")
    xs = [Fraction(x) for x in xs]
    coeffs = [Fraction(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form sum_j coeffs[j] * prod_{i<j} (z - xs[i])
    result = Poly.zero()
    basis = Poly.one()
    for j in range(n):
        result = result + basis * coeffs[j]
        basis = basis * Poly((-xs[j], 1))
    return result


@dataclass(frozen=True)
class OrdAtLeast:
    """Lower bound on ord_inf when the truncation shows no nonzero coefficient."""

    bound: int

    def __ge__(self, other: int) -> bool:
        return self.bound >= other


class LaurentTail:
    """Truncation of an element of (1/z)*Q[[1/z]].

    ``coeffs[i]`` is the coefficient of z^-(start+i).  Coefficients below
    ``start`` are exactly zero; coefficients beyond the stored window are
    unknown unless ``exact`` is set, in which case they are exactly zero and
    the tail is a full Laurent polynomial in 1/z.
    """

    __slots__ = ("start", "coeffs", "exact")

    def __init__(self, start: int, coeffs: Iterable[Scalar] = (), exact: bool = False):
        if start < 1:
            raise ValueError("tail must start at z^-1 or deeper")
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in coeffs))
        object.__setattr__(self, "exact", bool(exact))

    @classmethod
    def zero(cls) -> "LaurentTail":
        return cls(1, (), exact=True)

    @property
    def depth(self) -> int:
        return len(self.coeffs)

    @property
    def known_end(self) -> float:
        """Largest index k for which the coefficient of z^-k is known."""
        return INF if self.exact else self.start + self.depth - 1

    def coeff(self, k: int) -> Fraction:
        """Coefficient of z^-k; raises beyond the proved window."""
        if k < self.start:
            return Fraction(0)
        i = k - self.start
        if i < self.depth:
            return self.coeffs[i]
        if self.exact:
            return Fraction(0)
        raise InsufficientDepthError(f"coefficient of z^-{k} beyond proved depth")

    def moment(self, k: int) -> Fraction:
        """Moment k, i.e. the coefficient of z^-(k+1)."""
        return self.coeff(k + 1)

    def window(self, lo: int, hi: int) -> list[Fraction]:
        return [self.coeff(k) for k in range(lo, hi + 1)]

    def is_zero_to_depth(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __neg__(self) -> "LaurentTail":
        return LaurentTail(self.start, (-c for c in self.coeffs), self.exact)

    def scale(self, c: Scalar) -> "LaurentTail":
        return LaurentTail(self.start, (Fraction(c) * a for a in self.coeffs), self.exact)

    def derivative(self, j: int = 1) -> "LaurentTail":
        """j-th derivative; start shifts down by j, depth is preserved."""
        if j < 0:
            raise ValueError("negative derivative order")
        coeffs = list(self.coeffs)
        start = self.start
        for _ in range(j):
            coeffs = [Fraction(-(start + i)) * c for i, c in enumerate(coeffs)]
            start += 1
        return LaurentTail(start, coeffs, self.exact)

    def add(self, other: "LaurentTail") -> "LaurentTail":
        """Sum truncated to the jointly proved window."""
        start = min(self.start, other.start)
        end = min(self.known_end, other.known_end)
        exact = self.exact and other.exact
        if end == INF:
            end = max(self.start + self.depth - 1, other.start + other.depth - 1)
            if end < start:
                return LaurentTail.zero()
        if end < start:
            return LaurentTail(start, (), exact)
        coeffs = [self.coeff(k) + other.coeff(k) for k in range(start, int(end) + 1)]
        return LaurentTail(start, coeffs, exact)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LaurentTail)
            and self.start == other.start
            and self.coeffs == other.coeffs
            and self.exact == other.exact
        )

    def __repr__(self):
        tag = ", exact" if self.exact else ""
        return f"LaurentTail(start={self.start}, coeffs={[str(c) for c in self.coeffs]}{tag})"

    def to_json(self) -> dict:
        return {"start": self.start, "coeffs": [format_rational(c) for c in self.coeffs]}


def ord_inf(f: LaurentTail, assume_exact: bool = False):
    """Order at infinity of a tail.

    Returns the exact order as an int when a nonzero stored coefficient
    exists, INF when every coefficient vanishes and the tail is exact (or the
    caller asserts exactness), and otherwise the flagged lower bound
    ``OrdAtLeast(start + depth)``.
    """
    for i, c in enumerate(f.coeffs):
        if c != 0:
            return f.start + i
    if f.exact or assume_exact:
        return INF
    return OrdAtLeast(f.start + f.depth)


def laurent_mul_poly(f: LaurentTail, p: Poly) -> tuple[Poly, LaurentTail]:
    """Exact product P(z)*f(z) split into (polynomial part, tail).

    The tail is truncated to the provably correct depth: the product of a
    depth-d window by a degree-D polynomial is proved only up to index
    start + d - 1 - D.
    """
    if p.is_zero:
        return Poly.zero(), LaurentTail.zero()
    deg = int(p.degree)
    # polynomial part: coefficient of z^u is sum_i p_i * f_{i-u}
    top_needed = deg  # largest tail index the polynomial part touches
    if not f.exact and top_needed > f.start + f.depth - 1 and top_needed >= f.start:
        raise InsufficientDepthError("tail too shallow for the polynomial part of the product")
    poly_part = Poly(
        sum((p.coeff(i) * f.coeff(i - u) for i in range(u + 1, deg + 1)), Fraction(0))
        for u in range(deg)
    )
    new_start = max(1, f.start - deg)
    if f.exact:
        end = f.start + f.depth - 1  # the product's support cannot reach deeper
        coeffs = [
            sum((p.coeff(i) * f.coeff(k + i) for i in range(deg + 1)), Fraction(0))
            for k in range(new_start, end + 1)
        ]
        return poly_part, LaurentTail(new_start, coeffs, exact=True)
    end = f.start + f.depth - 1 - deg
    if end < new_start:
        return poly_part, LaurentTail(new_start, ())
    coeffs = [
        sum((p.coeff(i) * f.coeff(k + i) for i in range(deg + 1)), Fraction(0))
        for k in range(new_start, end + 1)
    ]
    return poly_part, LaurentTail(new_start, coeffs)

"""Moment functionals of Laurent tails and the Pade-type approximant machinery.

A Laurent tail f = sum_k f_k / z^(k+1) is identified with the linear
functional t^k |-> f_k on Q[t].  Everything downstream (orthogonality,
Q-polynomials, remainder tails, the two determinants) is computed through
this identification, exactly.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exact import LaurentTail, Poly, format_rational, interpolate, laurent_mul_poly
from .weyl import DiffOp, op_apply

__all__ = [
    "MomentSeq",
    "PadeCell",
    "PadeTable",
    "Remainder",
    "RouteDisagreementError",
    "NonConstantDeterminantError",
    "ZeroDeterminantError",
    "phi",
    "divided_difference_Q",
    "remainder_tail",
    "verify_pade",
    "theta_det",
    "delta_det",
    "det_bareiss",
    "constant_determinant",
]


class RouteDisagreementError(Exception):
    """The kernel route and the multiplied-out series route disagreed."""


class NonConstantDeterminantError(Exception):
    """A determinant that must be constant came out with positive degree."""


class ZeroDeterminantError(Exception):
    """A determinant that must be a unit came out zero."""


class MomentSeq:
    """Lazily extended, memoized sequence of exact moments.

    The generator is called as ``fn(k, prefix)`` with ``prefix`` holding
    moments 0..k-1, and is always invoked in increasing order of k, so
    recurrence-driven sequences can be expressed directly.  Extension is
    locked; an already-returned value never changes.
    """

    def __init__(self, fn: Callable[[int, Sequence[Fraction]], Fraction], label: str):
        self._fn = fn
        self.label = label
        self._cache: list[Fraction] = []
        self._lock = threading.Lock()

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("moment index must be >= 0")
        if k >= len(self._cache):
            with self._lock:
                while len(self._cache) <= k:
                    self._cache.append(Fraction(self._fn(len(self._cache), self._cache)))
        return self._cache[k]

    def prefix(self, n: int) -> list[Fraction]:
        return [self[k] for k in range(n)]

    def tail(self, depth: int) -> LaurentTail:
        """The underlying series truncated to ``depth`` exact coefficients."""
        return LaurentTail(1, self.prefix(depth))

    def shift(self, k: int) -> "MomentSeq":
        """Moments of pi(z^k * f): index j |-> f_{j+k}."""
        if k == 0:
            return self
        return MomentSeq(lambda j, _prefix, s=self, k=k: s[j + k], label=f"z^{k}*{self.label}")

    @classmethod
    def zero(cls, label: str = "0") -> "MomentSeq":
        return cls(lambda _k, _p: Fraction(0), label)

    @classmethod
    def from_values(cls, values: Sequence[Fraction], label: str) -> "MomentSeq":
        vals = [Fraction(v) for v in values]

        def fn(k, _prefix):
            if k < len(vals):
                return vals[k]
            raise IndexError(f"moment sequence '{label}' only has {len(vals)} stored values")

        return cls(fn, label)

    def __repr__(self):
        return f"MomentSeq({self.label!r})"


def phi(f: MomentSeq, p: Poly) -> Fraction:
    """The functional applied to a polynomial: sum_k p_k * f_k."""
    return sum((c * f[k] for k, c in enumerate(p.coeffs) if c != 0), Fraction(0))


def divided_difference_Q(f: MomentSeq, p: Poly) -> Poly:
    """Q(z) = phi_f((P(z) - P(t)) / (z - t)), via the explicit double sum.

    Q(z) = sum_{u=0}^{deg P - 1} ( sum_{k=u+1}^{deg P} p_k f_{k-1-u} ) z^u,
    so deg Q <= deg P - 1.
    """
    if p.is_zero or p.degree == 0:
        return Poly.zero()
    deg = int(p.degree)
    return Poly(
        sum((p.coeff(k) * f[k - 1 - u] for k in range(u + 1, deg + 1)), Fraction(0))
        for u in range(deg)
    )


@dataclass(frozen=True)
class Remainder:
    """Remainder tail of a cell, with the orthogonality precondition recorded."""

    tail: LaurentTail
    expected_start: int
    orthogonal: bool

    def to_json(self) -> dict:
        return {
            "start": self.tail.start,
            "coeffs": [format_rational(c) for c in self.tail.coeffs],
            "orthogonal": self.orthogonal,
        }


def remainder_tail(f: MomentSeq, p: Poly, n: int, depth: int) -> Remainder:
    """Tail of P(z)f(z) - Q(z): coefficient of z^-(k+1) is phi(t^k P).

    When phi(t^k P) = 0 for 0 <= k <= n-1 the tail starts at z^-(n+1) and
    carries ``depth`` exact coefficients phi(t^(n+j) P).  A violated
    precondition downgrades to the true start and is flagged.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    start_k = n
    orthogonal = True
    for k in range(n):
        if phi(f, p.shift(k)) != 0:
            start_k = k
            orthogonal = False
            break
    coeffs = [phi(f, p.shift(start_k + j)) for j in range(depth)]
    return Remainder(LaurentTail(start_k + 1, coeffs), expected_start=n + 1, orthogonal=orthogonal)


@dataclass(frozen=True)
class PadeCell:
    """One column of a weight-n table: P and the Q-polynomial of every row."""

    n: int
    ell: int
    P: Poly
    Qs: dict[str, Poly]

    def to_json(self) -> dict:
        return {
            "l": self.ell,
            "P": self.P.to_strings(),
            "Q": {label: q.to_strings() for label, q in self.Qs.items()},
        }


@dataclass(frozen=True)
class PadeTable:
    """All columns l = 0..M of a weight-n table, rows in a fixed order."""

    n: int
    M: int
    row_labels: tuple[str, ...]
    cells: tuple[PadeCell, ...]

    def matrix(self) -> list[list[Poly]]:
        """(d+1) x (d+1) arrangement: P row first, then one row per label."""
        rows = [[cell.P for cell in self.cells]]
        for label in self.row_labels:
            rows.append([cell.Qs[label] for cell in self.cells])
        return rows

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "M": self.M,
            "columns": [cell.ell for cell in self.cells],
            "P": [cell.P.to_strings() for cell in self.cells],
            "rows": [
                {"label": label, "Q": [cell.Qs[label].to_strings() for cell in self.cells]}
                for label in self.row_labels
            ],
        }


def verify_pade(cell: PadeCell, fs: Sequence[MomentSeq], n: int, M: int) -> bool:
    """Check the cell against every row, by two independent routes.

    Kernel route: phi(t^k P) = 0 for 0 <= k <= n-1.  Series route: multiply
    the truncated row series by P and inspect the first n tail coefficients
    of P*f - Q (plus the reconstruction of Q as the polynomial part).  The
    two routes computing the same coefficients through different code paths
    must agree exactly; a mismatch raises RouteDisagreementError.
    """
    if cell.P.is_zero or cell.P.degree > M:
        return False
    ok = True
    depth = int(cell.P.degree) + n + 2
    for f in fs:
        q = cell.Qs[f.label]
        kernel_ok = all(phi(f, cell.P.shift(k)) == 0 for k in range(n))
        part, tail = laurent_mul_poly(f.tail(depth), cell.P)
        series_ok = all(tail.coeff(k) == 0 for k in range(1, n + 1))
        if kernel_ok != series_ok:
            raise RouteDisagreementError(
                f"row {f.label}: kernel test says {kernel_ok}, series test says {series_ok}"
            )
        if not kernel_ok or part != q:
            ok = False
    return ok


def det_bareiss(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free elimination with row pivoting."""
    m = [[Fraction(x) for x in row] for row in matrix]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("matrix must be square")
    if size == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(size - 1):
        if m[k][k] == 0:
            for i in range(k + 1, size):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev
            m[i][k] = Fraction(0)
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def theta_det(fs: Sequence[MomentSeq], rstar: DiffOp, n: int) -> Fraction:
    """Determinant of the d x d moment matrix phi_{f_j}(t^n * (R* . t^l))."""
    d = len(fs)
    shifted = [op_apply(rstar, Poly.monomial(ell)).shift(n) for ell in range(d)]
    rows = [[phi(f, p) for p in shifted] for f in fs]
    return det_bareiss(rows)


def delta_det(table: Sequence[Sequence[Poly]]) -> Poly:
    """Exact polynomial determinant, by evaluation at D+1 points and interpolation.

    D is the column-degree bound sum_l max_i deg(table[i][l]), so the
    interpolated polynomial is the determinant exactly.
    """
    size = len(table)
    if any(len(row) != size for row in table):
        raise ValueError("table must be square")
    bound = 0
    for ell in range(size):
        degs = [int(table[i][ell].degree) for i in range(size) if not table[i][ell].is_zero]
        if degs:
            bound += max(degs)
    xs = [Fraction(x) for x in range(bound + 1)]
    ys = [det_bareiss([[entry(x) for entry in row] for row in table]) for x in xs]
    return interpolate(xs, ys)


def constant_determinant(table: Sequence[Sequence[Poly]]) -> Fraction:
    """delta_det checked to be a nonzero constant; returns the constant.

    Raises NonConstantDeterminantError / ZeroDeterminantError; both signal an
    implementation bug in the caller's construction, never a math failure.
    """
    det = delta_det(table)
    if det.is_zero:
        raise ZeroDeterminantError("determinant is zero")
    if det.degree != 0:
        raise NonConstantDeterminantError(f"determinant has degree {det.degree}: {det}")
    return det.coeff(0)

"""Pade-type tables for multiple polylogarithms at ratio-chained arguments.

For pairwise distinct nonzero alpha_1..alpha_m and a depth budget r, the
row family consists of the series

    f_{s,a}(z) = Li_s(a_1/a_2, ..., a_{k-1}/a_k, a_k/z),

one per index (s, a) with |s| <= r, giving M = (m+1)^r - 1 rows.  Columns
come from the adjoint of the composed Rodrigues operator
R_n = L_{(m+1)^(r-1) n} ... L_{(m+1) n} L_n with
L_N = (1/N!) z^N prod_i (z - alpha_i)^N D^N.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Poly, format_rational
from .transform import (
    MomentSeq,
    NonConstantDeterminantError,
    PadeCell,
    PadeTable,
    ZeroDeterminantError,
    constant_determinant,
    divided_difference_Q,
    theta_det,
)
from .weyl import DiffOp, adjoint, op_apply, op_compose

__all__ = [
    "MplConfig",
    "MplIndex",
    "NonConstantDeterminantError",
    "ZeroDeterminantError",
    "index_set",
    "mpl_moment",
    "mpl_moment_oracle",
    "moment_seq",
    "moment_seqs",
    "build_LN",
    "build_L",
    "build_Rn",
    "pade_table",
    "delta_constant",
    "theta_constant",
    "membership_depth",
]


@dataclass(frozen=True)
class MplConfig:
    """Parameters (m, r, alphas) with alphas pairwise distinct and nonzero."""

    m: int
    r: int
    alphas: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(Fraction(a) for a in self.alphas))
        if self.m < 1 or self.r < 1:
            raise ValueError("m and r must be positive")
        if len(self.alphas) != self.m:
            raise ValueError(f"expected {self.m} alphas, got {len(self.alphas)}")
        if any(a == 0 for a in self.alphas):
            raise ValueError("alphas must be nonzero")
        if len(set(self.alphas)) != self.m:
            raise ValueError("alphas must be pairwise distinct")

    @property
    def M(self) -> int:
        return (self.m + 1) ** self.r - 1

    def alpha(self, i: int) -> Fraction:
        """1-based access matching the index notation."""
        return self.alphas[i - 1]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "r": self.r,
            "alphas": [format_rational(a) for a in self.alphas],
        }


@dataclass(frozen=True, order=True)
class MplIndex:
    """A composition s with |s| <= r and a tuple of 1-based alpha indices."""

    s: tuple[int, ...]
    a: tuple[int, ...]

    def __post_init__(self):
        if len(self.s) != len(self.a) or not self.s:
            raise ValueError("s and a must be nonempty of equal length")
        if any(si < 1 for si in self.s) or any(ai < 1 for ai in self.a):
            raise ValueError("entries must be positive")

    @property
    def depth(self) -> int:
        return len(self.s)

    @property
    def weight(self) -> int:
        return sum(self.s)

    def args(self, config: MplConfig) -> list[str]:
        """Ratio-chained argument strings, last one symbolic in z."""
        out = []
        for t in range(self.depth - 1):
            out.append(format_rational(config.alpha(self.a[t]) / config.alpha(self.a[t + 1])))
        out.append(f"{format_rational(config.alpha(self.a[-1]))}/z")
        return out

    def label(self, config: MplConfig) -> str:
        return "Li_" + ",".join(map(str, self.s)) + "(" + ",".join(self.args(config)) + ")"

    def value_label(self, config: MplConfig, beta: Fraction) -> str:
        """Label with z evaluated at beta (exact ratios)."""
        args = self.args(config)[:-1]
        args.append(format_rational(config.alpha(self.a[-1]) / Fraction(beta)))
        return "Li_" + ",".join(map(str, self.s)) + "(" + ",".join(args) + ")"


def index_set(m: int, r: int) -> list[MplIndex]:
    """All indices, ordered by depth, then s, then a; cardinality (m+1)^r - 1."""
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    out = []
    for k in range(1, r + 1):
        compositions = sorted(
            s for s in itertools.product(range(1, r + 1), repeat=k) if sum(s) <= r
        )
        for s in compositions:
            for a in itertools.product(range(1, m + 1), repeat=k):
                out.append(MplIndex(s=s, a=a))
    return out


class _MplMomentTable:
    """Moments by the telescoped nested sum, computed level by level.

    level t (0-based) holds A_t(v) for v >= 1, where A_0(v) = alpha_{a_1}^v / v^{s_1}
    and A_t(v) = (sum_{u<v} A_{t-1}(u) * alpha_{a_{t+1}}^(v-u)) / v^{s_{t+1}};
    the moment of index j is A_{k-1}(j+1).
    """

    def __init__(self, idx: MplIndex, config: MplConfig):
        self.idx = idx
        self.config = config
        self.levels: list[list[Fraction]] = [[] for _ in range(idx.depth)]

    def _extend(self, vmax: int) -> None:
        for t in range(self.idx.depth):
            alpha = self.config.alpha(self.idx.a[t])
            s_t = self.idx.s[t]
            level = self.levels[t]
            for v in range(len(level) + 1, vmax + 1):
                if t == 0:
                    val = alpha**v / Fraction(v) ** s_t
                else:
                    below = self.levels[t - 1]
                    val = sum(
                        (below[u - 1] * alpha ** (v - u) for u in range(1, v)), Fraction(0)
                    ) / Fraction(v) ** s_t
                level.append(val)

    def moment(self, j: int) -> Fraction:
        if j < self.idx.depth - 1:
            return Fraction(0)
        self._extend(j + 1)
        return self.levels[-1][j]


def mpl_moment(idx: MplIndex, j: int, config: MplConfig) -> Fraction:
    """Moment j of f_{s,a}: zero for j < depth-1, otherwise the nested sum."""
    return _MplMomentTable(idx, config).moment(j)


def mpl_moment_oracle(idx: MplIndex, j: int, config: MplConfig) -> Fraction:
    """Brute-force route: expand the defining multiple sum term by term.

    Enumerates every chain 0 < n_1 < ... < n_k = j+1 and multiplies out the
    actual ratio arguments, sharing no code with the telescoped route.
    """
    k = idx.depth
    ratios = [config.alpha(idx.a[t]) / config.alpha(idx.a[t + 1]) for t in range(k - 1)]
    last_alpha = config.alpha(idx.a[-1])
    total = Fraction(0)
    nk = j + 1
    for chain in itertools.combinations(range(1, nk), k - 1):
        term = last_alpha**nk / Fraction(nk) ** idx.s[-1]
        for t, n_t in enumerate(chain):
            term *= ratios[t] ** n_t
            term /= Fraction(n_t) ** idx.s[t]
        total += term
    return total


def moment_seq(config: MplConfig, idx: MplIndex) -> MomentSeq:
    table = _MplMomentTable(idx, config)
    return MomentSeq(lambda j, _prefix: table.moment(j), label=idx.label(config))


def moment_seqs(config: MplConfig) -> list[MomentSeq]:
    return [moment_seq(config, idx) for idx in index_set(config.m, config.r)]


def build_LN(N: int, config: MplConfig) -> DiffOp:
    """(1/N!) z^N prod_i (z - alpha_i)^N D^N."""
    if N < 1:
        raise ValueError("N must be positive")
    b = Poly.monomial(N)
    for a in config.alphas:
        b = b * Poly((-a, 1)) ** N
    return DiffOp.of_term(b / math.factorial(N), N)


def _compose_chain(factors: Sequence[DiffOp]) -> DiffOp:
    """Compose so that factors[0] acts first."""
    acc = factors[0]
    for op in factors[1:]:
        acc = op_compose(op, acc)
    return acc


def build_L(config: MplConfig) -> DiffOp:
    """The composite operator annihilating every row up to polynomials."""
    return _compose_chain([build_LN((config.m + 1) ** j, config) for j in range(config.r)])


def build_Rn(n: int, config: MplConfig) -> DiffOp:
    """R_n = L_{(m+1)^(r-1) n} ... L_{(m+1) n} L_n."""
    if n < 1:
        raise ValueError("n must be positive")
    return _compose_chain(
        [build_LN((config.m + 1) ** j * n, config) for j in range(config.r)]
    )


def membership_depth(config: MplConfig, n: int) -> int:
    """Default truncation depth for membership and remainder inspection."""
    return max(40, 2 * config.M * n + config.M + 5)


def pade_table(config: MplConfig, n: int) -> PadeTable:
    """Columns l = 0..M from the adjoint of R_n, rows from the moment family."""
    if n < 1:
        raise ValueError("n must be positive")
    rstar = adjoint(build_Rn(n, config))
    seqs = moment_seqs(config)
    cells = []
    for ell in range(config.M + 1):
        p = op_apply(rstar, Poly.monomial(ell))
        qs = {f.label: divided_difference_Q(f, p) for f in seqs}
        cells.append(PadeCell(n=n, ell=ell, P=p, Qs=qs))
    return PadeTable(
        n=n,
        M=config.M,
        row_labels=tuple(f.label for f in seqs),
        cells=tuple(cells),
    )


def delta_constant(config: MplConfig, n: int, table: PadeTable | None = None) -> Fraction:
    """The (M+1) x (M+1) determinant, asserted to be a nonzero constant."""
    if table is None:
        table = pade_table(config, n)
    return constant_determinant(table.matrix())


def theta_constant(config: MplConfig, n: int) -> Fraction:
    """The M x M moment-matrix determinant."""
    rstar = adjoint(build_Rn(n, config))
    return theta_det(moment_seqs(config), rstar, n)

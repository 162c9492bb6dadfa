"""Heights and places of Q, the linear-independence criterion, and bound audits.

All absolute values and height arguments are kept as exact rationals for as
long as possible; logarithms are taken once, at the end, through a big-integer
safe routine with relative error well below 1e-15.  Inequality audits compare
exact rationals and use floats only for reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import Poly, format_rational, log_fraction, log_int as _log_int
from .transform import MomentSeq, PadeTable, phi
from .weyl import DiffOp, op_apply, op_compose
from . import mpl as mpl_mod

__all__ = [
    "Place",
    "BadBetaError",
    "DegenerateAlphasError",
    "abs_v",
    "local_height",
    "local_height_vec",
    "global_height",
    "global_height_vec",
    "HeightProfile",
    "height_profile",
    "lcm_upto",
    "log_lcm_upto",
    "VResult",
    "V_value",
    "CriterionReport",
    "evaluate_criterion",
    "AuditRow",
    "AuditReport",
    "bounds_audit",
    "DecayReport",
    "remainder_decay",
]


class BadBetaError(Exception):
    """|beta|_v does not exceed the local height of the alphas."""


class DegenerateAlphasError(Exception):
    """The alphas are not pairwise distinct and nonzero."""


# --------------------------------------------------------------------------
# places and exact absolute values


@dataclass(frozen=True)
class Place:
    """A place of Q: the archimedean one (p = None) or a prime p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_finite(self) -> bool:
        return self.p is not None

    @property
    def epsilon(self) -> int:
        """1 at the archimedean place, 0 at finite places."""
        return 0 if self.is_finite else 1

    @classmethod
    def archimedean(cls) -> "Place":
        return cls(None)

    @classmethod
    def finite(cls, p: int) -> "Place":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "Place":
        text = text.strip().lower()
        if text in ("inf", "infty", "oo"):
            return cls(None)
        if text.startswith("p"):
            text = text[1:]
        return cls(int(text))

    def __str__(self):
        return "inf" if self.p is None else f"p{self.p}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(math.isqrt(n)) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, n + 1, p))
    return [i for i, flag in enumerate(sieve) if flag]


def valuation(x: Fraction, p: int) -> int:
    """p-adic valuation; raises on x = 0."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def abs_v(x: Fraction, place: Place) -> Fraction:
    """Normalized absolute value, exact: |p|_p = 1/p, usual value at infinity."""
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    if place.is_finite:
        v = valuation(x, place.p)
        return Fraction(1, place.p**v) if v >= 0 else Fraction(place.p ** (-v))
    return abs(x)


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    n = abs(int(n))
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def local_height(x: Fraction, place: Place) -> float:
    """h_v(x) = log max(1, |x|_v); the intermediate max is exact."""
    big = max(Fraction(1), abs_v(x, place))
    return log_fraction(big)


def local_height_vec(xs: Sequence[Fraction], place: Place) -> float:
    return log_fraction(H_v_vec(xs, place))


def H_v(x: Fraction, place: Place) -> Fraction:
    return max(Fraction(1), abs_v(x, place))


def H_v_vec(xs: Sequence[Fraction], place: Place) -> Fraction:
    return max([Fraction(1)] + [abs_v(x, place) for x in xs])


def global_height(x: Fraction) -> float:
    """h(x) = log max(|num|, |den|) for x in lowest terms."""
    x = Fraction(x)
    if x == 0:
        return 0.0
    return _log_int(max(abs(x.numerator), x.denominator))


def _global_H_vec(xs: Sequence[Fraction]) -> Fraction:
    """prod_v max(1, |x_1|_v, ..): archimedean factor times denominator primes."""
    xs = [Fraction(x) for x in xs]
    acc = max([Fraction(1)] + [abs(x) for x in xs])
    primes: set[int] = set()
    for x in xs:
        primes.update(_factorize(x.denominator))
    for p in sorted(primes):
        e = max(max(0, -valuation(x, p)) for x in xs if x != 0)
        acc *= Fraction(p) ** e
    return acc


def global_height_vec(xs: Sequence[Fraction]) -> float:
    return log_fraction(_global_H_vec(xs))


@dataclass(frozen=True)
class HeightProfile:
    """Local heights of one rational across every place that contributes."""

    value: Fraction
    locals: dict[str, float]
    total: float

    def to_json(self) -> dict:
        return {
            "value": format_rational(self.value),
            "locals": {k: _round15(v) for k, v in self.locals.items()},
            "total": _round15(self.total),
        }


def height_profile(x: Fraction) -> HeightProfile:
    """All nonzero local heights; their sum equals log max(|num|, |den|)."""
    x = Fraction(x)
    locs: dict[str, float] = {}
    h_inf = local_height(x, Place.archimedean())
    if h_inf != 0.0:
        locs["inf"] = h_inf
    if x != 0:
        for p in sorted(_factorize(x.denominator)):
            locs[f"p{p}"] = local_height(x, Place.finite(p))
    return HeightProfile(value=x, locals=locs, total=global_height(x))


# --------------------------------------------------------------------------
# lcm(1..n)


def _ilog(p: int, n: int) -> int:
    """Largest e with p^e <= n."""
    e, acc = 0, 1
    while acc * p <= n:
        acc *= p
        e += 1
    return e


def lcm_upto(n: int) -> int:
    """Exact lcm(1..n), as the product of maximal prime powers <= n."""
    if n < 1:
        raise ValueError("n must be positive")
    parts = [p ** _ilog(p, n) for p in _primes_upto(n)]
    if not parts:
        return 1
    while len(parts) > 1:
        parts = [a * b for a, b in zip(parts[::2], parts[1::2])] + (
            [parts[-1]] if len(parts) % 2 else []
        )
    return parts[0]


def log_lcm_upto(n: int) -> float:
    return _log_int(lcm_upto(n))


def _val_dn(p: int, n: int) -> int:
    """p-adic valuation of lcm(1..n)."""
    return _ilog(p, n)


# --------------------------------------------------------------------------
# the quantity V and the criterion report


def _check_alphas(alphas: Sequence[Fraction], m: int) -> tuple[Fraction, ...]:
    alphas = tuple(Fraction(a) for a in alphas)
    if len(alphas) != m:
        raise DegenerateAlphasError(f"expected {m} alphas, got {len(alphas)}")
    if any(a == 0 for a in alphas) or len(set(alphas)) != len(alphas):
        raise DegenerateAlphasError("alphas must be pairwise distinct and nonzero")
    return alphas


@dataclass(frozen=True)
class VResult:
    value: float
    error_bound: float
    indeterminate: bool
    terms: dict[str, float] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "value": _round15(self.value),
            "error_bound": _round15(self.error_bound),
            "indeterminate": self.indeterminate,
            "terms": {k: _round15(v) for k, v in self.terms.items()},
        }


def V_value(
    alphas: Sequence[Fraction], beta: Fraction, m: int, r: int, v0: Place
) -> VResult:
    """The criterion quantity

    V = (M+1) h_v0(beta) - h_v0(alpha)
        - M (h(beta) + (1/m) sum_i h(alpha_i) + h(alpha))
        - (M log2 + r(r+1)/2 log(m+1) + r + rM)

    with M = (m+1)^r - 1.  |V| below 1e-9 is reported as indeterminate, since
    a strict inequality is being decided.
    """
    alphas = _check_alphas(alphas, m)
    beta = Fraction(beta)
    M = (m + 1) ** r - 1
    h_v0_beta = local_height(beta, v0)
    h_v0_alpha = local_height_vec(alphas, v0)
    h_beta = global_height(beta)
    h_alpha_each = [global_height(a) for a in alphas]
    h_alpha_vec = global_height_vec(alphas)
    constant = M * math.log(2) + r * (r + 1) / 2 * math.log(m + 1) + r + r * M
    value = (
        (M + 1) * h_v0_beta
        - h_v0_alpha
        - M * (h_beta + sum(h_alpha_each) / m + h_alpha_vec)
        - constant
    )
    magnitude = (
        (M + 1) * abs(h_v0_beta)
        + abs(h_v0_alpha)
        + M * (abs(h_beta) + sum(map(abs, h_alpha_each)) / m + abs(h_alpha_vec))
        + constant
    )
    err = magnitude * 1e-14 + 1e-15
    return VResult(
        value=value,
        error_bound=err,
        indeterminate=abs(value) < max(1e-9, err),
        terms={
            "h_v0_beta": h_v0_beta,
            "h_v0_alpha": h_v0_alpha,
            "h_beta": h_beta,
            "h_alpha_vec": h_alpha_vec,
            "sum_h_alpha_i": sum(h_alpha_each),
            "constant": constant,
        },
    )


@dataclass(frozen=True)
class CriterionReport:
    m: int
    r: int
    alphas: tuple[Fraction, ...]
    beta: Fraction
    place: Place
    V: VResult
    beta_exceeds_height: bool
    V_positive: str  # "pass" | "fail" | "indeterminate"
    conclusion: list[str]
    products: list[str]

    @property
    def passed(self) -> bool:
        return self.beta_exceeds_height and self.V_positive == "pass"

    def to_json(self) -> dict:
        return {
            "config": {
                "m": self.m,
                "r": self.r,
                "alphas": [format_rational(a) for a in self.alphas],
                "beta": format_rational(self.beta),
                "place": str(self.place),
            },
            "V": self.V.to_json(),
            "hypothesis_checks": {
                "abs_beta_gt_local_height_alpha": self.beta_exceeds_height,
                "V_positive": self.V_positive,
            },
            "conclusion": list(self.conclusion),
            "products": list(self.products),
        }


def evaluate_criterion(
    alphas: Sequence[Fraction],
    beta: Fraction,
    m: int,
    r: int,
    v0: Place,
    include_products: bool = False,
) -> CriterionReport:
    """Hypothesis checks and, when both pass decisively, the independence list.

    The precondition |beta|_v0 > H_v0(alpha) is decided exactly; positivity of
    V is decided in floating point with an indeterminate band.  The conclusion
    lists the M evaluated series declared, together with 1, linearly
    independent over Q; product labels are added on request.
    """
    alphas = _check_alphas(alphas, m)
    beta = Fraction(beta)
    v = V_value(alphas, beta, m, r, v0)
    exceeds = abs_v(beta, v0) > H_v_vec(alphas, v0)
    if v.indeterminate:
        v_state = "indeterminate"
    else:
        v_state = "pass" if v.value > 0 else "fail"
    conclusion: list[str] = []
    products: list[str] = []
    if exceeds and v_state == "pass":
        config = mpl_mod.MplConfig(m=m, r=r, alphas=alphas)
        indices = mpl_mod.index_set(m, r)
        conclusion = [idx.value_label(config, beta) for idx in indices]
        if include_products:
            seen = set()
            for idx in indices:
                factors = sorted(
                    f"Li_{s}({format_rational(config.alpha(a) / beta)})"
                    for s, a in zip(idx.s, idx.a)
                )
                label = "*".join(factors)
                if label not in seen:
                    seen.add(label)
                    products.append(label)
    return CriterionReport(
        m=m,
        r=r,
        alphas=alphas,
        beta=beta,
        place=v0,
        V=v,
        beta_exceeds_height=exceeds,
        V_positive=v_state,
        conclusion=conclusion,
        products=products,
    )


# --------------------------------------------------------------------------
# bound audits


def poly_norm_v(p: Poly, place: Place) -> Fraction:
    """Maximum v-adic absolute value of the coefficients."""
    if p.is_zero:
        return Fraction(0)
    return max(abs_v(c, place) for c in p.coeffs)


def _round15(x: float | None) -> float | None:
    if x is None:
        return None
    if math.isinf(x) or math.isnan(x):
        return None
    return float(f"{x:.15g}")


@dataclass(frozen=True)
class AuditRow:
    """One proven inequality, compared exactly on the norm scale."""

    name: str
    measured: Fraction
    bound: Fraction

    @property
    def holds(self) -> bool:
        return self.measured <= self.bound

    @property
    def measured_log(self) -> float:
        return log_fraction(self.measured) if self.measured > 0 else -math.inf

    @property
    def bound_log(self) -> float:
        return log_fraction(self.bound) if self.bound > 0 else -math.inf

    @property
    def slack(self) -> float:
        return self.bound_log - self.measured_log

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "measured": _round15(self.measured_log),
            "bound": _round15(self.bound_log),
            "slack": _round15(self.slack),
            "holds": self.holds,
        }


@dataclass(frozen=True)
class AuditReport:
    config: "mpl_mod.MplConfig"
    n: int
    place: Place
    rows: list[AuditRow]

    @property
    def all_hold(self) -> bool:
        return all(row.holds for row in self.rows)

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "n": self.n,
            "place": str(self.place),
            "rows": [row.to_json() for row in self.rows],
            "all_hold": self.all_hold,
        }


def _d_factor(place: Place, r: int, N: int) -> Fraction:
    """|lcm(1..N)^r|_v^(eps_v - 1): 1 at infinity, p^(r*v_p(d_N)) at p."""
    if not place.is_finite or N < 1:
        return Fraction(1)
    return Fraction(place.p) ** (r * _val_dn(place.p, N))


def _cal_LN(N: int, config: "mpl_mod.MplConfig") -> DiffOp:
    """(1/N!) D^N z^N prod_i (z - alpha_i)^N, the building block of the columns."""
    b = Poly.monomial(N)
    for a in config.alphas:
        b = b * Poly((-a, 1)) ** N
    return op_compose(DiffOp.d(N), DiffOp.mul_by(b)) * Fraction(1, math.factorial(N))


def bounds_audit(
    config: "mpl_mod.MplConfig",
    n: int,
    place: Place,
    beta: Fraction | None = None,
    table: PadeTable | None = None,
) -> AuditReport:
    """Measure every proven norm inequality on a built table: all must hold.

    Covers the derivative/product/moment norm bounds, the full chained bound
    on the column polynomials, the Q bound per cell, and (when beta is given)
    the evaluation bound log|P(beta)|_v <= eps log(deg+1) + log||P||_v +
    deg * h_v(beta).
    """
    if table is None:
        table = mpl_mod.pade_table(config, n)
    seqs = mpl_mod.moment_seqs(config)
    eps = place.epsilon
    m, r, M = config.m, config.r, config.M
    h_alpha_factors = [H_v(a, place) for a in config.alphas]
    H_alpha_vec = H_v_vec(config.alphas, place)
    rows: list[AuditRow] = []

    stage_sizes = [(m + 1) ** j * n for j in range(r - 1, -1, -1)]
    for ell in (0, M):
        current = Poly.monomial(ell)
        for N in stage_sizes:
            prod_poly = Poly.one()
            for a in config.alphas:
                prod_poly = prod_poly * Poly((-a, 1)) ** N
            deg_in = int(current.degree)
            # product norm bound
            measured_prod = poly_norm_v(prod_poly, place)
            bound_prod = (
                Fraction(N + 1) ** (m * eps)
                * Fraction(2) ** (m * N * eps)
                * math.prod(h**N for h in h_alpha_factors)
            )
            rows.append(AuditRow(f"prod_norm[l={ell},N={N}]", measured_prod, bound_prod))
            # derivative-of-shift norm bound, applied to current * prod
            shifted = current * prod_poly
            deg_shifted = int(shifted.degree)
            derived = (Poly.monomial(N) * shifted).derivative(N) / math.factorial(N)
            measured_der = poly_norm_v(derived, place)
            bound_der = (
                Fraction(math.comb(N + deg_shifted, N)) ** eps * poly_norm_v(shifted, place)
            )
            rows.append(AuditRow(f"derivative_norm[l={ell},N={N}]", measured_der, bound_der))
            # one operator application
            nxt = op_apply(_cal_LN(N, config), current)
            measured_step = poly_norm_v(nxt, place)
            bound_step = (
                Fraction(m * N + deg_in + 1) ** ((m + 1) * eps)
                * (Fraction(2) ** (m * N) * math.comb((m + 1) * N + deg_in, N)) ** eps
                * math.prod(h**N for h in h_alpha_factors)
                * poly_norm_v(current, place)
            )
            rows.append(AuditRow(f"operator_step_norm[l={ell},N={N}]", measured_step, bound_step))
            current = nxt
        # chained bound on the finished column polynomial
        cell = table.cells[ell]
        chain = Fraction(1)
        deg_run = ell
        for N in stage_sizes:
            chain *= (
                Fraction(m * N + deg_run + 1) ** ((m + 1) * eps)
                * (Fraction(2) ** (m * N) * math.comb((m + 1) * N + deg_run, N)) ** eps
                * math.prod(h**N for h in h_alpha_factors)
            )
            deg_run += m * N
        rows.append(AuditRow(f"column_norm[l={ell}]", poly_norm_v(cell.P, place), chain))
        if beta is not None:
            degp = int(cell.P.degree)
            measured_eval = abs_v(cell.P(beta), place)
            bound_eval = (
                Fraction(degp + 1) ** eps
                * poly_norm_v(cell.P, place)
                * H_v(beta, place) ** degp
            )
            rows.append(AuditRow(f"column_eval[l={ell}]", measured_eval, bound_eval))

    # moment bounds per row, on monomials and on the first remainder coefficient
    for f, idx in zip(seqs, mpl_mod.index_set(m, r)):
        for j in (0, 1, n, n + 3):
            measured = abs_v(f[j], place)
            bound = (
                Fraction(j + 1) ** ((r + 1) * eps)
                * _d_factor(place, r, j + 1)
                * H_alpha_vec ** (j + 1)
            )
            rows.append(AuditRow(f"moment[{f.label},j={j}]", measured, bound))
        for ell in (0, M):
            cell = table.cells[ell]
            degp = int(cell.P.degree)
            shifted = cell.P.shift(n)
            measured = abs_v(phi(f, shifted), place)
            bound = (
                Fraction(degp + n + 1) ** ((r + 1) * eps)
                * _d_factor(place, r, degp + n + 1)
                * H_alpha_vec ** (degp + n + 1)
                * poly_norm_v(shifted, place)
            )
            rows.append(AuditRow(f"moment_of_tP[{f.label},l={ell}]", measured, bound))

    # Q-polynomial bounds per cell
    for cell in table.cells:
        degp = int(cell.P.degree)
        normp = poly_norm_v(cell.P, place)
        bound_q = (
            Fraction(degp + 1) ** ((r + 1) * eps)
            * _d_factor(place, r, degp + 1)
            * H_alpha_vec ** (degp + 1)
            * normp
        )
        for label, q in cell.Qs.items():
            rows.append(AuditRow(f"q_norm[{label},l={cell.ell}]", poly_norm_v(q, place), bound_q))
            if beta is not None:
                degq = int(q.degree) if not q.is_zero else 0
                measured_eval = abs_v(q(beta), place)
                bound_eval = (
                    Fraction(degq + 1) ** eps
                    * poly_norm_v(q, place)
                    * H_v(beta, place) ** degq
                )
                rows.append(
                    AuditRow(f"q_eval[{label},l={cell.ell}]", measured_eval, bound_eval)
                )

    return AuditReport(config=config, n=n, place=place, rows=rows)


# --------------------------------------------------------------------------
# remainder decay


@dataclass(frozen=True)
class DecayReport:
    ns: list[int]
    log_remainder: list[float]
    slope: float
    bound_coefficient: float
    slack: float
    ok: bool

    def to_json(self) -> dict:
        return {
            "ns": list(self.ns),
            "log_remainder": [_round15(v) for v in self.log_remainder],
            "slope": _round15(self.slope),
            "bound_coefficient": _round15(self.bound_coefficient),
            "slack": self.slack,
            "ok": self.ok,
        }


def _remainder_log_abs(
    f: MomentSeq,
    p: Poly,
    n: int,
    beta: Fraction,
    place: Place,
    r: int,
    H_alpha: Fraction,
) -> float:
    """Certified log |sum_{k>=n} phi(t^k P) beta^-(k+1)|_v, by exact partial sums.

    Archimedean: stop once the geometric majorant of the unsummed mass is at
    most 1e-3 of the partial sum.  Finite: stop once every future term is
    p-adically smaller than the partial sum, which then IS the value (strong
    triangle).
    """
    degp = int(p.degree)
    normp = poly_norm_v(p, place)
    abs_beta = abs_v(beta, place)
    if abs_beta <= H_alpha:
        raise BadBetaError(f"|beta|_{place} = {abs_beta} <= H_v(alpha) = {H_alpha}")
    q = H_alpha / abs_beta
    partial = Fraction(0)
    k = n
    power = Fraction(beta) ** (n + 1)
    while True:
        partial += phi(f, p.shift(k)) / power
        power *= beta
        k += 1
        steps = k + degp + 1
        if place.is_finite:
            majorant = (
                Fraction(steps + 1) ** r * H_alpha ** (steps + 1) * normp / abs_beta ** (k + 1)
            )
            ratio = q * (Fraction(steps + 2) / Fraction(steps + 1)) ** r
            if partial != 0 and ratio < 1 and majorant < abs_v(partial, place):
                return log_fraction(abs_v(partial, place))
        else:
            majorant = (
                Fraction(steps + 1) ** (r + 1)
                * H_alpha ** (steps + 1)
                * normp
                / abs_beta ** (k + 1)
            )
            ratio = q * (Fraction(steps + 2) / Fraction(steps + 1)) ** (r + 1)
            if partial != 0 and ratio < 1:
                tail_bound = majorant / (1 - ratio)
                if tail_bound * 1000 <= abs(partial):
                    return log_fraction(abs(partial))
        if k - n > 200000:
            raise RuntimeError("remainder summation did not certify")


def remainder_decay(
    config: "mpl_mod.MplConfig",
    beta: Fraction,
    v0: Place,
    n_range: Sequence[int],
) -> DecayReport:
    """Per-n decay of the largest remainder at beta, against the proven slope.

    The fitted slope must not exceed
    -h_v(beta) + (M/m) sum_i h_v(alpha_i) + (M+1) h_v(alpha)
    + eps_v (M log2 + r(r+1)/2 log(m+1) + r), plus slack 0.1.
    """
    beta = Fraction(beta)
    H_alpha = H_v_vec(config.alphas, v0)
    if abs_v(beta, v0) <= H_alpha:
        raise BadBetaError("|beta|_v must exceed the local height of the alphas")
    ns = sorted(set(int(n) for n in n_range))
    if len(ns) < 2:
        raise ValueError("need at least two weights to fit a slope")
    m, r, M = config.m, config.r, config.M
    seqs = mpl_mod.moment_seqs(config)
    logs = []
    for n in ns:
        table = mpl_mod.pade_table(config, n)
        best = -math.inf
        for f in seqs:
            for cell in table.cells:
                val = _remainder_log_abs(f, cell.P, n, beta, v0, r, H_alpha)
                best = max(best, val)
        logs.append(best)
    mean_n = sum(ns) / len(ns)
    mean_y = sum(logs) / len(logs)
    slope = sum((x - mean_n) * (y - mean_y) for x, y in zip(ns, logs)) / sum(
        (x - mean_n) ** 2 for x in ns
    )
    coeff = (
        -local_height(beta, v0)
        + (M / m) * sum(local_height(a, v0) for a in config.alphas)
        + (M + 1) * local_height_vec(config.alphas, v0)
        + v0.epsilon * (M * math.log(2) + r * (r + 1) / 2 * math.log(m + 1) + r)
    )
    return DecayReport(
        ns=ns,
        log_remainder=logs,
        slope=slope,
        bound_coefficient=coeff,
        slack=0.1,
        ok=slope <= coeff + 0.1,
    )

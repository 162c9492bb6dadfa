"""Acceptance suite: every criterion at its stated tolerance, one line each.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
pass/fail lines on the console.
"""

from __future__ import annotations

import math
import random
import subprocess
import sys
import time
from fractions import Fraction as F
from functools import lru_cache

from rodpade.criterion import (
    Place,
    V_value,
    bounds_audit,
    log_lcm_upto,
    remainder_decay,
)
from rodpade.exact import Poly
from rodpade.holonomic import solve_V1
from rodpade.logpow import (
    LogPowConfig,
    build_Rn_log,
    logpow_delta,
    moment_seq as log_moment_seq,
    verify_En_identities,
)
from rodpade.mpl import (
    MplConfig,
    build_L,
    delta_constant,
    index_set,
    moment_seq,
    moment_seqs,
    mpl_moment,
    mpl_moment_oracle,
    pade_table,
    theta_constant,
)
from rodpade.transform import phi, remainder_tail
from rodpade.weyl import (
    DiffOp,
    adjoint,
    op_apply,
    op_apply_laurent,
    op_compose,
    ord_weight,
)

# (m, r) -> highest weight exercised; alphas are (1) for m=1 and (1,2) for m=2
GRID = {(1, 1): 4, (1, 2): 4, (2, 1): 4, (2, 2): 2}


@lru_cache(maxsize=None)
def grid_config(m: int, r: int) -> MplConfig:
    return MplConfig(m=m, r=r, alphas=(F(1),) if m == 1 else (F(1), F(2)))


@lru_cache(maxsize=None)
def grid_table(m: int, r: int, n: int):
    return pade_table(grid_config(m, r), n)


@lru_cache(maxsize=None)
def grid_seqs(m: int, r: int):
    return tuple(moment_seqs(grid_config(m, r)))


def _report(num: int, ok: bool, detail: str = ""):
    tag = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {num:02d}] {tag}{suffix}")
    assert ok, f"criterion {num} failed {suffix}"


def test_criterion_01_legendre_fixture():
    t0 = time.perf_counter()
    table = grid_table(1, 1, 1)
    li1 = grid_seqs(1, 1)[0]
    ok = table.cells[0].P == Poly((1, -2))
    ok = ok and table.cells[0].Qs["Li_1(1/z)"] == Poly.constant(-2)
    ok = ok and table.cells[1].P == Poly((0, 2, -3))
    ok = ok and table.cells[1].Qs["Li_1(1/z)"] == Poly((F(1, 2), -3))
    rem = remainder_tail(li1, table.cells[0].P, 1, 2)
    ok = ok and rem.tail.start == 2 and rem.tail.coeff(2) == F(-1, 6)
    ok = ok and delta_constant(grid_config(1, 1), 1, table) == F(1, 2)
    ok = ok and theta_constant(grid_config(1, 1), 1) == F(-1, 6)
    elapsed = time.perf_counter() - t0
    _report(1, ok and elapsed < 1.0, f"{elapsed:.2f}s < 1s")


def test_criterion_02_orthogonality_and_degree_grid():
    t0 = time.perf_counter()
    ok = True
    for (m, r), n_max in GRID.items():
        config = grid_config(m, r)
        seqs = grid_seqs(m, r)
        for n in range(1, n_max + 1):
            table = grid_table(m, r, n)
            for cell in table.cells:
                ok = ok and cell.P.degree == config.M * n + cell.ell
                for f in seqs:
                    for k in range(n):
                        ok = ok and phi(f, cell.P.shift(k)) == 0
    elapsed = time.perf_counter() - t0
    _report(2, ok and elapsed < 120.0, f"{elapsed:.1f}s < 120s")


def test_criterion_03_determinant_constancy_grid():
    ok = True
    for (m, r), n_max in GRID.items():
        config = grid_config(m, r)
        for n in range(1, n_max + 1):
            table = grid_table(m, r, n)
            delta = delta_constant(config, n, table)  # raises if zero/nonconstant
            theta = theta_constant(config, n)
            ok = ok and delta != 0
            ok = ok and abs(delta) == abs(table.cells[-1].P.lc * theta)
    _report(3, ok)


def test_criterion_04_two_route_moments_and_solver():
    ok = True
    for m, r in GRID:
        config = grid_config(m, r)
        for idx in index_set(m, r):
            for j in range(41):
                ok = ok and mpl_moment(idx, j, config) == mpl_moment_oracle(idx, j, config)
    for m, r in GRID:
        config = grid_config(m, r)
        op = build_L(config)
        d = ord_weight(op)
        for f in grid_seqs(m, r):
            rebuilt = solve_V1(op, f.prefix(d), 50)
            ok = ok and rebuilt.prefix(50) == f.prefix(50)
    _report(4, ok)


def test_criterion_05_randomized_adjoint_algebra():
    rng = random.Random(20240809)
    seqs = [
        grid_seqs(1, 2)[0],
        grid_seqs(1, 2)[1],
        grid_seqs(1, 2)[2],
        log_moment_seq(1),
        log_moment_seq(2),
    ]

    def random_op(nonzero=True):
        while True:
            op = DiffOp(
                Poly([rng.randint(-4, 4) for _ in range(rng.randint(0, 5))])
                for _ in range(rng.randint(1, 4))
            )
            if not nonzero or not op.is_zero:
                return op

    failures = 0
    for trial in range(100):
        l1, l2 = random_op(), random_op()
        if adjoint(adjoint(l1)) != l1:
            failures += 1
        if adjoint(op_compose(l1, l2)) != op_compose(adjoint(l2), adjoint(l1)):
            failures += 1
        if ord_weight(op_compose(l1, l2)) != ord_weight(l1) + ord_weight(l2):
            failures += 1
        probe = DiffOp(
            Poly([rng.randint(-3, 3) for _ in range(rng.randint(0, 4))])
            for _ in range(rng.randint(1, 3))
        )
        if probe.is_zero:
            probe = DiffOp.identity()
        f = seqs[trial % len(seqs)]
        _, tail = op_apply_laurent(probe, f.tail(45))
        star = adjoint(probe)
        for k in range(26):
            if tail.moment(k) != phi(f, op_apply(star, Poly.monomial(k))):
                failures += 1
                break
    _report(5, failures == 0, f"{failures} failures in 100 trials")


def test_criterion_06_appendix_suite():
    ok = verify_En_identities(4)
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            rn = build_Rn_log(n, m)
            depth = 40 + ord_weight(rn) + len(rn.terms)
            for s in range(1, m + 1):
                f = log_moment_seq(s)
                for k in range(n):
                    _, tail = op_apply_laurent(rn, f.shift(k).tail(depth))
                    ok = ok and tail.depth >= 40 and tail.is_zero_to_depth()
    ok = ok and logpow_delta(LogPowConfig(1, 1)) == F(-1, 2)
    ok = ok and logpow_delta(LogPowConfig(1, 2)) != 0
    ok = ok and logpow_delta(LogPowConfig(2, 1)) != 0
    _report(6, ok)


def test_criterion_07_criterion_threshold():
    place = Place.archimedean()
    values = {b: V_value((F(1),), F(b), 1, 1, place).value for b in range(2, 41)}
    minimal = min(b for b, v in values.items() if v > 0)
    expected_30 = math.log(30) - 2 * math.log(2) - 2
    expected_29 = math.log(29) - 2 * math.log(2) - 2
    ok = minimal == 30
    ok = ok and abs(values[30] - expected_30) < 1e-6 and abs(values[30] - 0.0149) < 1e-4
    ok = ok and abs(values[29] - expected_29) < 1e-6 and abs(values[29] + 0.0190) < 1e-4
    _report(7, ok, f"minimal beta = {minimal}, V(30) = {values[30]:.7f}")


def test_criterion_08_bound_audits_and_decay():
    t0 = time.perf_counter()
    ok = True
    places = [Place.archimedean(), Place.finite(2), Place.finite(3)]
    for (m, r), n_max in GRID.items():
        config = grid_config(m, r)
        for n in range(1, n_max + 1):
            table = grid_table(m, r, n)
            for place in places:
                report = bounds_audit(config, n, place, beta=F(30), table=table)
                ok = ok and report.all_hold
    decay = remainder_decay(grid_config(1, 1), F(30), Place.archimedean(), range(2, 13))
    ok = ok and decay.slope <= -1.01
    elapsed = time.perf_counter() - t0
    _report(8, ok and elapsed < 180.0, f"slope {decay.slope:.2f} <= -1.01, {elapsed:.1f}s < 180s")


def test_criterion_09_lcm_growth():
    t0 = time.perf_counter()
    ratio = log_lcm_upto(100_000) / 100_000
    elapsed = time.perf_counter() - t0
    ok = 0.95 <= ratio <= 1.05 and elapsed < 30.0
    _report(9, ok, f"ratio {ratio:.5f} in [0.95, 1.05], {elapsed:.1f}s < 30s")


def test_criterion_10_cli_determinism():
    commands = [
        ["pade", "--m", "1", "--r", "2", "--alphas", "1", "--n", "1"],
        ["criterion", "--m", "1", "--r", "1", "--alphas", "1", "--beta", "30", "--place", "inf"],
        ["audit", "--lcm", "10000"],
    ]
    ok = True
    for cmd in commands:
        runs = [
            subprocess.run([sys.executable, "-m", "rodpade"] + cmd, capture_output=True)
            for _ in range(2)
        ]
        ok = ok and runs[0].stdout == runs[1].stdout and runs[0].returncode == runs[1].returncode
    _report(10, ok)

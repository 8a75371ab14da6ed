"""End-to-end acceptance checks, one per shipped guarantee.

Each test covers one numbered criterion and prints a single summary
line; the verbose pytest report gives the pass/fail verdict per
criterion.
"""

import io
import json
import random
import time
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction
from math import comb, factorial

from feuler import frobenius, suite
from feuler.cli import main, parse_poly_expr
from feuler.scalar import LAMBDA, ONE, LambdaPoly, lrat
from feuler.umbral import appell_expand

from genutil import rand_xpoly


def test_criterion_01_order_lowering_full_grid():
    t0 = time.perf_counter()
    cells = [suite.verify_thm2(n, r, s)
             for n in range(13) for r in range(7) for s in range(7)]
    elapsed = time.perf_counter() - t0
    assert len(cells) == 637
    bad = [c for c in cells if c.status != "equal"]
    assert bad == []
    assert elapsed < 60.0
    print(f"criterion 1: PASS  order-lowering grid, 637 cells exact "
          f"in {elapsed:.2f}s single-threaded")


def test_criterion_02_single_step_corollaries():
    for n in range(13):
        for r in range(1, 7):
            cell = suite.verify_cor3(n, r)
            assert cell.status == "equal", cell
            cell = suite.verify_cor4(n, r)
            assert cell.status == "equal", cell
    print("criterion 2: PASS  one-step and full-step lowering, n <= 12, r <= 6")


def test_criterion_03_stirling_valued_specials():
    for n in range(13):
        for r in range(0, 7):
            cell = suite.verify_thm5(n, r)
            assert cell.status == "equal", cell
        for r in range(1, 7):
            cell = suite.verify_thm6(n, r)
            assert cell.status == "equal", cell
            cell = suite.verify_remark(n, r)
            assert cell.status == "equal", cell
    print("criterion 3: PASS  constant-term specials, n <= 12, r <= 6")


def test_criterion_04_basis_round_trip():
    for index in range(100):
        cell = suite.verify_thm1_roundtrip(index)
        assert cell.status == "equal", cell
        assert cell.params["degree"] <= 10
        assert 0 <= cell.params["r"] <= 4
    # the expansion route must also agree with the umbral dual pairing
    rng = random.Random(20260816)
    for _ in range(20):
        p = rand_xpoly(rng, max_deg=5)
        r = rng.randrange(0, 5)
        e = frobenius.to_fe_basis(p, r)
        d = 0 if p.is_zero else p.degree
        assert list(e.coefficients) == appell_expand(frobenius.fe_series(r, d), p)
        assert frobenius.from_fe_basis(e) == p
    print("criterion 4: PASS  100 seeded round trips, both expansion routes agree")


def test_criterion_05_duality_grid():
    for n in range(9):
        for k in range(9):
            for r in range(4):
                cell = suite.verify_eq15_duality(n, k, r)
                assert cell.status == "equal", cell
    print("criterion 5: PASS  pairing duality, n, k <= 8, r <= 3")


def test_criterion_06_ladders():
    for n in range(13):
        for r in range(-4, 5):
            cell = suite.verify_eq12_ladder(n, r)
            assert cell.status == "equal", cell
            cell = suite.verify_eq22_ladder(n, r)
            assert cell.status == "equal", cell
    print("criterion 6: PASS  derivative and averaging ladders, n <= 12, |r| <= 4")


def _euler_polys_via_egf(n_max):
    # divided coefficients of 2/(e^t + 1), then binomial convolution
    a = [Fraction(1)]
    for n in range(1, n_max + 1):
        a.append(-sum(Fraction(comb(n, k)) * a[k] for k in range(n)) / 2)
    return [[Fraction(comb(n, l)) * a[n - l] for l in range(n + 1)]
            for n in range(n_max + 1)]


def test_criterion_07_classical_specializations():
    euler = _euler_polys_via_egf(5)
    for n in range(6):
        got = [c.evaluate(Fraction(-1)) for c in frobenius.fe_poly(n).coeffs]
        assert got == euler[n]
    for n in range(11):
        for r in range(6):
            got = [c.evaluate(Fraction(0)) for c in frobenius.fe_poly(n, r).coeffs]
            want = [Fraction(comb(n, l) * (-r) ** (n - l)) for l in range(n + 1)]
            assert got == want
    print("criterion 7: PASS  matches 2e^{xt}/(e^t+1) at -1 and (x-r)^n at 0")


def _stirling_direct(n, k):
    # coefficient of L^{k-j} is (-1)^{k-j} C(k,j) j^n / k!, with 0^0 = 1
    coeffs = [Fraction(0)] * (k + 1)
    for j in range(k + 1):
        power = 1 if n == 0 else j**n
        coeffs[k - j] = Fraction((-1) ** (k - j) * comb(k, j) * power, factorial(k))
    return LambdaPoly(coeffs)


def test_criterion_08_stirling_consistency():
    classical = {(0, 0): 1}
    for n in range(1, 11):
        for k in range(n + 1):
            classical[(n, k)] = (k * classical.get((n - 1, k), 0)
                                 + classical.get((n - 1, k - 1), 0))
    om = ONE - LAMBDA
    for n in range(11):
        for k in range(11):
            s = frobenius.stirling_lambda(n, k)
            assert s == lrat(_stirling_direct(n, k))
            assert s * factorial(k) == frobenius.delta_pow_at_zero(n, k)
            assert s.evaluate(Fraction(1)) == classical.get((n, k), 0)
    for s_ in range(11):
        for l in range(11):
            lhs = frobenius.lowering_coeff(s_, l) * om**s_
            rhs = frobenius.stirling_lambda(l, s_) * factorial(s_)
            assert lhs == rhs
    print("criterion 8: PASS  direct formula, operator powers, classical "
          "limit, and lowering bridge, n, k <= 10")


def test_criterion_09_mutation_detected(monkeypatch):
    true_coeff = frobenius.lowering_coeff
    om = ONE - LAMBDA

    def dropped_factor(s, l, m_cap=None):
        # one (1 - L) factor removed from the coefficient's denominator
        return true_coeff(s, l, m_cap) * om

    monkeypatch.setattr(frobenius, "lowering_coeff", dropped_factor)
    report = suite.run_suite(3, 2, 2)
    assert report.totals()["mismatch"] >= 1
    assert not report.ok
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(["suite", "--n-max", "3", "--r-max", "2", "--s-max", "2"])
    assert code != 0
    monkeypatch.undo()
    assert suite.run_suite(3, 2, 2).ok
    print(f"criterion 9: PASS  seeded fault caught, "
          f"{report.totals()['mismatch']} mismatches, CLI exit {code}")


def test_criterion_10_cli_contract():
    rng = random.Random(suite.DEFAULT_SEED)
    count = 0
    while count < 100:
        p = rand_xpoly(rng, max_deg=6)
        if p.is_zero:
            continue
        count += 1
        assert parse_poly_expr(str(p)) == p
    argv = ["suite", "--n-max", "12", "--r-max", "6", "--s-max", "6",
            "--format", "json"]
    serial = io.StringIO()
    with redirect_stdout(serial):
        code = main(argv)
    assert code == 0
    parallel = io.StringIO()
    with redirect_stdout(parallel):
        code = main(argv + ["--jobs", "4"])
    assert code == 0
    assert serial.getvalue() == parallel.getvalue()
    summary = json.loads(serial.getvalue().splitlines()[-1])
    assert summary["total"] == 2661
    assert summary["mismatch"] == 0 and summary["skipped"] == 0
    print("criterion 10: PASS  100 expressions round-tripped, full grid "
          "exits 0, serial and 4-way runs byte-identical")

"""Exact verification cells for the order-lowering identity family.

Each cell pits two independently computed canonical strings against each
other: the left side comes from the recurrence/convolution tables, the
right side from the identity under test, evaluated literally with its
stated summation bounds.  A report is a deterministically ordered list
of cells plus a summary; serialized reports from a serial run and a
parallel run are byte-identical because cell timings are normalized to
zero at the report level.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from math import comb, factorial

from . import frobenius
from .frobenius import fe_numbers, fe_poly, fe_series, from_fe_basis, j_lambda, to_fe_basis
from .scalar import LAMBDA, ONE, ZERO, LambdaPoly, LambdaRat
from .umbral import appell_expand
from .xpoly import X, XPoly

DEFAULT_SEED = 271828

IDENTITY_IDS = (
    "cor3",
    "cor4",
    "eq12_ladder",
    "eq15_duality",
    "eq22_ladder",
    "remark",
    "thm1_roundtrip",
    "thm2",
    "thm5",
    "thm6",
)

_ONE_MINUS = ONE - LAMBDA


@dataclass
class Cell:
    """One identity instance: status is equal iff lhs == rhs byte-wise."""

    identity: str
    params: dict
    status: str
    lhs: str
    rhs: str
    elapsed_us: int = 0


def _finish(identity, params, lhs, rhs, t0) -> Cell:
    status = "equal" if lhs == rhs else "mismatch"
    elapsed = int((time.perf_counter() - t0) * 1_000_000)
    return Cell(identity, params, status, lhs, rhs, elapsed)


def _split_sum_polys(n: int, r: int, s: int) -> XPoly:
    # sum_l C(n,l) * bracket * H_{n-l}^{(r)}(x|L) with the two stated caps
    cap = min(s, n)
    acc = XPoly([])
    for l in range(n + 1):
        m_cap = l if l <= cap else cap
        w = comb(n, l) * frobenius.lowering_coeff(s, l, m_cap)
        if not w.is_zero:
            acc = acc + w * fe_poly(n - l, r)
    return acc


def _split_sum_numbers(n: int, r: int, s: int) -> LambdaRat:
    row = fe_numbers(n, r)
    cap = min(s, n)
    acc = ZERO
    for l in range(n + 1):
        m_cap = l if l <= cap else cap
        w = comb(n, l) * frobenius.lowering_coeff(s, l, m_cap)
        term = row[n - l]
        if not w.is_zero and not term.is_zero:
            acc = acc + w * term
    return acc


def verify_thm2(n: int, r: int, s: int) -> Cell:
    """Order lowering: H_n^{(r-s)}(x|L) equals the split bracket sum."""
    t0 = time.perf_counter()
    lhs = str(fe_poly(n, r - s))
    rhs = str(_split_sum_polys(n, r, s))
    return _finish("thm2", {"n": n, "r": r, "s": s}, lhs, rhs, t0)


def verify_cor3(n: int, r: int) -> Cell:
    """Lowering order r to 1: the split sum with s = r - 1."""
    t0 = time.perf_counter()
    if r < 1:
        return Cell("cor3", {"n": n, "r": r}, "skipped", "", "needs r >= 1")
    lhs = str(fe_poly(n, 1))
    rhs = str(_split_sum_polys(n, r, r - 1))
    return _finish("cor3", {"n": n, "r": r}, lhs, rhs, t0)


def verify_cor4(n: int, r: int) -> Cell:
    """Lowering order r to 0: x^n equals the split sum with s = r."""
    t0 = time.perf_counter()
    if r < 1:
        return Cell("cor4", {"n": n, "r": r}, "skipped", "", "needs r >= 1")
    lhs = str(X ** n)
    rhs = str(_split_sum_polys(n, r, r))
    return _finish("cor4", {"n": n, "r": r}, lhs, rhs, t0)


def verify_thm5(n: int, r: int) -> Cell:
    """Three expressions for r!/(1-L)^r S_L(n,r) agree (s = 2r at x = 0)."""
    t0 = time.perf_counter()
    e1 = str(frobenius.stirling_lambda(n, r) * factorial(r) * _ONE_MINUS ** (-r))
    e2 = str(_split_sum_numbers(n, r, 2 * r))
    e3 = str(frobenius.lowering_coeff(r, n, min(r, n)))
    rhs = e2 if e2 != e1 else (e3 if e3 != e1 else e1)
    return _finish("thm5", {"n": n, "r": r}, e1, rhs, t0)


def verify_thm6(n: int, r: int) -> Cell:
    """(r-1)!/(1-L)^{r-1} S_L(n,r-1) equals the split sum with s = 2r - 1."""
    t0 = time.perf_counter()
    if r < 1:
        return Cell("thm6", {"n": n, "r": r}, "skipped", "", "needs r >= 1")
    e1 = str(frobenius.stirling_lambda(n, r - 1) * factorial(r - 1) * _ONE_MINUS ** (1 - r))
    e2 = str(_split_sum_numbers(n, r, 2 * r - 1))
    return _finish("thm6", {"n": n, "r": r}, e1, e2, t0)


def verify_remark(n: int, r: int) -> Cell:
    """Same scalar via order-1 numbers: the split sum with s = r, order 1."""
    t0 = time.perf_counter()
    if r < 1:
        return Cell("remark", {"n": n, "r": r}, "skipped", "", "needs r >= 1")
    e1 = str(frobenius.stirling_lambda(n, r - 1) * factorial(r - 1) * _ONE_MINUS ** (1 - r))
    e2 = str(_split_sum_numbers(n, 1, r))
    return _finish("remark", {"n": n, "r": r}, e1, e2, t0)


_SERIES_CACHE = {}


def _series(r: int, trunc: int):
    key = (r, trunc)
    if key not in _SERIES_CACHE:
        _SERIES_CACHE[key] = fe_series(r, trunc)
    return _SERIES_CACHE[key]


def verify_eq15_duality(n: int, k: int, r: int) -> Cell:
    """<g^r t^k | H_n^{(r)}> = n! delta_{n,k}."""
    t0 = time.perf_counter()
    g = _series(r, max(n, k))
    lhs = str(g.mul_t_power(k).functional(fe_poly(n, r)))
    rhs = str(LambdaRat(factorial(n) if n == k else 0))
    return _finish("eq15_duality", {"k": k, "n": n, "r": r}, lhs, rhs, t0)


def verify_eq12_ladder(n: int, r: int) -> Cell:
    """d/dx H_n^{(r)} = n H_{n-1}^{(r)}."""
    t0 = time.perf_counter()
    lhs = str(fe_poly(n, r).derivative())
    rhs = str(n * fe_poly(n - 1, r) if n else XPoly([]))
    return _finish("eq12_ladder", {"n": n, "r": r}, lhs, rhs, t0)


def verify_eq22_ladder(n: int, r: int) -> Cell:
    """J H_n^{(r)} = H_n^{(r-1)}."""
    t0 = time.perf_counter()
    lhs = str(j_lambda(fe_poly(n, r)))
    rhs = str(fe_poly(n, r - 1))
    return _finish("eq22_ladder", {"n": n, "r": r}, lhs, rhs, t0)


_COEFF_DENS = (
    LambdaPoly([1]),
    LambdaPoly([1, -1]),
    LambdaPoly([1, -2, 1]),
    LambdaPoly([1, 1]),
    LambdaPoly([2, -1]),
)


def _draw_poly(rng, max_degree: int, r_cap: int):
    deg = rng.randint(0, max_degree)
    coeffs = []
    for i in range(deg + 1):
        num = LambdaPoly([rng.randint(-5, 5) for _ in range(rng.randint(1, 3))])
        den = _COEFF_DENS[rng.randrange(len(_COEFF_DENS))]
        c = LambdaRat(num, den) * Fraction(rng.randint(1, 3), rng.randint(1, 3))
        if i == deg and c.is_zero:
            c = LambdaRat(1)
        coeffs.append(c)
    r = rng.randint(0, r_cap)
    return XPoly(coeffs), r


def verify_thm1_roundtrip(index: int, seed: int = DEFAULT_SEED,
                          max_degree: int = 10, r_cap: int = 4) -> Cell:
    """Basis coefficients agree across the evaluation and functional routes,
    and recombining them restores the polynomial."""
    t0 = time.perf_counter()
    rng = random.Random(seed)
    for _ in range(index):
        _draw_poly(rng, max_degree, r_cap)
    p, r = _draw_poly(rng, max_degree, r_cap)
    params = {"degree": int(p.degree), "index": index, "r": r}
    e = to_fe_basis(p, r)
    dual = appell_expand(_series(r, max(int(p.degree), 0)), p)
    if list(e.coefficients) != dual:
        lhs = "; ".join(str(c) for c in e.coefficients)
        rhs = "; ".join(str(c) for c in dual)
        return _finish("thm1_roundtrip", params, lhs, rhs, t0)
    lhs = str(p)
    rhs = str(from_fe_basis(e))
    return _finish("thm1_roundtrip", params, lhs, rhs, t0)


# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    """Deterministically ordered cells plus the grid they were run on."""

    cells: list
    grid: dict

    def totals(self) -> dict:
        out = {"total": len(self.cells), "equal": 0, "mismatch": 0, "skipped": 0}
        for c in self.cells:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.totals()["mismatch"] == 0

    def to_jsonl(self) -> str:
        lines = []
        for c in self.cells:
            lines.append(json.dumps({
                "identity": c.identity,
                "params": {k: c.params[k] for k in sorted(c.params)},
                "status": c.status,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "elapsed_us": c.elapsed_us,
            }))
        summary = dict(self.totals())
        summary["grid"] = {k: self.grid[k] for k in sorted(self.grid)}
        lines.append(json.dumps(summary))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "VerificationReport":
        cells = []
        summary = None
        for line in text.splitlines():
            if not line.strip():
                continue
            obj = json.loads(line)
            if "total" in obj:
                summary = obj
                continue
            cells.append(Cell(obj["identity"], obj["params"], obj["status"],
                              obj["lhs"], obj["rhs"], obj["elapsed_us"]))
        if summary is None:
            raise ValueError("report has no summary line")
        report = cls(cells=cells, grid=dict(summary.get("grid", {})))
        got = report.totals()
        for key in ("total", "equal", "mismatch", "skipped"):
            if summary.get(key) != got[key]:
                raise ValueError(f"summary {key}={summary.get(key)} but cells say {got[key]}")
        return report


def _plan(n_max: int, r_max: int, s_max: int, seed: int) -> list:
    tasks = []
    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            tasks.append(("cor3", n, r))
    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            tasks.append(("cor4", n, r))
    for n in range(n_max + 1):
        for r in range(-r_max, r_max + 1):
            tasks.append(("eq12_ladder", n, r))
    for n in range(n_max + 1):
        for r in range(r_max + 1):
            for k in range(n_max + 1):
                tasks.append(("eq15_duality", n, k, r))
    for n in range(n_max + 1):
        for r in range(-r_max, r_max + 1):
            tasks.append(("eq22_ladder", n, r))
    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            tasks.append(("remark", n, r))
    for index in range(100):
        tasks.append(("thm1_roundtrip", index, seed, min(10, n_max), min(4, r_max)))
    for n in range(n_max + 1):
        for r in range(r_max + 1):
            for s in range(s_max + 1):
                tasks.append(("thm2", n, r, s))
    for n in range(n_max + 1):
        for r in range(r_max + 1):
            tasks.append(("thm5", n, r))
    for n in range(n_max + 1):
        for r in range(1, r_max + 1):
            tasks.append(("thm6", n, r))
    return tasks


def _eval_task(task) -> Cell:
    kind = task[0]
    if kind == "cor3":
        return verify_cor3(task[1], task[2])
    if kind == "cor4":
        return verify_cor4(task[1], task[2])
    if kind == "eq12_ladder":
        return verify_eq12_ladder(task[1], task[2])
    if kind == "eq15_duality":
        return verify_eq15_duality(task[1], task[2], task[3])
    if kind == "eq22_ladder":
        return verify_eq22_ladder(task[1], task[2])
    if kind == "remark":
        return verify_remark(task[1], task[2])
    if kind == "thm1_roundtrip":
        return verify_thm1_roundtrip(task[1], seed=task[2], max_degree=task[3], r_cap=task[4])
    if kind == "thm2":
        return verify_thm2(task[1], task[2], task[3])
    if kind == "thm5":
        return verify_thm5(task[1], task[2])
    if kind == "thm6":
        return verify_thm6(task[1], task[2])
    raise ValueError(f"unknown task {task!r}")


def run_suite(n_max: int = 10, r_max: int = 4, s_max: int = 4,
              seed: int = DEFAULT_SEED, jobs: int = 1) -> VerificationReport:
    """Evaluate the full identity grid and collect a report.

    Cell order is deterministic (identity id, then parameters); reported
    timings are normalized to zero so equal grids serialize identically
    no matter how the work was scheduled.
    """
    tasks = _plan(n_max, r_max, s_max, seed)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            cells = list(ex.map(_eval_task, tasks, chunksize=32))
    else:
        cells = [_eval_task(t) for t in tasks]
    cells = [replace(c, elapsed_us=0) for c in cells]
    grid = {"n_max": n_max, "r_max": r_max, "s_max": s_max}
    return VerificationReport(cells=cells, grid=grid)

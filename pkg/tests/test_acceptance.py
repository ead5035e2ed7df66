"""The ten acceptance criteria, one test each.

Every test records a single ``criterion N: PASS|FAIL ...`` line; the lines are
repeated in the pytest terminal summary under "acceptance criteria".
Criteria 1, 6 and 8 encode statements that do not hold for the measures as
defined; they are implemented as stated and fail, with the observed values in
the line.
"""

import csv
import time

import numpy as np
import pytest

import conftest
from imaginarity import harness
from imaginarity.cli import main as cli_main
from imaginarity.monotones import (lemma3_maximize, me_numeric, me_qubit_closed_form, mh,
                                   werner_linear_entropy)
from imaginarity.states import bloch_to_density, isotropic, random_bloch, werner

from oracles import qubit_me_grid

ALPHAS = harness.ALPHA_GRID
BETAS = harness.BETA_GRID


def record(n: int, ok: bool, detail: str) -> None:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


def test_criterion_1_werner_endpoint():
    with Timer() as t:
        dev = max(abs(mh(werner(1.0), a, b) - (2**-b - 1) / ((a - 1) * b))
                  for a in ALPHAS for b in BETAS)
        at_half = mh(werner(1.0), 0.5, 0.5)
    ok = dev <= 1e-9 and abs(at_half - 1.1715729) < 1e-7 and t.seconds < 1
    record(1, ok, f"max |mh(werner(1)) - (2^-b - 1)/((a-1)b)| = {dev:.3g}; "
                  f"mh(werner(1), 1/2, 1/2) = {at_half:.10g} (target 1.1715729); {t.seconds:.2f}s")
    assert ok


def test_criterion_2_werner_zero():
    with Timer() as t:
        dev = max(abs(mh(werner(0.0), a, b)) for a in ALPHAS for b in BETAS)
        l0, l1 = werner_linear_entropy(0.0), werner_linear_entropy(1.0)
    ok = dev <= 1e-10 and l0 == 0.75 and l1 == 0 and t.seconds < 1
    record(2, ok, f"max |mh(werner(0))| = {dev:.3g}; L(0) = {l0}, L(1) = {l1}; {t.seconds:.2f}s")
    assert ok


def test_criterion_3_isotropic_equivalence():
    with Timer() as t:
        dev = max(abs(mh(isotropic((3 * k + 1) / 4), a, b) - mh(werner(k), a, b))
                  for k in np.linspace(0, 1, 101) for a in ALPHAS for b in BETAS)
    ok = dev <= 1e-9 and t.seconds < 5
    record(3, ok, f"max deviation over 101 k x 90 (a, b) = {dev:.3g}; {t.seconds:.2f}s")
    assert ok


PAIRS = [(0.1, 0.3), (0.25, 1.0), (0.5, 0.5), (0.5, 1.0), (0.75, 0.2), (0.9, 0.8)]


def test_criterion_4_qubit_me_oracle():
    rng = np.random.default_rng(2024)
    grid_dev = numeric_dev = 0.0
    with Timer() as t:
        for _ in range(100):
            v = random_bloch(rng)
            rho = bloch_to_density(v)
            for a, b in PAIRS:
                closed = me_qubit_closed_form(v, a, b).value
                grid_dev = max(grid_dev, abs(closed - qubit_me_grid(v, a, b)[0]))
                numeric_dev = max(numeric_dev, abs(me_numeric(rho, a, b).value - closed))
    ok = grid_dev <= 1e-4 and numeric_dev <= 1e-6 and t.seconds < 120
    record(4, ok, f"closed form vs grid {grid_dev:.3g} (tol 1e-4), Nelder-Mead vs closed form "
                  f"{numeric_dev:.3g} (tol 1e-6), 600 cases; {t.seconds:.1f}s")
    assert ok


def test_criterion_5_lemma3():
    with Timer() as t:
        report = harness.run_check("lemma3", harness.SuiteConfig(seed=5, trials=50))
        ref = lemma3_maximize(1.0, 0.6, 0.0, 0.5)
    ok = (report.failures == 0 and abs(ref.x0 - 0.0588235) < 1e-7
          and abs(ref.f_max - 1.6492422) < 1e-7 and t.seconds < 30)
    record(5, ok, f"{report.trials} comparisons over 50 instances, worst {report.worst_violation:.3g}; "
                  f"x0 = {ref.x0:.7f}, f_max = {ref.f_max:.7f}; {t.seconds:.1f}s")
    assert ok


AXIOM_CHECKS = ("m1", "m2", "m3", "m4", "m5", "thm3", "thm9_1", "cor1", "thm9_2")


def _suite(checks, cfg):
    reports = [harness.run_check(c, cfg) for c in checks]
    bad = [f"{r.check_id} {r.failures}/{r.trials} (worst {r.worst_violation:.3g})"
           for r in reports if r.worst_violation > 1e-9 or r.failures]
    return reports, bad


def test_criterion_6_axioms():
    cfg = harness.SuiteConfig(seed=42, trials=1000, dims=(2, 4))
    with Timer() as t:
        reports, bad = _suite(AXIOM_CHECKS, cfg)
    ok = not bad and t.seconds < 300
    detail = "; ".join(bad) if bad else "all worst violations <= 1e-9"
    record(6, ok, f"{len(reports)} checks x 1000 trials at d in (2, 4): {detail}; {t.seconds:.1f}s")
    assert ok


STRUCTURAL_CHECKS = ("thm2", "thm4", "thm9_3", "thm5", "thm9_4", "remark1", "thm6", "thm9_5", "thm7")


def test_criterion_7_structural():
    cfg = harness.SuiteConfig(seed=42, trials=200)
    with Timer() as t:
        reports, bad = _suite(STRUCTURAL_CHECKS, cfg)
        thm2 = next(r for r in reports if r.check_id == "thm2")
    ok = not bad and thm2.worst_violation <= 1e-10 and t.seconds < 300
    record(7, ok, f"{len(reports)} checks, {sum(r.trials for r in reports)} comparisons: "
                  f"{'; '.join(bad) if bad else 'no violations'}; thm2 worst "
                  f"{thm2.worst_violation:.3g}; {t.seconds:.1f}s")
    assert ok


def test_criterion_8_lemma2_lemma4():
    with Timer() as t:
        l2 = harness.run_check("lemma2", harness.SuiteConfig(seed=42, trials=100))
        l4 = harness.run_check("lemma4", harness.SuiteConfig(seed=42, trials=10))
    ok = (l2.failures == 0 and l2.worst_violation <= 1e-12 and l4.failures == 0
          and t.seconds < 60)
    record(8, ok, f"lemma2 worst {l2.worst_violation:.3g} over {l2.trials}; lemma4 "
                  f"{l4.failures}/{l4.trials} off by up to {l4.worst_violation:.3g} (tol 1e-6), "
                  f"reweighted-block value matches to "
                  f"{l4.telemetry['max_gap_to_reweighted_blocks']:.3g}; {t.seconds:.1f}s")
    assert ok


def test_criterion_9_remark3():
    with Timer() as t:
        r = harness.run_check("remark3", harness.SuiteConfig(seed=42, trials=500))
    tel = r.telemetry["conjecture"]
    ok = r.failures == 0 and tel["qubit"]["me_above_mh"] == 0 and t.seconds < 120
    record(9, ok, f"family worst {r.worst_violation:.3g} over {r.trials}; telemetry: "
                  f"{tel['qubit']['me_above_mh']}/{tel['qubit']['samples']} qubits and "
                  f"{tel['d4']['me_above_mh']}/{tel['d4']['samples']} d=4 states with me > mh; "
                  f"{t.seconds:.1f}s")
    assert ok


def _read(path):
    with open(path) as fh:
        return list(csv.DictReader(fh))


def test_criterion_10_figures(tmp_path):
    with Timer() as t:
        codes = [cli_main(["figure", w, "--outdir", str(tmp_path)]) for w in ("1a", "1b", "2")]
    fig2 = _read(tmp_path / "figure2.csv")
    series = {}
    for row in fig2:
        series.setdefault(row["series"], []).append(float(row["value"]))
    mh_series = [s for s in series if s.startswith("mh_")]
    increasing = all(np.all(np.diff(series[s]) >= -1e-12) for s in mh_series)
    lin_decreasing = bool(np.all(np.diff(series["linear_entropy"]) <= 1e-12))
    surf = {n: np.array([float(r["value"]) for r in _read(tmp_path / f"figure1a_{n}.csv")])
            for n in ("mh", "me")}
    below = bool(np.all(surf["me"] <= surf["mh"] + 1e-9))
    files = sorted(p.name for p in tmp_path.iterdir())
    ok = (codes == [0, 0, 0] and len(files) == 5 and increasing and lin_decreasing and below
          and len(surf["mh"]) == 3600 and t.seconds < 120)
    record(10, ok, f"{len(files)} CSVs; mh series nondecreasing: {increasing}; L nonincreasing: "
                   f"{lin_decreasing}; me <= mh on 1a: {below}; {t.seconds:.1f}s")
    assert ok

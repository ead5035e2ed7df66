"""Randomised verification campaign, one named check per mathematical statement.

Each check draws its trials from ``numpy.random.default_rng((seed, key, trial))``,
so a report depends only on ``(check_id, SuiteConfig)``. A comparison
``lhs <= rhs`` is recorded with excess ``max(0, lhs - rhs)``; it fails when the
excess exceeds the check tolerance. Checks flagged ``telemetry_only`` report
what they observe but never fail.
"""

from __future__ import annotations

import json
import time
import zlib
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .divergences import EntropyParams, h_alpha_beta, unified_relative_entropy
from .errors import UnknownCheck
from .linalg import direct_sum, partial_trace, tensor, trace_product_power
from .monotones import (eq24_value, lemma3_maximize, lemma3_objective, m_alpha_z,
                        m_tsallis, me, me_numeric, mh, mh_qubit_closed_form,
                        werner_mh_closed_form, OptimizerConfig)
from .states import (apply_channel, bloch_to_density, dense_descriptor, kraus_selective_outcomes,
                     random_bloch, random_density, random_kraus, random_orthogonal, random_pure,
                     random_real_density, random_real_kraus, remark1_state, werner)

MAX_COUNTEREXAMPLES = 10
ALPHA_GRID = tuple(round(0.1 * i, 10) for i in range(1, 10))
BETA_GRID = tuple(round(0.1 * i, 10) for i in range(1, 11))


@dataclass
class CheckReport:
    check_id: str
    trials: int
    failures: int
    worst_violation: float
    counterexamples: list
    elapsed_ms: int
    tolerance: float = 0.0
    statement: str = ""
    telemetry_only: bool = False
    telemetry: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.telemetry_only or self.failures == 0

    def to_json(self, include_timing: bool = True) -> str:
        d = asdict(self)
        if not include_timing:
            d.pop("elapsed_ms")
        return json.dumps(d, default=_json_default)


def _json_default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    raise TypeError(f"cannot serialise {type(obj)}")


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    trials: int = 200
    tolerances: dict = field(default_factory=dict)
    dims: tuple = (2, 4)
    alphas: tuple = ALPHA_GRID
    betas: tuple = BETA_GRID

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if any(not 0 < a < 1 for a in self.alphas) or any(not 0 < b <= 1 for b in self.betas):
            raise ValueError("alpha grid must lie in (0, 1) and beta grid in (0, 1]")
        if any(d < 2 for d in self.dims):
            raise ValueError("dimensions must be at least 2")


class Recorder:
    def __init__(self, tol: float):
        self.tol = tol
        self.trials = 0
        self.failures = 0
        self.worst = 0.0
        self.counterexamples: list = []
        self.telemetry: dict = {}

    def compare(self, lhs: float, rhs: float, payload=None) -> None:
        """Record ``lhs <= rhs`` up to the tolerance."""
        self._record(max(0.0, float(lhs) - float(rhs)), payload, {"lhs": lhs, "rhs": rhs})

    def close(self, a: float, b: float, payload=None) -> None:
        """Record ``a == b`` up to the tolerance."""
        self._record(abs(float(a) - float(b)), payload, {"lhs": a, "rhs": b})

    def require(self, ok: bool, payload=None, observed=None) -> None:
        self._record(0.0 if ok else np.inf, payload, observed)

    def _record(self, excess: float, payload, observed) -> None:
        self.trials += 1
        self.worst = max(self.worst, excess)
        if excess > self.tol:
            self.failures += 1
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append({"input": payload, "observed": observed})


@dataclass(frozen=True)
class Check:
    func: Callable
    statement: str
    tol: float = 1e-9
    telemetry_only: bool = False
    max_trials: int | None = None


REGISTRY: dict[str, Check] = {}


def check(check_id: str, statement: str, tol: float = 1e-9, telemetry_only: bool = False,
          max_trials: int | None = None):
    def deco(func):
        REGISTRY[check_id] = Check(func, statement, tol, telemetry_only, max_trials)
        return func
    return deco


def _trial_rngs(check_id: str, cfg: SuiteConfig, n: int):
    key = zlib.crc32(check_id.encode())
    for t in range(n):
        yield t, np.random.default_rng((cfg.seed, key, t))


def _params(rng, cfg: SuiteConfig):
    return float(rng.choice(cfg.alphas)), float(rng.choice(cfg.betas))


def _dim(t: int, cfg: SuiteConfig) -> int:
    return cfg.dims[t % len(cfg.dims)]


def _state(rng, d: int) -> np.ndarray:
    """Mix of full-rank, low-rank and pure states."""
    kind = rng.integers(3)
    if kind == 0:
        return random_density(d, rng)
    if kind == 1:
        return random_density(d, rng, rank=max(1, d // 2))
    return random_pure(d, rng)


def _desc(rho):
    return dense_descriptor(rho)


MEASURES = {
    "mh": lambda rho, a, b: mh(rho, a, b),
    "me": lambda rho, a, b: me(rho, a, b).value,
}


def _D(rho, sigma, a, b):
    return unified_relative_entropy(rho, sigma, EntropyParams(a, b))


# ------------------------------------------------------- divergence checks

@check("lemma1_i", "unified entropy is nonnegative and vanishes on identical states")
def _lemma1_i(rec, cfg, trials):
    for t, rng in _trial_rngs("lemma1_i", cfg, trials):
        d = _dim(t, cfg)
        rho, sigma = _state(rng, d), random_density(d, rng)
        a, b = _params(rng, cfg)
        payload = {"rho": _desc(rho), "sigma": _desc(sigma), "alpha": a, "beta": b}
        rec.compare(0.0, _D(rho, sigma, a, b), payload)
        rec.close(_D(rho, rho, a, b), 0.0, payload)


@check("lemma1_ii", "unified entropy is nonincreasing under arbitrary channels")
def _lemma1_ii(rec, cfg, trials):
    for t, rng in _trial_rngs("lemma1_ii", cfg, trials):
        d = _dim(t, cfg)
        rho, sigma = _state(rng, d), random_density(d, rng)
        ch = random_kraus(d, int(rng.integers(1, 4)), rng)
        a, b = _params(rng, cfg)
        rec.compare(_D(apply_channel(rho, ch), apply_channel(sigma, ch), a, b), _D(rho, sigma, a, b),
                    {"rho": _desc(rho), "sigma": _desc(sigma), "alpha": a, "beta": b})


@check("lemma1_iii", "unified entropy is jointly convex")
def _lemma1_iii(rec, cfg, trials):
    for t, rng in _trial_rngs("lemma1_iii", cfg, trials):
        d = _dim(t, cfg)
        lam = rng.dirichlet(np.ones(3))
        rhos = [_state(rng, d) for _ in range(3)]
        sigmas = [random_density(d, rng) for _ in range(3)]
        a, b = _params(rng, cfg)
        lhs = _D(sum(l * r for l, r in zip(lam, rhos)), sum(l * s for l, s in zip(lam, sigmas)), a, b)
        rhs = sum(l * _D(r, s, a, b) for l, r, s in zip(lam, rhos, sigmas))
        rec.compare(lhs, rhs, {"weights": lam, "alpha": a, "beta": b})


@check("lemma1_iv", "unified entropy does not increase under partial trace")
def _lemma1_iv(rec, cfg, trials):
    for t, rng in _trial_rngs("lemma1_iv", cfg, trials):
        db = max(2, _dim(t, cfg) // 2)
        rho, sigma = _state(rng, 2 * db), random_density(2 * db, rng)
        a, b = _params(rng, cfg)
        keep = "first" if t % 2 == 0 else "second"
        lhs = _D(partial_trace(rho, (2, db), keep), partial_trace(sigma, (2, db), keep), a, b)
        rec.compare(lhs, _D(rho, sigma, a, b),
                    {"rho": _desc(rho), "sigma": _desc(sigma), "alpha": a, "beta": b})


@check("lemma1_v", "unified entropy is nondecreasing in alpha for fixed beta")
def _lemma1_v(rec, cfg, trials):
    for t, rng in _trial_rngs("lemma1_v", cfg, trials):
        d = _dim(t, cfg)
        rho, sigma = _state(rng, d), random_density(d, rng)
        b = float(rng.choice(cfg.betas))
        vals = [_D(rho, sigma, a, b) for a in sorted(cfg.alphas)]
        for lo, hi in zip(vals, vals[1:]):
            rec.compare(lo, hi, {"rho": _desc(rho), "sigma": _desc(sigma), "beta": b})


@check("lemma1_vi", "unified entropy is nonincreasing in beta for fixed alpha")
def _lemma1_vi(rec, cfg, trials):
    for t, rng in _trial_rngs("lemma1_vi", cfg, trials):
        d = _dim(t, cfg)
        rho, sigma = _state(rng, d), random_density(d, rng)
        a = float(rng.choice(cfg.alphas))
        vals = [_D(rho, sigma, a, b) for b in sorted(cfg.betas)]
        for lo, hi in zip(vals, vals[1:]):
            rec.compare(hi, lo, {"rho": _desc(rho), "sigma": _desc(sigma), "alpha": a})


@check("lemma2", "real operations commute with complex conjugation", tol=1e-12)
def _lemma2(rec, cfg, trials):
    for t, rng in _trial_rngs("lemma2", cfg, trials):
        d = _dim(t, cfg)
        rho = _state(rng, d)
        ch = random_real_kraus(d, int(rng.integers(1, 4)), rng)
        diff = np.max(np.abs(apply_channel(rho.conj(), ch) - apply_channel(rho, ch).conj()))
        rec.close(diff, 0.0, {"rho": _desc(rho)})


@check("lemma3", "closed-form maximiser of the two-variable qubit objective beats a 400x400 grid",
       tol=1e-6, max_trials=50)
def _lemma3(rec, cfg, trials):
    x = np.linspace(0.0, 0.5, 400)
    th = np.linspace(0.0, 2 * np.pi, 400)
    X, TH = np.meshgrid(x, th, indexing="ij")
    cases = [(1.0, 0.6, 0.0, 0.5)]
    for _, rng in _trial_rngs("lemma3", cfg, trials - 1):
        R = rng.uniform(0.01, 1.0)
        phi = rng.uniform(0, 2 * np.pi)
        cases.append((R + rng.uniform(1e-3, 2.0), R * np.sin(phi), R * np.cos(phi),
                      float(rng.uniform(0.05, 0.95))))
    for A, B, C, a in cases:
        sol = lemma3_maximize(A, B, C, a)
        grid_max = float(lemma3_objective(X, TH, A, B, C, a).max())
        payload = {"A": A, "B": B, "C": C, "alpha": a}
        rec.compare(grid_max, sol.f_max, payload)
        rec.close(sol.f_max, float(lemma3_objective(sol.x0, sol.theta0, A, B, C, a)), payload)
        rec.require(0.0 <= sol.x0 <= 0.5, payload, {"x0": sol.x0})


@check("lemma4", "direct sum of blockwise minimisers minimises the direct sum (qubit blocks)",
       tol=1e-6, max_trials=10)
def _lemma4(rec, cfg, trials):
    opt = OptimizerConfig(restarts=3)
    spectral_gap = 0.0
    for t, rng in _trial_rngs("lemma4", cfg, trials):
        rho = bloch_to_density(random_bloch(rng))
        tau = bloch_to_density(random_bloch(rng)) if t else rho
        p = float(rng.uniform(0.1, 0.9)) if t else 0.5
        a, b = _params(rng, cfg)
        t_rho, t_tau = me(rho, a, b).achieved_trace, me(tau, a, b).achieved_trace
        numeric = me_numeric(direct_sum(p, rho, tau), a, b, opt).value
        predicted = h_alpha_beta(p * t_rho + (1 - p) * t_tau, a, b)
        reweighted = h_alpha_beta((p * t_rho ** (1 / a) + (1 - p) * t_tau ** (1 / a)) ** a, a, b)
        spectral_gap = max(spectral_gap, abs(numeric - reweighted))
        rec.close(numeric, predicted, {"rho": _desc(rho), "tau": _desc(tau), "p": p,
                                       "alpha": a, "beta": b})
    rec.telemetry["max_gap_to_reweighted_blocks"] = spectral_gap


# ------------------------------------------------------------- axiom checks

def _each_measure(rec, payload, fn):
    for name, measure in MEASURES.items():
        fn(name, measure, {**payload, "measure": name})


@check("m1", "mh and me are nonnegative and vanish exactly on real states")
def _m1(rec, cfg, trials):
    for t, rng in _trial_rngs("m1", cfg, trials):
        d = _dim(t, cfg)
        rho, real = _state(rng, d), random_real_density(d, rng)
        a, b = _params(rng, cfg)
        payload = {"rho": _desc(rho), "real": _desc(real), "alpha": a, "beta": b}

        def body(name, measure, pl):
            v = measure(rho, a, b)
            rec.compare(0.0, v, pl)
            rec.require(v > 1e-9, pl, {"value": v})
            rec.close(measure(real, a, b), 0.0, pl)
        _each_measure(rec, payload, body)


@check("m2", "mh and me do not increase under real operations")
def _m2(rec, cfg, trials):
    for t, rng in _trial_rngs("m2", cfg, trials):
        d = _dim(t, cfg)
        rho = _state(rng, d)
        ch = random_real_kraus(d, int(rng.integers(1, 4)), rng)
        a, b = _params(rng, cfg)
        out = apply_channel(rho, ch)
        _each_measure(rec, {"rho": _desc(rho), "kraus": list(ch.kraus), "alpha": a, "beta": b},
                      lambda n, m, pl: rec.compare(m(out, a, b), m(rho, a, b), pl))


@check("m3", "mh and me do not increase on average under selective real operations")
def _m3(rec, cfg, trials):
    for t, rng in _trial_rngs("m3", cfg, trials):
        d = _dim(t, cfg)
        rho = _state(rng, d)
        ch = random_real_kraus(d, int(rng.integers(2, 4)), rng)
        a, b = _params(rng, cfg)
        outcomes = kraus_selective_outcomes(rho, ch)
        _each_measure(rec, {"rho": _desc(rho), "kraus": list(ch.kraus), "alpha": a, "beta": b},
                      lambda n, m, pl: rec.compare(sum(p * m(r, a, b) for p, r in outcomes),
                                                   m(rho, a, b), pl))


@check("m4", "mh and me are convex")
def _m4(rec, cfg, trials):
    for t, rng in _trial_rngs("m4", cfg, trials):
        d = _dim(t, cfg)
        lam = rng.dirichlet(np.ones(3))
        rhos = [_state(rng, d) for _ in range(3)]
        mix = sum(l * r for l, r in zip(lam, rhos))
        a, b = _params(rng, cfg)
        _each_measure(rec, {"weights": lam, "alpha": a, "beta": b},
                      lambda n, m, pl: rec.compare(
                          m(mix, a, b), sum(l * m(r, a, b) for l, r in zip(lam, rhos)), pl))


def _direct_sum_pair(rng, cfg, t):
    d = max(2, _dim(t, cfg) // 2)
    return _state(rng, d), _state(rng, d), float(rng.uniform(0.05, 0.95))


@check("m5", "mh is additive under direct sums at beta = 1")
def _m5(rec, cfg, trials):
    for t, rng in _trial_rngs("m5", cfg, trials):
        r1, r2, p = _direct_sum_pair(rng, cfg, t)
        a = float(rng.choice(cfg.alphas))
        rec.close(mh(direct_sum(p, r1, r2), a, 1.0), p * mh(r1, a, 1.0) + (1 - p) * mh(r2, a, 1.0),
                  {"rho1": _desc(r1), "rho2": _desc(r2), "p": p, "alpha": a})


# ------------------------------------------------------ structural theorems

@check("thm2", "(1/(1-a)) mh(1-a, b) equals (1/a) mh(a, b)", tol=1e-10)
def _thm2(rec, cfg, trials):
    for t, rng in _trial_rngs("thm2", cfg, trials):
        rho = _state(rng, _dim(t, cfg))
        a, b = _params(rng, cfg)
        rec.close(mh(rho, 1 - a, b) / (1 - a), mh(rho, a, b) / a,
                  {"rho": _desc(rho), "alpha": a, "beta": b})


def _superadditivity(check_id, measure, rec, cfg, trials):
    for t, rng in _trial_rngs(check_id, cfg, trials):
        r1, r2, p = _direct_sum_pair(rng, cfg, t)
        a, b = _params(rng, cfg)
        rec.compare(p * measure(r1, a, b) + (1 - p) * measure(r2, a, b),
                    measure(direct_sum(p, r1, r2), a, b),
                    {"rho1": _desc(r1), "rho2": _desc(r2), "p": p, "alpha": a, "beta": b})


def _additivity(check_id, measure, trace_of, rec, cfg, trials):
    strict_seen = 0
    for t, rng in _trial_rngs(check_id, cfg, trials):
        r1, r2, p = _direct_sum_pair(rng, cfg, t)
        a, b = _params(rng, cfg)
        payload = {"rho1": _desc(r1), "rho2": _desc(r2), "p": p, "alpha": a}
        joint = measure(direct_sum(p, r1, r2), a, 1.0)
        rec.close(joint, p * measure(r1, a, 1.0) + (1 - p) * measure(r2, a, 1.0),
                  {**payload, "beta": 1.0})
        # equal traces give equality for any beta
        twin = r1.conj()
        rec.close(measure(direct_sum(p, r1, twin), a, b),
                  p * measure(r1, a, b) + (1 - p) * measure(twin, a, b), {**payload, "beta": b})
        if b < 1.0 and abs(trace_of(r1, a) - trace_of(r2, a)) > 1e-3:
            gap = (p * measure(r1, a, b) + (1 - p) * measure(r2, a, b)
                   - measure(direct_sum(p, r1, r2), a, b))
            strict_seen += 1
            rec.require(abs(gap) > 1e-12, {**payload, "beta": b}, {"gap": gap})
    rec.telemetry["strict_cases_checked"] = strict_seen


@check("thm3", "mh is superadditive under direct sums")
def _thm3(rec, cfg, trials):
    _superadditivity("thm3", MEASURES["mh"], rec, cfg, trials)


@check("cor1", "mh is additive under direct sums iff beta = 1 (or the two traces coincide)")
def _cor1(rec, cfg, trials):
    _additivity("cor1", MEASURES["mh"],
                lambda r, a: trace_product_power(r, r.conj(), a), rec, cfg, trials)


def _partial_trace_check(check_id, measure, rec, cfg, trials):
    for t, rng in _trial_rngs(check_id, cfg, trials):
        db = max(2, _dim(t, cfg) // 2)
        rho = _state(rng, 2 * db)
        a, b = _params(rng, cfg)
        keep = "first" if t % 2 == 0 else "second"
        rec.compare(measure(partial_trace(rho, (2, db), keep), a, b), measure(rho, a, b),
                    {"rho": _desc(rho), "keep": keep, "alpha": a, "beta": b})


@check("thm4", "mh does not increase under partial trace")
def _thm4(rec, cfg, trials):
    _partial_trace_check("thm4", MEASURES["mh"], rec, cfg, trials)


def _tensor_check(check_id, measure, rec, cfg, trials, equality_with_real: bool):
    for t, rng in _trial_rngs(check_id, cfg, trials):
        rho, tau = _state(rng, 2), _state(rng, 2)
        real = random_real_density(2, rng)
        a, b = _params(rng, cfg)
        payload = {"rho": _desc(rho), "tau": _desc(tau), "alpha": a, "beta": b}
        rec.compare(measure(tensor(rho, tau), a, b), measure(rho, a, b) + measure(tau, a, b), payload)
        if equality_with_real:
            rec.close(measure(tensor(rho, real), a, b), measure(rho, a, b), payload)
            rec.close(measure(tensor(real, tau), a, b), measure(tau, a, b), payload)


@check("thm5", "mh is subadditive under tensor products, with equality when a factor is real")
def _thm5(rec, cfg, trials):
    _tensor_check("thm5", MEASURES["mh"], rec, cfg, trials, True)


@check("thm6", "mh is nondecreasing in alpha and nonincreasing in beta")
def _thm6(rec, cfg, trials):
    for t, rng in _trial_rngs("thm6", cfg, trials):
        rho = _state(rng, _dim(t, cfg))
        payload = {"rho": _desc(rho)}
        b = float(rng.choice(cfg.betas))
        vals = [mh(rho, a, b) for a in sorted(cfg.alphas)]
        for lo, hi in zip(vals, vals[1:]):
            rec.compare(lo, hi, {**payload, "beta": b})
        a = float(rng.choice(cfg.alphas))
        vals = [mh(rho, a, bb) for bb in sorted(cfg.betas)]
        for lo, hi in zip(vals, vals[1:]):
            rec.compare(hi, lo, {**payload, "alpha": a})


@check("thm7", "1 - f_aa <= 1 - f_az <= mh(a, 1) <= mh(a, b) for max(a, 1-a) <= z < 1")
def _thm7(rec, cfg, trials):
    for t, rng in _trial_rngs("thm7", cfg, trials):
        rho = _state(rng, _dim(t, cfg))
        a, b = _params(rng, cfg)
        z = float(rng.uniform(max(a, 1 - a), 0.99))
        az, tsallis = m_alpha_z(rho, a, z), m_tsallis(rho, a)
        payload = {"rho": _desc(rho), "alpha": a, "beta": b, "z": z}
        # z = alpha is a legal alpha-z pair only when alpha >= 1/2
        if a >= 0.5:
            rec.compare(m_alpha_z(rho, a, a), az, payload)
        rec.compare(az, tsallis, payload)
        rec.compare(tsallis, mh(rho, a, 1.0), payload)
        rec.compare(mh(rho, a, 1.0), mh(rho, a, b), payload)


@check("thm9_1", "me is superadditive under direct sums")
def _thm9_1(rec, cfg, trials):
    _superadditivity("thm9_1", MEASURES["me"], rec, cfg, trials)


@check("thm9_2", "me is additive under direct sums iff beta = 1 (or the two traces coincide)")
def _thm9_2(rec, cfg, trials):
    _additivity("thm9_2", MEASURES["me"], lambda r, a: me(r, a, 1.0).achieved_trace,
                rec, cfg, trials)


@check("thm9_3", "me does not increase under partial trace")
def _thm9_3(rec, cfg, trials):
    _partial_trace_check("thm9_3", MEASURES["me"], rec, cfg, trials)


@check("thm9_4", "me is subadditive under tensor products")
def _thm9_4(rec, cfg, trials):
    _tensor_check("thm9_4", MEASURES["me"], rec, cfg, trials, False)


@check("thm9_5", "me is nonincreasing in beta")
def _thm9_5(rec, cfg, trials):
    for t, rng in _trial_rngs("thm9_5", cfg, trials):
        rho = _state(rng, _dim(t, cfg))
        a = float(rng.choice(cfg.alphas))
        vals = [me(rho, a, b).value for b in sorted(cfg.betas)]
        for lo, hi in zip(vals, vals[1:]):
            rec.compare(hi, lo, {"rho": _desc(rho), "alpha": a})


@check("orthogonal_invariance", "mh and me are invariant under real orthogonal conjugation")
def _orthogonal(rec, cfg, trials):
    for t, rng in _trial_rngs("orthogonal_invariance", cfg, trials):
        d = _dim(t, cfg)
        rho = _state(rng, d)
        o = random_orthogonal(d, rng)
        rotated = o @ rho @ o.T
        a, b = _params(rng, cfg)
        _each_measure(rec, {"rho": _desc(rho), "orthogonal": o, "alpha": a, "beta": b},
                      lambda n, m, pl: rec.close(m(rotated, a, b), m(rho, a, b), pl))


# ------------------------------------------------------------------ remarks

@check("remark1", "entangled state with real marginals: mh(rho_ab) = 1/((1-a) b) > 0 = mh(marginals)")
def _remark1(rec, cfg, trials):
    rho = remark1_state()
    for a in cfg.alphas:
        for b in cfg.betas:
            payload = {"alpha": a, "beta": b}
            rec.close(mh(rho, a, b), 1.0 / ((1 - a) * b), payload)
            for keep in ("first", "second"):
                rec.close(mh(partial_trace(rho, (2, 2), keep), a, b), 0.0, payload)


@check("remark3", "mh >= me on the (0, r2, 0) qubit family; general states as telemetry")
def _remark3(rec, cfg, trials):
    for r2 in np.linspace(-1.0, 1.0, 101):
        rho = bloch_to_density((0.0, r2, 0.0))
        for a in cfg.alphas:
            for b in cfg.betas:
                rec.compare(me(rho, a, b).value, mh(rho, a, b), {"r2": r2, "alpha": a, "beta": b})
    seen = {"qubit": [0, 0, 0.0], "d4": [0, 0, 0.0]}
    n_qubit = max(trials, 500)
    for t, rng in _trial_rngs("remark3", cfg, n_qubit + 100):
        key = "qubit" if t < n_qubit else "d4"
        rho = bloch_to_density(random_bloch(rng)) if key == "qubit" else random_density(4, rng)
        a, b = _params(rng, cfg)
        gap = me(rho, a, b).value - mh(rho, a, b)
        seen[key][0] += 1
        if gap > 1e-9:
            seen[key][1] += 1
        seen[key][2] = max(seen[key][2], gap)
    rec.telemetry["conjecture"] = {k: {"samples": v[0], "me_above_mh": v[1], "max_excess": v[2]}
                                   for k, v in seen.items()}


# --------------------------------------------------- explicit formula checks

@check("eq22_crosscheck", "explicit qubit mh formula agrees with the spectral route", tol=1e-8)
def _eq22(rec, cfg, trials):
    for t, rng in _trial_rngs("eq22_crosscheck", cfg, trials):
        v = random_bloch(rng)
        a, b = _params(rng, cfg)
        rec.close(mh_qubit_closed_form(v, a, b), mh(bloch_to_density(v), a, b),
                  {"bloch": list(v), "alpha": a, "beta": b})


@check("eq24_crosscheck", "explicit qubit me formula agrees with the two-variable maximiser", tol=1e-8)
def _eq24(rec, cfg, trials):
    for t, rng in _trial_rngs("eq24_crosscheck", cfg, trials):
        v = random_bloch(rng)
        a, b = _params(rng, cfg)
        rec.close(eq24_value(v, a, b), me(bloch_to_density(v), a, b).value,
                  {"bloch": list(v), "alpha": a, "beta": b})


@check("eq26_crosscheck", "closed-form Werner expression agrees with mh(werner(k))")
def _eq26(rec, cfg, trials):
    for k in np.linspace(0.0, 1.0, 21):
        for a in cfg.alphas:
            for b in cfg.betas:
                rec.close(werner_mh_closed_form(k, a, b), mh(werner(k), a, b),
                          {"k": k, "alpha": a, "beta": b})


# ---------------------------------------------------------------- drivers

def run_check(check_id: str, cfg: SuiteConfig | None = None) -> CheckReport:
    cfg = cfg or SuiteConfig()
    try:
        entry = REGISTRY[check_id]
    except KeyError:
        raise UnknownCheck(f"unknown check {check_id!r}") from None
    tol = float(cfg.tolerances.get(check_id, entry.tol))
    trials = min(cfg.trials, entry.max_trials) if entry.max_trials else cfg.trials
    rec = Recorder(tol)
    start = time.perf_counter()
    entry.func(rec, cfg, trials)
    elapsed = int(round(1000 * (time.perf_counter() - start)))
    return CheckReport(check_id, rec.trials, 0 if entry.telemetry_only else rec.failures,
                       rec.worst, rec.counterexamples, elapsed, tol, entry.statement,
                       entry.telemetry_only, rec.telemetry)


def run_all(cfg: SuiteConfig | None = None) -> list[CheckReport]:
    return [run_check(cid, cfg) for cid in REGISTRY]

"""Imaginarity monotones built on the unified (alpha, beta)-relative entropy.

Two families are provided:

``mh``
    The conjugate-based monotone ``D_alpha^beta(rho || rho*)``.
``me``
    The minimum of ``D_alpha^beta(rho || sigma)`` over real states ``sigma``.

Both are a decreasing function ``h`` of a quasi-entropy ``T`` (see
:func:`imaginarity.divergences.h_alpha_beta`), so ``me`` is obtained by
maximising ``T(sigma) = tr(rho^alpha sigma^(1-alpha))`` over real states.
Three routes are implemented for that maximisation:

* ``qubit_analytic``: the Bloch-vector solution through :func:`lemma3_maximize`;
* ``spectral``: for real symmetric ``sigma`` only the real part ``X`` of
  ``rho^alpha`` contributes to ``T``, and the trace Hölder inequality gives
  ``max T = (tr X^(1/alpha))^alpha`` attained at ``sigma ~ X^(1/alpha)``;
* ``numeric``: multi-start Nelder-Mead over ``sigma = L L^T / tr(L L^T)``.

The comparison measures (relative entropy, Tsallis and alpha-z Rényi
imaginarity) and the Werner-state closed forms live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from .divergences import (AlphaZParams, alpha_z_fidelity, check_monotone_params,
                          h_alpha_beta)
from .errors import ParamOutOfRange, PreconditionViolated, SingularDenominator
from .linalg import (DEFAULT_TOL, NOISE_FACTOR, Tolerances, as_matrix, conjugate, mat_pow,
                     spectral_apply, trace_product_power, von_neumann_entropy)
from .states import (BlochVector, bloch_to_density, density_to_bloch, is_real_state,
                     normalized_vector)


@dataclass(frozen=True)
class MonotoneParams:
    alpha: float
    beta: float

    def __post_init__(self):
        check_monotone_params(self.alpha, self.beta)


@dataclass(frozen=True)
class OptimizerConfig:
    grid_resolution: int = 400
    restarts: int = 8
    max_iters: int = 20000
    value_tol: float = 1e-10
    simplex_tol: float = 1e-10
    rng_seed: int = 0

    def __post_init__(self):
        if min(self.grid_resolution, self.restarts, self.max_iters) < 1:
            raise ValueError("optimizer counts must be positive")
        if self.value_tol <= 0 or self.simplex_tol <= 0:
            raise ValueError("optimizer tolerances must be positive")


@dataclass
class MEResult:
    """Value of ``me`` together with the real state attaining it."""

    value: float
    minimizer: np.ndarray
    method: str
    iterations: int
    achieved_trace: float
    converged: bool = True
    diagnostics: dict = field(default_factory=dict)


class Lemma3Solution(NamedTuple):
    x0: float
    theta0: float
    f_max: float


# ----------------------------------------------------------------------- M^H

def mh(rho, alpha: float, beta: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Conjugate-based monotone ``(T^beta - 1)/((alpha - 1) beta)``, ``T = tr(rho^a (rho*)^(1-a))``."""
    check_monotone_params(alpha, beta)
    rho = as_matrix(rho)
    if is_real_state(rho, tol.real_tol):
        return 0.0
    T = trace_product_power(rho, conjugate(rho), alpha, tol)
    return h_alpha_beta(T, alpha, beta)


def mh_pure(psi, alpha: float, beta: float) -> float:
    """Pure-state shortcut ``(|<psi|psi*>|^(2 beta) - 1)/((alpha - 1) beta)``."""
    check_monotone_params(alpha, beta)
    psi = normalized_vector(psi)
    overlap = abs(np.vdot(psi, psi.conj())) ** 2
    return h_alpha_beta(overlap, alpha, beta)


def eq22_trace(v, alpha: float) -> float:
    """Explicit qubit formula for ``tr(rho^alpha (rho*)^(1-alpha))`` in Bloch coordinates.

    Singular when ``r = |r3|``; raises :class:`SingularDenominator` within 1e-9.
    """
    r1, r2, r3 = (float(x) for x in v)
    r = np.sqrt(r1**2 + r2**2 + r3**2)
    if r < 1e-9 or abs(r - r3) < 1e-9 or abs(r + r3) < 1e-9:
        raise SingularDenominator("explicit qubit kernel is singular for r = |r3|")
    qm, qp = r - r3, r + r3
    lower = (1 - r) * ((r - r2**2 / qm) ** 2 + r1**2 * r2**2 / qm**2)
    upper = (1 + r) * ((r - r2**2 / qp) ** 2 + r1**2 * r2**2 / qp**2)
    cross = r2**2 * ((1 - r) ** alpha * (1 + r) ** (1 - alpha)
                     + (1 - r) ** (1 - alpha) * (1 + r) ** alpha)
    return (lower + upper + cross) / (2 * r**2)


def mh_qubit_closed_form(v, alpha: float, beta: float) -> float:
    """Qubit ``mh`` from the explicit Bloch formula; spectral fallback where it is singular."""
    check_monotone_params(alpha, beta)
    v = BlochVector(*map(float, v))
    if v.r2 == 0.0:
        return 0.0
    try:
        T = eq22_trace(v, alpha)
    except SingularDenominator:
        return mh(bloch_to_density(v), alpha, beta)
    return h_alpha_beta(T, alpha, beta)


# ------------------------------------- two-variable qubit maximisation

def lemma3_objective(x, theta, A: float, B: float, C: float, alpha: float):
    """``A[x^(1-a) + (1-x)^(1-a)] + (B sin t + C cos t)[(1-x)^(1-a) - x^(1-a)]``."""
    x = np.asarray(x, dtype=float)
    lo, hi = x ** (1 - alpha), (1 - x) ** (1 - alpha)
    return A * (lo + hi) + (B * np.sin(theta) + C * np.cos(theta)) * (hi - lo)


def lemma3_maximize(A: float, B: float, C: float, alpha: float) -> Lemma3Solution:
    """Maximiser of :func:`lemma3_objective` over ``x in [0, 1/2]``, ``theta in [0, 2 pi]``.

    Requires ``A > sqrt(B^2 + C^2) > 0``.
    """
    R = float(np.hypot(B, C))
    if R == 0.0 or not A > R:
        raise PreconditionViolated(f"need A > sqrt(B^2 + C^2) > 0, got A={A}, R={R}")
    if not 0.0 < alpha < 1.0:
        raise ParamOutOfRange(f"alpha must lie in (0, 1), got {alpha}")
    ratio = ((A + R) / (A - R)) ** (1.0 / alpha)
    x0 = 1.0 / (ratio + 1.0)
    theta0 = float(np.arctan2(B, C) % (2 * np.pi))
    f_max = (A + R) * (1.0 - x0) ** (1 - alpha) + (A - R) * x0 ** (1 - alpha)
    return Lemma3Solution(x0, theta0, f_max)


# ----------------------------------------------------------------------- M^E

def _qubit_coefficients(v: BlochVector, alpha: float):
    r = v.norm
    lam1, lam2 = (1 - r) / 2, (1 + r) / 2
    # same rounding-noise floor as the spectral kernel
    p1 = lam1**alpha if lam1 > NOISE_FACTOR * np.finfo(float).eps else 0.0
    p2 = lam2**alpha
    A = 0.5 * (p1 + p2)
    B = v.r1 / (2 * r) * (p2 - p1)
    C = v.r3 / (2 * r) * (p2 - p1)
    return A, B, C


def me_qubit_closed_form(v, alpha: float, beta: float) -> MEResult:
    """Analytic ``me`` for a qubit given by its Bloch vector.

    The optimal real state has Bloch vector ``c0 (B, 0, C)/sqrt(B^2 + C^2)``
    with ``c0 = 1 - 2 x0``. The variant with the ``s3`` sign flipped is also
    evaluated; whichever attains the larger trace is kept and the choice is
    recorded under ``diagnostics["sign_choice"]``.
    """
    check_monotone_params(alpha, beta)
    v = BlochVector(*map(float, v))
    rho = bloch_to_density(v)
    r = v.norm
    if r == 0.0 or abs(v.r2) <= 1e-15:
        return MEResult(0.0, rho, "qubit_analytic", 0, 1.0,
                        diagnostics={"case": "free_state"})
    A, B, C = _qubit_coefficients(v, alpha)
    if B == 0.0 and C == 0.0:
        T = 2.0**alpha * A
        return MEResult(h_alpha_beta(T, alpha, beta), np.eye(2, dtype=complex) / 2,
                        "qubit_analytic", 0, T, diagnostics={"case": "maximally_mixed"})
    sol = lemma3_maximize(A, B, C, alpha)
    R = np.hypot(B, C)
    c0 = 1.0 - 2.0 * sol.x0
    aligned = (c0 * B / R, 0.0, c0 * C / R)
    flipped = (c0 * B / R, 0.0, -c0 * C / R)
    t_aligned = trace_product_power(rho, bloch_to_density(aligned), alpha)
    t_flipped = trace_product_power(rho, bloch_to_density(flipped), alpha)
    if t_flipped > t_aligned:
        choice, s = "negated_s3", flipped
    else:
        choice, s = "aligned", aligned
    diagnostics = {"case": "lemma3", "sign_choice": choice, "x0": sol.x0,
                   "theta0": sol.theta0, "trace_aligned": t_aligned,
                   "trace_negated_s3": t_flipped}
    return MEResult(h_alpha_beta(sol.f_max, alpha, beta), bloch_to_density(s),
                    "qubit_analytic", 0, sol.f_max, diagnostics=diagnostics)


def eq24_value(v, alpha: float, beta: float) -> float:
    """Explicit Bloch-coordinate expression for qubit ``me`` (nonreal ``rho``, ``r1^2 + r3^2 > 0``)."""
    check_monotone_params(alpha, beta)
    r1, r2, r3 = (float(x) for x in v)
    r = np.sqrt(r1**2 + r2**2 + r3**2)
    q = np.sqrt(r1**2 + r3**2)
    if q == 0.0 or r2 == 0.0:
        raise SingularDenominator("explicit expression needs r2 != 0 and r1^2 + r3^2 > 0")
    lo, hi = (1 - r) ** alpha, (1 + r) ** alpha
    ratio = ((r - q) * lo + (r + q) * hi) / ((r + q) * lo + (r - q) * hi)
    x0 = 1.0 / (ratio ** (1 / alpha) + 1.0)
    lo2, hi2 = ((1 - r) / 2) ** alpha, ((1 + r) / 2) ** alpha
    big = (1 - q / r) * lo2 + (1 + q / r) * hi2
    small = (1 + q / r) * lo2 + (1 - q / r) * hi2
    inner = (1 - x0) ** (1 - alpha) * big + small * x0 ** (1 - alpha)
    return (inner**beta / 2**beta - 1.0) / ((alpha - 1) * beta)


def real_part_power(rho, alpha: float, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``Re(rho^alpha)``: the only part of ``rho^alpha`` seen by a real state."""
    return mat_pow(rho, alpha, tol).real


def me_spectral(rho, alpha: float, beta: float, tol: Tolerances = DEFAULT_TOL) -> MEResult:
    """``me`` in any dimension via the optimal real state ``X^(1/alpha)/tr X^(1/alpha)``."""
    check_monotone_params(alpha, beta)
    rho = as_matrix(rho)
    if is_real_state(rho, tol.real_tol):
        return MEResult(0.0, rho.real.astype(complex), "spectral", 0, 1.0)
    X = real_part_power(rho, alpha, tol)
    sigma = spectral_apply(X, lambda w: w ** (1.0 / alpha), tol).real
    norm = np.trace(sigma)
    sigma = (sigma + sigma.T) / (2 * norm)
    T = float(norm**alpha)
    return MEResult(h_alpha_beta(T, alpha, beta), sigma.astype(complex), "spectral", 0, T)


def _cholesky_start(sigma, d):
    return np.linalg.cholesky(sigma + 1e-9 * np.eye(d))[np.tril_indices(d)]


def me_numeric(rho, alpha: float, beta: float, cfg: OptimizerConfig | None = None) -> MEResult:
    """``me`` by derivative-free maximisation of ``tr(rho^a sigma^(1-a))`` over real states.

    ``sigma = L L^T / tr(L L^T)`` with ``L`` lower triangular. The first two
    starts are ``(rho + rho^T)/2`` and ``I/d``; the rest are Gaussian draws
    from ``cfg.rng_seed``. Each start is re-launched from its own optimum
    until it improves by less than ``cfg.value_tol``, which keeps Nelder-Mead from
    stalling on a collapsed simplex.
    """
    check_monotone_params(alpha, beta)
    cfg = cfg or OptimizerConfig()
    rho = as_matrix(rho)
    d = rho.shape[0]
    if is_real_state(rho, DEFAULT_TOL.real_tol):
        return MEResult(0.0, rho.real.astype(complex), "numeric", 0, 1.0)
    # for real symmetric sigma, tr(rho^a sigma^s) = sum_k w_k^s v_k^T Re(rho^a) v_k
    X = mat_pow(rho, alpha).real
    idx = np.tril_indices(d)
    s = 1.0 - alpha
    L = np.zeros((d, d))

    def to_state(x):
        L[idx] = x
        sig = L @ L.T
        return sig / sig.trace()

    def objective(x):
        if not x.any():
            return 0.0
        w, V = np.linalg.eigh(to_state(x))
        return -float(np.maximum(w, 0.0) ** s @ np.einsum("ik,ij,jk->k", V, X, V))

    rng = np.random.default_rng(cfg.rng_seed)
    starts = [_cholesky_start(rho.real, d), _cholesky_start(np.eye(d) / d, d)]
    while len(starts) < cfg.restarts:
        starts.append(rng.normal(size=idx[0].size))
    starts = starts[:cfg.restarts]

    best = None
    total_iters = 0
    converged_all = True
    # stop on the spread of simplex values alone; the vertex spread is left free
    options = {"xatol": np.inf, "fatol": cfg.simplex_tol,
               "maxiter": cfg.max_iters, "maxfev": cfg.max_iters,
               # dimension-adapted coefficients; ~5x faster from d = 4 on
               "adaptive": d > 2}
    for k, x in enumerate(starts):
        current = objective(x)
        for _ in range(20):
            res = minimize(objective, x, method="Nelder-Mead", options=options)
            total_iters += res.nit
            if not res.success:
                converged_all = False
            improved = current - res.fun
            x, current = res.x, res.fun
            if improved < cfg.value_tol:
                break
        if best is None or current < best[0]:
            best = (current, k, x)
    T = -best[0]
    sigma = to_state(best[2])
    return MEResult(h_alpha_beta(T, alpha, beta), sigma.astype(complex), "numeric",
                    total_iters, T, converged=converged_all,
                    diagnostics={"best_restart": best[1]})


def me(rho, alpha: float, beta: float, cfg: OptimizerConfig | None = None,
       method: str = "auto") -> MEResult:
    """Minimisation-based monotone.

    ``method="auto"`` uses the Bloch solution for qubits and the spectral
    solution otherwise; ``"numeric"``, ``"spectral"`` and ``"qubit_analytic"``
    force a route.
    """
    rho = as_matrix(rho)
    if method == "auto":
        method = "qubit_analytic" if rho.shape[0] == 2 else "spectral"
    if method == "qubit_analytic":
        return me_qubit_closed_form(density_to_bloch(rho), alpha, beta)
    if method == "spectral":
        return me_spectral(rho, alpha, beta)
    if method == "numeric":
        return me_numeric(rho, alpha, beta, cfg)
    raise ValueError(f"unknown method {method!r}")


# -------------------------------------------------------- comparison measures

def m_relative_entropy(rho, tol: Tolerances = DEFAULT_TOL) -> float:
    """``S((rho + rho^T)/2) - S(rho)`` in bits."""
    rho = as_matrix(rho)
    return von_neumann_entropy(0.5 * (rho + rho.T), tol) - von_neumann_entropy(rho, tol)


def m_tsallis(rho, u: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """``1 - tr(rho^u (rho*)^(1-u))``."""
    if not 0.0 < u < 1.0:
        raise ParamOutOfRange(f"u must lie in (0, 1), got {u}")
    rho = as_matrix(rho)
    return 1.0 - trace_product_power(rho, conjugate(rho), u, tol)


def m_alpha_z(rho, alpha: float, z: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """``1 - f_{alpha,z}(rho, rho*)``; ``z = alpha`` gives the alpha-Rényi variant."""
    params = AlphaZParams(alpha, z)
    rho = as_matrix(rho)
    return 1.0 - alpha_z_fidelity(rho, conjugate(rho), params, tol)


# ------------------------------------------------------------ Werner family

def werner_mh_closed_form(k: float, alpha: float, beta: float) -> float:
    """Closed-form expression for ``mh`` of the modified Werner state.

    Evaluated literally as
    ``([(3k+1)^a (1-k)^(1-a) + (3k+1)^(1-a) (1-k)^a - 2k + 6]/8)^beta``
    inside ``h``. It does not coincide with ``mh(werner(k))`` for ``k > 0``;
    see the README.
    """
    if not 0.0 <= k <= 1.0:
        raise ParamOutOfRange(f"Werner parameter must lie in [0, 1], got {k}")
    check_monotone_params(alpha, beta)
    a = alpha
    lo = (1 - k) ** a if k < 1 else 0.0
    lo_c = (1 - k) ** (1 - a) if k < 1 else 0.0
    bracket = ((3 * k + 1) ** a * lo_c + (3 * k + 1) ** (1 - a) * lo - 2 * k + 6) / 8
    return h_alpha_beta(bracket, alpha, beta)


def werner_linear_entropy(k: float) -> float:
    if not 0.0 <= k <= 1.0:
        raise ParamOutOfRange(f"Werner parameter must lie in [0, 1], got {k}")
    return 0.75 * (1.0 - k * k)

"""Unified (alpha, beta)-relative entropy and the auxiliary divergences.

All logarithms are base 2. The unified entropy dispatches on its parameters
in a fixed priority order::

    alpha == 1        -> Umegaki relative entropy
    beta == 0         -> Renyi branch    log2(T) / (alpha - 1)
    beta == 1         -> Tsallis branch  (T - 1) / (alpha - 1)
    beta == 1/alpha   -> "1/alpha" branch, evaluated literally (see lim_branch)
    otherwise         -> (T^beta - 1) / ((alpha - 1) beta)

where ``T = tr(rho^alpha sigma^(1-alpha))``. Equality tests use ``BRANCH_TOL``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParamOutOfRange, SupportError
from .linalg import (DEFAULT_TOL, Tolerances, eigh, mat_pow, spectral_apply,
                     support_projector, trace_product_power)

BRANCH_TOL = 1e-12


@dataclass(frozen=True)
class EntropyParams:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (0.0 <= self.alpha <= 1.0) or not np.isfinite(self.beta):
            raise ParamOutOfRange(f"need alpha in [0, 1] and finite beta, got "
                                  f"({self.alpha}, {self.beta})")

    @property
    def branch(self) -> str:
        a, b = self.alpha, self.beta
        if abs(a - 1.0) <= BRANCH_TOL:
            return "umegaki"
        if abs(b) <= BRANCH_TOL:
            return "renyi"
        if abs(b - 1.0) <= BRANCH_TOL:
            return "tsallis"
        if a > 0 and abs(b - 1.0 / a) <= BRANCH_TOL:
            return "lim"
        return "generic"


@dataclass(frozen=True)
class AlphaZParams:
    alpha: float
    z: float

    def __post_init__(self):
        a, z = self.alpha, self.z
        if not (0.0 < a < 1.0) or not (max(a, 1.0 - a) <= z < 1.0):
            raise ParamOutOfRange(f"need 0 < max(alpha, 1-alpha) <= z < 1, got "
                                  f"alpha={a}, z={z}")


def check_monotone_params(alpha: float, beta: float) -> None:
    """Reject parameters outside ``alpha in (0, 1)``, ``beta in (0, 1]``."""
    if not (0.0 < alpha < 1.0) or not (0.0 < beta <= 1.0):
        raise ParamOutOfRange(f"monotones need alpha in (0, 1) and beta in (0, 1], "
                              f"got alpha={alpha}, beta={beta}")


def h_alpha_beta(T: float, alpha: float, beta: float) -> float:
    """Map a quasi-entropy value ``T`` to ``(T^beta - 1) / ((alpha - 1) beta)``."""
    if not (0.0 < alpha < 1.0) or beta == 0.0:
        raise ParamOutOfRange(f"need alpha in (0, 1) and beta != 0, got ({alpha}, {beta})")
    T = max(float(T), 0.0)
    if T == 0.0:
        return -1.0 / ((alpha - 1.0) * beta) if beta > 0 else np.inf
    return (T**beta - 1.0) / ((alpha - 1.0) * beta)


def renyi_branch(T: float, alpha: float) -> float:
    if T <= 0:
        return np.inf
    return float(np.log2(T) / (alpha - 1.0))


def tsallis_branch(T: float, alpha: float) -> float:
    return (T - 1.0) / (alpha - 1.0)


def lim_branch(T: float, alpha: float) -> float:
    """The ``beta = 1/alpha`` branch taken literally, with ``alpha -> 1/alpha``.

    ``T`` is the usual ``tr(rho^alpha sigma^(1-alpha))``; the result is
    ``(T^(1/alpha) - 1) / (1/alpha - 1)``, which is nonpositive for ``T <= 1``.
    """
    inv = 1.0 / alpha
    return (max(T, 0.0) ** inv - 1.0) / (inv - 1.0)


def quasi_entropy(rho, sigma, alpha: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """``tr(rho^alpha sigma^(1-alpha))`` for ``alpha`` in ``[0, 1)``."""
    if alpha == 0.0:
        return float(np.trace(support_projector(rho, tol) @ np.asarray(sigma)).real)
    return trace_product_power(rho, sigma, alpha, tol)


def umegaki(rho, sigma, tol: Tolerances = DEFAULT_TOL, on_support_error: str = "raise") -> float:
    """``tr(rho log2 rho) - tr(rho log2 sigma)``.

    When ``supp(rho)`` is not inside ``supp(sigma)`` this raises
    :class:`SupportError`, or returns ``inf`` if ``on_support_error="inf"``.
    """
    w, v = eigh(sigma, tol)
    kernel = v[:, w <= tol.psd_tol]
    leak = float(np.trace(kernel.conj().T @ np.asarray(rho) @ kernel).real) if kernel.size else 0.0
    if leak > tol.psd_tol:
        if on_support_error == "inf":
            return np.inf
        raise SupportError(f"rho has weight {leak:.3e} outside the support of sigma")

    def safe_log2(x):
        out = np.zeros_like(x)
        out[x > tol.psd_tol] = np.log2(x[x > tol.psd_tol])
        return out

    log_rho = spectral_apply(rho, safe_log2, tol)
    log_sigma = spectral_apply(sigma, safe_log2, tol)
    return float(np.trace(np.asarray(rho) @ (log_rho - log_sigma)).real)


def unified_relative_entropy(rho, sigma, params: EntropyParams,
                             tol: Tolerances = DEFAULT_TOL,
                             on_support_error: str = "raise") -> float:
    """Unified (alpha, beta)-relative entropy ``D_alpha^beta(rho || sigma)``."""
    branch = params.branch
    if branch == "umegaki":
        return umegaki(rho, sigma, tol, on_support_error)
    a, b = params.alpha, params.beta
    T = quasi_entropy(rho, sigma, a, tol)
    if branch == "renyi":
        return renyi_branch(T, a)
    if branch == "tsallis":
        return tsallis_branch(T, a)
    if branch == "lim":
        return lim_branch(T, a)
    if T <= 0.0 and b < 0:
        return np.inf
    return (max(T, 0.0) ** b - 1.0) / ((a - 1.0) * b)


def alpha_z_fidelity(rho, sigma, params: AlphaZParams, tol: Tolerances = DEFAULT_TOL) -> float:
    """``tr[(sigma^((1-a)/2z) rho^(a/z) sigma^((1-a)/2z))^z]``."""
    a, z = params.alpha, params.z
    s = mat_pow(sigma, (1.0 - a) / (2.0 * z), tol)
    inner = s @ mat_pow(rho, a / z, tol) @ s
    inner = 0.5 * (inner + inner.conj().T)
    return float(np.trace(mat_pow(inner, z, tol)).real)

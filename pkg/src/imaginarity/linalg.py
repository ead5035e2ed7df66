"""Dense Hermitian matrix kernel.

Everything downstream (divergences, monotones, the verification harness)
goes through the handful of functions here: a checked eigendecomposition,
fractional powers of PSD matrices, tensor products, direct sums, partial
traces and the quasi-entropy ``tr(rho^a sigma^(1-a))``.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Functions never
mutate their inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple

import numpy as np

from .errors import DimMismatch, InvalidExponent, NoConvergence, NotHermitian, NotPSD


@dataclass(frozen=True)
class Tolerances:
    herm_tol: float = 1e-10
    trace_tol: float = 1e-10
    psd_tol: float = 1e-9
    real_tol: float = 1e-12

    def __post_init__(self):
        for name in ("herm_tol", "trace_tol", "psd_tol", "real_tol"):
            value = getattr(self, name)
            if not np.isfinite(value) or value < 0:
                raise ValueError(f"{name} must be finite and nonnegative, got {value}")


DEFAULT_TOL = Tolerances()


class EigenSystem(NamedTuple):
    """Ascending eigenvalues and the matching orthonormal eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(m) -> np.ndarray:
    """Coerce ``m`` to a square complex array, raising :class:`DimMismatch` otherwise."""
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DimMismatch(f"expected a square matrix, got shape {arr.shape}")
    return arr


def hermiticity_error(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


def eigh(h, tol: Tolerances = DEFAULT_TOL) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix.

    The matrix is symmetrised as ``(H + H^dagger)/2`` after the Hermiticity
    check so round-off in the input does not leak into the spectrum.

    Raises
    ------
    NotHermitian
        If ``max|H - H^dagger| > tol.herm_tol``.
    NoConvergence
        If LAPACK fails to converge.
    """
    h = as_matrix(h)
    err = hermiticity_error(h)
    if err > tol.herm_tol:
        raise NotHermitian(f"matrix is not Hermitian (max deviation {err:.3e})")
    h = 0.5 * (h + h.conj().T)
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure
        raise NoConvergence(str(exc)) from exc
    return EigenSystem(w, v)


# Eigenvalues below this multiple of eps * ||H|| are rounding noise. They are
# set to exactly zero, otherwise small fractional powers blow them up
# (for instance (1e-16)^0.1 is about 0.025).
NOISE_FACTOR = 64


def _clipped_spectrum(h, tol: Tolerances) -> EigenSystem:
    w, v = eigh(h, tol)
    if w[0] < -tol.psd_tol:
        raise NotPSD(f"smallest eigenvalue {w[0]:.3e} below -{tol.psd_tol:g}")
    floor = NOISE_FACTOR * np.finfo(float).eps * max(1.0, float(np.max(np.abs(w))))
    return EigenSystem(np.where(w > floor, w, 0.0), v)


def spectral_apply(h, func: Callable[[np.ndarray], np.ndarray],
                   tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Return ``V diag(func(w)) V^dagger`` for a PSD matrix ``h``.

    ``func`` receives the clipped (nonnegative) eigenvalues.
    """
    w, v = _clipped_spectrum(h, tol)
    return (v * func(w)) @ v.conj().T


def _power(w: np.ndarray, p: float) -> np.ndarray:
    out = np.zeros_like(w)
    pos = w > 0
    out[pos] = w[pos] ** p
    return out


def mat_pow(h, p: float, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Fractional power ``H^p`` of a PSD matrix for ``p`` in ``(0, 1]``.

    Eigenvalues in ``[-psd_tol, 0)`` are clipped to zero and ``0^p = 0``.
    """
    if not (0.0 < p <= 1.0):
        raise InvalidExponent(f"exponent must lie in (0, 1], got {p}")
    return spectral_apply(h, lambda w: _power(w, p), tol)


def support_projector(h, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """``H^0`` under the convention ``0^0 = 0``: projector onto the support."""
    w, v = _clipped_spectrum(h, tol)
    keep = (w > tol.psd_tol).astype(float)
    return (v * keep) @ v.conj().T


def conjugate(m) -> np.ndarray:
    return np.conj(np.asarray(m, dtype=complex))


def transpose(m) -> np.ndarray:
    return np.array(np.asarray(m, dtype=complex).T)


def dagger(m) -> np.ndarray:
    return np.conj(np.asarray(m, dtype=complex).T)


def tensor(a, b) -> np.ndarray:
    """Kronecker product with the first factor as the major index."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def direct_sum(p: float, a, b) -> np.ndarray:
    """Block-diagonal ``p A (+) (1-p) B``."""
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"weight p must lie in [0, 1], got {p}")
    a = as_matrix(a)
    b = as_matrix(b)
    da, db = a.shape[0], b.shape[0]
    out = np.zeros((da + db, da + db), dtype=complex)
    out[:da, :da] = p * a
    out[da:, da:] = (1.0 - p) * b
    return out


def partial_trace(m, dims: tuple[int, int], keep: str = "first") -> np.ndarray:
    """Reduce a bipartite operator on ``dA x dB`` to one factor.

    ``keep="first"`` traces out the second factor and vice versa.
    """
    m = as_matrix(m)
    da, db = dims
    if da * db != m.shape[0]:
        raise DimMismatch(f"dims {dims} do not match matrix dimension {m.shape[0]}")
    t = m.reshape(da, db, da, db)
    if keep == "first":
        return np.einsum("ijkj->ik", t)
    if keep == "second":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def trace_product_power(rho, sigma, alpha: float,
                        tol: Tolerances = DEFAULT_TOL) -> float:
    """Quasi-entropy ``tr(rho^alpha sigma^(1-alpha))`` for ``alpha`` in ``(0, 1)``."""
    if not (0.0 < alpha < 1.0):
        raise InvalidExponent(f"alpha must lie in (0, 1), got {alpha}")
    val = np.trace(mat_pow(rho, alpha, tol) @ mat_pow(sigma, 1.0 - alpha, tol))
    if abs(val.imag) > 1e-10:
        raise ArithmeticError(f"trace has imaginary residue {val.imag:.3e}")
    return float(val.real)


def von_neumann_entropy(rho, tol: Tolerances = DEFAULT_TOL) -> float:
    """Entropy in bits, with ``0 log 0 = 0``."""
    w, _ = _clipped_spectrum(rho, tol)
    w = w[w > 0]
    return float(max(0.0, -np.sum(w * np.log2(w))))

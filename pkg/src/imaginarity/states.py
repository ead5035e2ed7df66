"""State and channel constructors, free-set predicates and channel application.

Random generators take an integer seed or a :class:`numpy.random.Generator`
and never touch global RNG state. Streams come from numpy's PCG64 via
:func:`numpy.random.default_rng`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np

from .errors import (BlochOutOfBall, DimMismatch, NotHermitian, NotNormalized, NotPSD,
                     ParamOutOfRange)
from .linalg import DEFAULT_TOL, Tolerances, as_matrix, eigh, hermiticity_error

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


class BlochVector(NamedTuple):
    r1: float
    r2: float
    r3: float

    @property
    def norm(self) -> float:
        return float(np.sqrt(self.r1**2 + self.r2**2 + self.r3**2))


@dataclass(frozen=True)
class KrausSet:
    """Kraus operators of a channel mapping ``dim_in`` to ``dim_out``.

    ``real=True`` (the default) marks a free operation: every operator must
    have real matrix elements.
    """

    kraus: tuple
    dim_in: int
    dim_out: int
    real: bool = True

    def __post_init__(self):
        ops = tuple(np.asarray(k, dtype=complex) for k in self.kraus)
        if not ops:
            raise ValueError("a channel needs at least one Kraus operator")
        for k in ops:
            if k.shape != (self.dim_out, self.dim_in):
                raise DimMismatch(f"Kraus operator of shape {k.shape}, expected "
                                  f"{(self.dim_out, self.dim_in)}")
            if self.real and np.max(np.abs(k.imag)) > DEFAULT_TOL.real_tol:
                raise ValueError("free operation has a Kraus operator with complex entries")
        object.__setattr__(self, "kraus", ops)
        err = completeness_error(ops, self.dim_in)
        if err > 1e-10:
            raise ValueError(f"Kraus operators are not complete (error {err:.3e})")

    @classmethod
    def from_ops(cls, ops: Sequence, real: bool = True) -> "KrausSet":
        ops = [np.atleast_2d(np.asarray(k, dtype=complex)) for k in ops]
        return cls(tuple(ops), ops[0].shape[1], ops[0].shape[0], real)


def completeness_error(ops, dim_in: int) -> float:
    total = sum(k.conj().T @ k for k in ops)
    return float(np.max(np.abs(total - np.eye(dim_in))))


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


# ---------------------------------------------------------------- validation

def is_density(rho, tol: Tolerances = DEFAULT_TOL) -> bool:
    try:
        check_density(rho, tol)
    except ValueError:
        return False
    return True


def check_density(rho, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Validate a density matrix and return it as a complex array."""
    rho = as_matrix(rho)
    if hermiticity_error(rho) > tol.herm_tol:
        raise NotHermitian("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1.0) > tol.trace_tol:
        raise NotNormalized(f"density matrix has trace {np.trace(rho).real:.12g}")
    if eigh(rho, tol).eigenvalues[0] < -tol.psd_tol:
        raise NotPSD("density matrix is not positive semidefinite")
    return rho


def is_real_state(rho, tol: float = 1e-10) -> bool:
    """True iff every matrix element is real within ``tol`` (equivalently rho = rho^T)."""
    return bool(np.max(np.abs(np.imag(np.asarray(rho, dtype=complex)))) <= tol)


# ------------------------------------------------------------------- qubits

def bloch_to_density(v) -> np.ndarray:
    r1, r2, r3 = (float(x) for x in v)
    if np.sqrt(r1**2 + r2**2 + r3**2) > 1.0 + 1e-12:
        raise BlochOutOfBall(f"Bloch vector {v} lies outside the unit ball")
    return 0.5 * (np.eye(2) + r1 * PAULI_X + r2 * PAULI_Y + r3 * PAULI_Z)


def density_to_bloch(rho) -> BlochVector:
    rho = as_matrix(rho)
    if rho.shape != (2, 2):
        raise DimMismatch(f"Bloch vectors describe qubits, got dimension {rho.shape[0]}")
    return BlochVector(*(float(np.trace(rho @ p).real) for p in (PAULI_X, PAULI_Y, PAULI_Z)))


# ------------------------------------------------------------- named states

def werner(k: float) -> np.ndarray:
    """Modified Werner state on two qubits; ``k`` in ``[0, 1]``."""
    if not 0.0 <= k <= 1.0:
        raise ParamOutOfRange(f"Werner parameter must lie in [0, 1], got {k}")
    rho = np.diag([(1 - k) / 4, (1 + k) / 4, (1 + k) / 4, (1 - k) / 4]).astype(complex)
    rho[1, 2] = 0.5j * k
    rho[2, 1] = -0.5j * k
    return rho


def isotropic(F: float) -> np.ndarray:
    """Modified isotropic state on two qubits; ``F`` in ``[0, 1]``."""
    if not 0.0 <= F <= 1.0:
        raise ParamOutOfRange(f"isotropic parameter must lie in [0, 1], got {F}")
    a, b, c = (2 * F + 1) / 6, (1 - F) / 3, (4 * F - 1) / 6
    rho = np.diag([a, b, b, a]).astype(complex)
    rho[0, 3] = 1j * c
    rho[3, 0] = -1j * c
    return rho


def remark1_state() -> np.ndarray:
    """(|00><00| - i|00><11| + i|11><00| + |11><11|)/2, pure with maximally mixed marginals."""
    rho = np.zeros((4, 4), dtype=complex)
    rho[0, 0] = rho[3, 3] = 0.5
    rho[0, 3] = -0.5j
    rho[3, 0] = 0.5j
    return rho


def normalized_vector(psi, tol: float = 1e-10) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex).ravel()
    if abs(np.linalg.norm(psi) - 1.0) > tol:
        raise NotNormalized(f"state vector has norm {np.linalg.norm(psi):.12g}")
    return psi


def pure_state(psi) -> np.ndarray:
    psi = normalized_vector(psi)
    return np.outer(psi, psi.conj())


# ----------------------------------------------------------------- random

def random_density(d: int, seed=None, rank: int | None = None) -> np.ndarray:
    """Ginibre-distributed density matrix ``G G^dagger / tr``; full rank unless ``rank`` is given."""
    rng = _rng(seed)
    g = rng.normal(size=(d, rank or d)) + 1j * rng.normal(size=(d, rank or d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_real_density(d: int, seed=None, rank: int | None = None) -> np.ndarray:
    rng = _rng(seed)
    g = rng.normal(size=(d, rank or d))
    rho = (g @ g.T).astype(complex)
    return rho / np.trace(rho).real


def random_pure(d: int, seed=None) -> np.ndarray:
    rng = _rng(seed)
    psi = rng.normal(size=d) + 1j * rng.normal(size=d)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_bloch(seed=None, max_radius: float = 1.0) -> BlochVector:
    """Uniform sample from the Bloch ball of the given radius."""
    rng = _rng(seed)
    v = rng.normal(size=3)
    v *= max_radius * rng.uniform() ** (1 / 3) / np.linalg.norm(v)
    return BlochVector(*map(float, v))


def random_orthogonal(d: int, seed=None) -> np.ndarray:
    rng = _rng(seed)
    q, r = np.linalg.qr(rng.normal(size=(d, d)))
    return q * np.sign(np.diag(r))


def random_real_kraus(d: int, n_kraus: int, seed=None, d_out: int | None = None) -> KrausSet:
    """Random free operation: stacked blocks of an isometry with orthonormal columns."""
    if n_kraus < 1:
        raise ValueError("n_kraus must be at least 1")
    d_out = d_out or d
    rng = _rng(seed)
    if n_kraus * d_out < d:
        raise DimMismatch("not enough output rows for an isometry")
    q, r = np.linalg.qr(rng.normal(size=(n_kraus * d_out, d)))
    q = q * np.sign(np.diag(r))
    ops = tuple(q[j * d_out:(j + 1) * d_out] for j in range(n_kraus))
    return KrausSet(ops, d, d_out, real=True)


def random_kraus(d: int, n_kraus: int, seed=None) -> KrausSet:
    """Random (generally complex, not free) channel from a complex isometry."""
    rng = _rng(seed)
    g = rng.normal(size=(n_kraus * d, d)) + 1j * rng.normal(size=(n_kraus * d, d))
    q, _ = np.linalg.qr(g)
    ops = tuple(q[j * d:(j + 1) * d] for j in range(n_kraus))
    return KrausSet(ops, d, d, real=False)


def dephasing(d: int) -> KrausSet:
    ops = []
    for j in range(d):
        p = np.zeros((d, d))
        p[j, j] = 1.0
        ops.append(p)
    return KrausSet(tuple(ops), d, d)


def identity_channel(d: int) -> KrausSet:
    return KrausSet((np.eye(d),), d, d)


# ----------------------------------------------------------------- channels

def apply_channel(rho, ch: KrausSet) -> np.ndarray:
    rho = as_matrix(rho)
    if rho.shape[0] != ch.dim_in:
        raise DimMismatch(f"channel expects dimension {ch.dim_in}, got {rho.shape[0]}")
    return sum(k @ rho @ k.conj().T for k in ch.kraus)


def kraus_selective_outcomes(rho, ch: KrausSet, floor: float = 1e-14):
    """Post-measurement ensemble ``[(p_j, rho_j)]``; outcomes with ``p_j < floor`` are dropped."""
    rho = as_matrix(rho)
    if rho.shape[0] != ch.dim_in:
        raise DimMismatch(f"channel expects dimension {ch.dim_in}, got {rho.shape[0]}")
    out = []
    for k in ch.kraus:
        unnorm = k @ rho @ k.conj().T
        p = float(np.trace(unnorm).real)
        if p >= floor:
            out.append((p, unnorm / p))
    return out


# --------------------------------------------------------- JSON descriptors

_DESCRIPTOR_KEYS = ("dense", "bloch", "werner", "isotropic", "remark1", "pure")


def state_from_descriptor(desc) -> np.ndarray:
    """Build a state from a JSON descriptor (dict, JSON text or ``@path``).

    Exactly one key among ``dense``, ``bloch``, ``werner``, ``isotropic``,
    ``remark1`` and ``pure`` must be present.
    """
    if isinstance(desc, str):
        text = Path(desc[1:]).read_text() if desc.startswith("@") else desc
        desc = json.loads(text)
    if not isinstance(desc, dict):
        raise ValueError("state descriptor must be a JSON object")
    keys = [k for k in desc if k in _DESCRIPTOR_KEYS]
    if len(keys) != 1 or len(desc) != 1:
        raise ValueError(f"state descriptor needs exactly one of {_DESCRIPTOR_KEYS}")
    key, val = keys[0], desc[keys[0]]
    if key == "dense":
        re = np.asarray(val["re"], dtype=float)
        im = np.asarray(val.get("im", np.zeros_like(re)), dtype=float)
        rho = re + 1j * im
        if "dim" in val and rho.shape != (val["dim"], val["dim"]):
            raise DimMismatch(f"dense state declares dim {val['dim']} but has shape {rho.shape}")
        return check_density(rho)
    if key == "bloch":
        if len(val) != 3:
            raise ValueError("bloch descriptor needs three components")
        return bloch_to_density(val)
    if key == "werner":
        return werner(float(val))
    if key == "isotropic":
        return isotropic(float(val))
    if key == "remark1":
        if val is not True:
            raise ValueError('remark1 descriptor must be {"remark1": true}')
        return remark1_state()
    re = np.asarray(val["re"], dtype=float)
    im = np.asarray(val.get("im", np.zeros_like(re)), dtype=float)
    return pure_state(re + 1j * im)


def dense_descriptor(rho) -> dict:
    rho = as_matrix(rho)
    return {"dense": {"dim": int(rho.shape[0]),
                      "re": rho.real.tolist(),
                      "im": rho.imag.tolist()}}

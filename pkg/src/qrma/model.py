"""Model parameters and Hamiltonian builders.

The physical system is a two-level atom coupled to a single bosonic mode,

    H = (Delta/2) sigma_3 + f (a + a^dag) sigma_1 + a^dag a + k (a + a^dag)^2,

in units of the mode frequency.  The quadratic (diamagnetic) term strength k
is not free: the oscillator-strength sum rule ties it to the coupling through
k = delta * f^2 / Delta with relative oscillator strength delta >= 1 (delta = 0
recovers the plain Rabi model with no quadratic term).

A Bogoliubov squeeze of the mode removes the quadratic term and yields an
equivalent Rabi Hamiltonian with renormalized frequency Omega = sqrt(1 + 4k),
coupling f / sqrt(Omega) and a constant shift (Omega - 1)/2.  This module
builds dense matrices for both forms, the spin-rotated form used for parity
reduction, and the symmetric tridiagonal block of a single parity sector.
"""

import math
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .errors import ParameterError


class Parity(IntEnum):
    """Eigenvalue of the combined parity sigma_3 * exp(i pi a^dag a)."""

    PLUS = 1
    MINUS = -1


@dataclass(frozen=True)
class ModelParams:
    """Physical input parameters.

    Attributes
    ----------
    big_delta : float
        Atomic transition frequency in units of the mode frequency (> 0).
    osc_delta : float
        Relative oscillator strength of the resonant transition.  Must be
        exactly 0 (no quadratic term) or >= 1; the sum rule excludes (0, 1).
    coupling : float
        Dimensionless atom-field coupling f (>= 0).
    """

    big_delta: float
    osc_delta: float
    coupling: float

    def __post_init__(self):
        if not self.big_delta > 0:
            raise ParameterError(f"big_delta must be > 0, got {self.big_delta}")
        if not self.coupling >= 0:
            raise ParameterError(f"coupling must be >= 0, got {self.coupling}")
        if not (self.osc_delta == 0 or self.osc_delta >= 1):
            raise ParameterError(
                "osc_delta must be 0 (no quadratic term) or >= 1; "
                f"got {self.osc_delta}"
            )


@dataclass(frozen=True)
class DerivedParams:
    """Quantities fixed by the squeeze reduction of the quadratic term.

    Attributes
    ----------
    k : float
        Quadratic-term strength delta * f^2 / Delta.
    omega : float
        Renormalized mode frequency Omega = sqrt(1 + 4k) >= 1.
    f_tilde : float
        Renormalized coupling f / sqrt(Omega).
    shift : float
        Constant energy offset (Omega - 1) / 2.
    """

    k: float
    omega: float
    f_tilde: float
    shift: float


def derive_params(p):
    """Derive (k, Omega, f_tilde, shift) from the physical inputs.

    Pure and deterministic; raises ParameterError through ModelParams if the
    inputs violate the invariants.
    """
    if not isinstance(p, ModelParams):
        p = ModelParams(*p)
    k = p.osc_delta * p.coupling**2 / p.big_delta
    omega = math.sqrt(1.0 + 4.0 * k)
    return DerivedParams(
        k=k,
        omega=omega,
        f_tilde=p.coupling / math.sqrt(omega),
        shift=(omega - 1.0) / 2.0,
    )


# ---------------------------------------------------------------------------
# Truncated ladder operators.  All matrices are exact images of the infinite
# operators on the first n_max Fock states; products like (a + a^dag)^2 are
# expanded analytically with [a, a^dag] = 1 rather than formed by squaring the
# truncated matrix, so no commutator weight is lost at the truncation edge.
# ---------------------------------------------------------------------------


def destroy_op(n_max):
    """Annihilation operator a on the first n_max Fock states."""
    return np.diag(np.sqrt(np.arange(1.0, n_max)), k=1)


def number_op(n_max):
    """Number operator a^dag a."""
    return np.diag(np.arange(float(n_max)))


def quadrature_op(n_max):
    """Field quadrature a + a^dag."""
    off = np.sqrt(np.arange(1.0, n_max))
    return np.diag(off, k=1) + np.diag(off, k=-1)


def quadrature_squared_op(n_max):
    """(a + a^dag)^2 expanded as a^2 + a^dag^2 + 2 a^dag a + 1."""
    n = np.arange(float(n_max))
    two_up = np.sqrt((n[:-2] + 1.0) * (n[:-2] + 2.0))
    return (
        np.diag(two_up, k=2)
        + np.diag(two_up, k=-2)
        + np.diag(2.0 * n + 1.0)
    )


_SIGMA_1 = np.array([[0.0, 1.0], [1.0, 0.0]])
_SIGMA_3 = np.array([[1.0, 0.0], [0.0, -1.0]])


def _check_n_max(n_max):
    if n_max < 2:
        raise ParameterError(f"n_max must be >= 2, got {n_max}")


def build_qrma_dense(p, n_max):
    """Dense Hamiltonian with the quadratic term, in the bare Fock basis.

    Basis ordering is spin (+) block first: index s * n_max + n with s = 0 for
    the upper and s = 1 for the lower atomic state.  The result is real
    symmetric of size 2 * n_max.
    """
    _check_n_max(n_max)
    d = derive_params(p)
    field = number_op(n_max) + d.k * quadrature_squared_op(n_max)
    h = (
        0.5 * p.big_delta * np.kron(_SIGMA_3, np.eye(n_max))
        + p.coupling * np.kron(_SIGMA_1, quadrature_op(n_max))
        + np.kron(np.eye(2), field)
    )
    return h


def build_transformed_dense(p, n_max):
    """Dense squeeze-transformed Hamiltonian: renormalized Rabi form.

    H' = (Delta/2) sigma_3 + f_tilde (a + a^dag) sigma_1 + Omega a^dag a
         + (Omega - 1)/2.
    """
    _check_n_max(n_max)
    d = derive_params(p)
    h = (
        0.5 * p.big_delta * np.kron(_SIGMA_3, np.eye(n_max))
        + d.f_tilde * np.kron(_SIGMA_1, quadrature_op(n_max))
        + d.omega * np.kron(np.eye(2), number_op(n_max))
        + d.shift * np.eye(2 * n_max)
    )
    return h


def build_rotated_dense(p, n_max):
    """Dense spin-rotated Hamiltonian used for the parity reduction.

    The rotation (1 + i sigma_2)/sqrt(2) maps sigma_3 -> sigma_1 and
    sigma_1 -> -sigma_3, so

    H'' = (Delta/2) sigma_1 - f_tilde (a + a^dag) sigma_3 + Omega a^dag a
          + (Omega - 1)/2.

    Its spectrum equals the union of the two parity-block spectra exactly,
    already at finite truncation.
    """
    _check_n_max(n_max)
    d = derive_params(p)
    h = (
        0.5 * p.big_delta * np.kron(_SIGMA_1, np.eye(n_max))
        - d.f_tilde * np.kron(_SIGMA_3, quadrature_op(n_max))
        + d.omega * np.kron(np.eye(2), number_op(n_max))
        + d.shift * np.eye(2 * n_max)
    )
    return h


def build_parity_block(p, parity, n_max):
    """Symmetric tridiagonal block of one combined-parity sector.

    Returns
    -------
    diag, offdiag : ndarray
        diag[n] = Omega n + (Omega - 1)/2 + (Delta/2) p (-1)^n, length n_max;
        offdiag[n] = -f_tilde sqrt(n + 1), length n_max - 1.
    """
    _check_n_max(n_max)
    parity = Parity(parity)
    d = derive_params(p)
    n = np.arange(float(n_max))
    diag = d.omega * n + d.shift + 0.5 * p.big_delta * int(parity) * (-1.0) ** n
    offdiag = -d.f_tilde * np.sqrt(n[:-1] + 1.0)
    return diag, offdiag

"""Closed-form rotating-wave results for the renormalized model.

All formulas act on the squeeze-reduced Hamiltonian, so the bare coupling f
enters only through f_tilde = f / sqrt(Omega) and the mode frequency Omega.
With osc_delta = 0 everything reduces to the textbook resonant or detuned
Jaynes-Cummings expressions.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, TruncationError
from .model import Parity, derive_params

POISSON_TAIL_TOL = 1e-12


@dataclass(frozen=True)
class RwaLevel:
    """One member of a dressed doublet: energy and eigenvector data."""

    n: int
    sign: int
    energy: float
    a_coeff: float
    b_coeff: float
    lam: float

    def __post_init__(self):
        if abs(self.a_coeff**2 + self.b_coeff**2 - 1.0) > 1e-12:
            raise ParameterError("coefficients must satisfy A^2 + B^2 = 1")


def rwar_ground(p):
    """Ground energy -Delta/2 + (Omega - 1)/2 of the renormalized RWA."""
    d = derive_params(p)
    return -0.5 * p.big_delta + d.shift


def rwar_excited(p, n):
    """Dressed doublet (plus, minus) above the n-th excitation.

    Energies are Omega(n+1) - 1/2 +- sqrt((Delta-Omega)^2/4 + f_tilde^2(n+1));
    mixing follows lambda = (det -+ sqrt(det^2 + 4 g^2)) / (2 g) with
    g = f_tilde sqrt(n+1), A = 1/sqrt(1+lambda^2), B = -lambda A.
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    d = derive_params(p)
    det = p.big_delta - d.omega
    g = d.f_tilde * math.sqrt(n + 1.0)
    root = math.hypot(det, 2.0 * g)
    center = d.omega * (n + 1.0) - 0.5
    energies = (center + 0.5 * root, center - 0.5 * root)
    if g > 0.0:
        lams = ((det - root) / (2.0 * g), (det + root) / (2.0 * g))
        coeffs = []
        for lam in lams:
            a = 1.0 / math.sqrt(1.0 + lam * lam)
            coeffs.append((a, -lam * a, lam))
    elif det > 0.0:
        # uncoupled limit: plus level is the bare upper-atom state
        coeffs = [(1.0, 0.0, 0.0), (0.0, -1.0, math.inf)]
    elif det < 0.0:
        coeffs = [(0.0, 1.0, -math.inf), (1.0, 0.0, 0.0)]
    else:
        inv = 1.0 / math.sqrt(2.0)
        coeffs = [(inv, inv, -1.0), (inv, -inv, 1.0)]
    levels = []
    for sign, energy, (a, b, lam) in zip((1, -1), energies, coeffs):
        levels.append(
            RwaLevel(n=n, sign=sign, energy=energy, a_coeff=a, b_coeff=b, lam=lam)
        )
    return levels[0], levels[1]


def rwa_photon_number(p):
    """Squeezed-vacuum photon number (Omega - 1)^2 / (4 Omega)."""
    d = derive_params(p)
    return (d.omega - 1.0) ** 2 / (4.0 * d.omega)


def _poisson_weights(mu, n_terms):
    if mu == 0.0:
        w = np.zeros(n_terms)
        w[0] = 1.0
        return w
    n = np.arange(n_terms)
    logs = -mu + n * math.log(mu) - np.array(
        [math.lgamma(k + 1.0) for k in range(n_terms)]
    )
    return np.exp(logs)


def rwa_inversion(p, epsilon, t, n_terms=None):
    """Analytic inverse population W(t) for a coherent-state preparation.

    W(t) = sum_n P(n) [det^2 + 4 f_tilde^2 (n+1) cos(w_n t)] / w_n^2 with
    w_n = sqrt(det^2 + 4 f_tilde^2 (n+1)), det = Delta - Omega, and Poisson
    intensity eps_tilde = epsilon (Omega+1) / (2 sqrt(Omega)).  Accepts a
    scalar or an array of times.
    """
    if epsilon < 0:
        raise ParameterError(f"epsilon must be >= 0, got {epsilon}")
    d = derive_params(p)
    det = p.big_delta - d.omega
    eps_t = epsilon * (d.omega + 1.0) / (2.0 * math.sqrt(d.omega))
    mu = eps_t * eps_t
    if n_terms is None:
        n_terms = int(math.ceil(mu + 12.0 * math.sqrt(mu + 1.0)))
    if n_terms < 1:
        raise ParameterError(f"n_terms must be >= 1, got {n_terms}")
    weights = _poisson_weights(mu, n_terms)
    if 1.0 - weights.sum() >= POISSON_TAIL_TOL:
        raise TruncationError(
            f"Poisson tail beyond n_terms={n_terms} exceeds "
            f"{POISSON_TAIL_TOL} at intensity {mu}"
        )
    n = np.arange(n_terms)
    coupling2 = 4.0 * d.f_tilde**2 * (n + 1.0)
    omega_a2 = det * det + coupling2
    omega_a = np.sqrt(omega_a2)
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    phases = np.cos(np.outer(omega_a, t_arr))
    numer = det * det + coupling2[:, None] * phases
    safe = np.where(omega_a2 > 0.0, omega_a2, 1.0)
    ratio = np.where(omega_a2[:, None] > 0.0, numer / safe[:, None], 1.0)
    w = weights @ ratio
    if np.isscalar(t) or np.asarray(t).ndim == 0:
        return float(w[0])
    return w


def rwar_sector_energies(p, parity, count):
    """Lowest `count` closed-form energies inside one parity sector.

    The sector with parity (-1)^n holds the doublets built on excitation n;
    the minus sector additionally holds the ground level.  Candidates are
    sorted by energy with deterministic (n, branch) tie-breaking, so the
    degenerate f = 0 limit stays reproducible.
    """
    parity = Parity(parity)
    d = derive_params(p)
    # the minus branch can dip before rising, so scan past its minimum
    dip = int(d.f_tilde**2 / (4.0 * d.omega**2)) + 4
    entries = []
    if parity == Parity.MINUS:
        entries.append((rwar_ground(p), -1, 0))
    start = 0 if parity == Parity.PLUS else 1
    for n in range(start, start + 2 * (count + dip), 2):
        plus, minus = rwar_excited(p, n)
        entries.append((minus.energy, n, 0))
        entries.append((plus.energy, n, 1))
    entries.sort()
    return np.array([e[0] for e in entries[:count]])

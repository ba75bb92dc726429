"""Time evolution from a coherent-state preparation and its spectrum.

The atom starts in its lower state with the field in a real-amplitude
coherent state.  Projecting that preparation onto the parity-assembled
eigenstates reduces evolution to phase multiplication in the eigenbasis; the
atomic density matrix follows by tracing out the field in the squeezed basis,
which is unitarily equivalent to tracing in the bare basis.  A dense
untransformed-frame propagation acts as the end-to-end oracle.

Sign convention: the inverse population is w(t) = rho_lower - rho_upper, so
w(0) = +1 for the lower-state preparation.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CompletenessError, ParameterError, TruncationError
from .model import build_qrma_dense, derive_params
from .squeeze import SqueezeSpec, coherent_amplitudes, squeezed_coherent_overlaps
from .spectrum import EigenSolution, solve_block

COMPLETENESS_HARD = 1e-6
COMPLETENESS_AUTO = 1e-8
AUTO_CAP = 4096


@dataclass(frozen=True)
class InitialCondition:
    """Coherent field amplitude; the atom is fixed in its lower state."""

    epsilon: float

    def __post_init__(self):
        if not self.epsilon >= 0:
            raise ParameterError(f"epsilon must be >= 0, got {self.epsilon}")


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid 0..t_max inclusive with `samples` points."""

    t_max: float
    samples: int

    def __post_init__(self):
        if not self.t_max > 0:
            raise ParameterError(f"t_max must be > 0, got {self.t_max}")
        if self.samples < 2:
            raise ParameterError(f"samples must be >= 2, got {self.samples}")

    @property
    def dt(self):
        return self.t_max / (self.samples - 1)

    @property
    def times(self):
        return np.linspace(0.0, self.t_max, self.samples)


@dataclass(frozen=True, eq=False)
class TimeSeries:
    """Inverse population samples on a TimeGrid."""

    grid: TimeGrid
    w: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.w, dtype=float)
        object.__setattr__(self, "w", w)
        if w.shape != (self.grid.samples,):
            raise ParameterError("w length must match the grid")
        if np.max(np.abs(w)) > 1.0 + 1e-6:
            raise ParameterError("inverse population out of [-1, 1] bounds")


@dataclass(frozen=True, eq=False)
class FrequencySpectrum:
    """One-sided DFT magnitudes on the angular frequency axis."""

    freqs: np.ndarray
    mags: np.ndarray

    def __post_init__(self):
        if self.freqs.shape != self.mags.shape:
            raise ParameterError("freqs and mags must have matching shapes")
        if np.any(self.mags < 0):
            raise ParameterError("magnitudes must be nonnegative")


@dataclass(frozen=True, eq=False)
class Projection:
    """Initial-state amplitudes over both parity sectors."""

    plus: EigenSolution
    minus: EigenSolution
    amps_plus: np.ndarray
    amps_minus: np.ndarray
    completeness: float


def _upper_row_mask(n_max, parity):
    # rows l with (-1)^l * parity = +1 carry the upper-atom component
    l = np.arange(n_max)
    return (1 - 2 * (l % 2)) * int(parity) == 1


def project_initial(ic, solutions, omega):
    """Amplitudes of the eigenstates in the lower-atom coherent preparation.

    `solutions` holds both parity sectors (any order, equal n_max).  Each
    eigenstate overlaps the preparation only through its lower-spinor rows,
    whose spinor weight is -1, hence the global minus sign.
    """
    sol_a, sol_b = solutions
    if sol_a.n_max != sol_b.n_max:
        raise ParameterError("sector solutions must share n_max")
    by_parity = {int(s.parity): s for s in (sol_a, sol_b)}
    if set(by_parity) != {1, -1}:
        raise ParameterError("need one solution per parity sector")
    v = squeezed_coherent_overlaps(
        ic.epsilon, SqueezeSpec(omega, sol_a.n_max)
    ).amps
    amps = {}
    for parity, sol in by_parity.items():
        lower = ~_upper_row_mask(sol.n_max, parity)
        amps[parity] = -(sol.vectors[lower, :].T @ v[lower])
    completeness = float(
        np.sum(amps[1] ** 2) + np.sum(amps[-1] ** 2)
    )
    if completeness < 1.0 - COMPLETENESS_HARD:
        raise CompletenessError(
            f"projection captures only {completeness} of the initial state; "
            "increase n_max"
        )
    return Projection(
        plus=by_parity[1],
        minus=by_parity[-1],
        amps_plus=amps[1],
        amps_minus=amps[-1],
        completeness=completeness,
    )


def prepare_dynamics(p, ic, n_max="auto"):
    """Solve both sectors and project, sizing the basis by completeness.

    With n_max="auto" the truncation doubles until the projection deficit
    drops below COMPLETENESS_AUTO, which also forces the coherent-state and
    overlap tails to be negligible.
    """
    omega = derive_params(p).omega
    if n_max != "auto":
        sols = tuple(
            solve_block(p, parity, n_max, n_max) for parity in (1, -1)
        )
        return project_initial(ic, sols, omega)
    size = max(128, 2 * int(np.ceil(ic.epsilon**2)))
    while size <= AUTO_CAP:
        sols = tuple(solve_block(p, parity, size, size) for parity in (1, -1))
        try:
            proj = project_initial(ic, sols, omega)
        except (CompletenessError, TruncationError):
            size *= 2
            continue
        if 1.0 - proj.completeness < COMPLETENESS_AUTO:
            return proj
        size *= 2
    raise TruncationError(
        f"projection not complete to {COMPLETENESS_AUTO} at n_max={AUTO_CAP}"
    )


def _spinor_components(proj, times):
    """Upper and lower field-basis component matrices over time."""
    n_max = proj.plus.n_max
    up = np.zeros((n_max, times.size), dtype=complex)
    dn = np.zeros((n_max, times.size), dtype=complex)
    for parity, sol, amps in (
        (1, proj.plus, proj.amps_plus),
        (-1, proj.minus, proj.amps_minus),
    ):
        phases = amps[:, None] * np.exp(
            -1j * np.outer(sol.energies, times)
        )
        component = sol.vectors @ phases
        mask = _upper_row_mask(n_max, parity)
        up[mask, :] += component[mask, :]
        dn[~mask, :] -= component[~mask, :]
    return up, dn


def atomic_density_matrix(proj, times):
    """2x2 atomic density matrix at each time; shape (2, 2, len(times))."""
    times = np.asarray(times, dtype=float)
    up, dn = _spinor_components(proj, times)
    rho = np.empty((2, 2, times.size), dtype=complex)
    rho[0, 0] = np.sum(np.abs(up) ** 2, axis=0)
    rho[1, 1] = np.sum(np.abs(dn) ** 2, axis=0)
    rho[0, 1] = np.sum(up * dn.conj(), axis=0)
    rho[1, 0] = rho[0, 1].conj()
    return rho


def evolve_inversion(proj, grid):
    """Inverse population w(t) = rho_lower - rho_upper on the grid."""
    up, dn = _spinor_components(proj, grid.times)
    w = np.sum(np.abs(dn) ** 2, axis=0) - np.sum(np.abs(up) ** 2, axis=0)
    return TimeSeries(grid=grid, w=w)


def direct_evolution_oracle(p, ic, grid, n_max=256):
    """End-to-end check: dense untransformed propagation in the bare basis.

    Builds the full Hamiltonian with the quadratic term, evolves the
    lower-atom coherent preparation by exact diagonalization, and reads the
    same inverse population.  Exists to validate the squeezed-frame pipeline.
    """
    h = build_qrma_dense(p, n_max)
    energies, modes = np.linalg.eigh(h)
    coh = coherent_amplitudes(ic.epsilon, n_max).amps
    psi0 = np.concatenate([np.zeros(n_max), coh])
    weights = modes.T @ psi0
    w = np.empty(grid.samples)
    times = grid.times
    for i in range(grid.samples):
        psi_t = modes @ (weights * np.exp(-1j * energies * times[i]))
        pops = np.abs(psi_t) ** 2
        w[i] = np.sum(pops[n_max:]) - np.sum(pops[:n_max])
    return TimeSeries(grid=grid, w=w)


def fourier_spectrum(ts, window="none"):
    """One-sided DFT magnitude of w(t) with the mean removed.

    The frequency axis is 2 pi n / (N dt), the native resolution of the
    N-point transform, so an on-bin cosine lands in a single bin.
    """
    x = ts.w - np.mean(ts.w)
    if window == "hann":
        x = x * np.hanning(x.size)
    elif window != "none":
        raise ParameterError(f"unknown window {window!r}")
    mags = np.abs(np.fft.rfft(x))
    freqs = 2.0 * np.pi * np.arange(mags.size) / (x.size * ts.grid.dt)
    return FrequencySpectrum(freqs=freqs, mags=mags)


def count_peaks(spectrum, threshold):
    """Strict interior local maxima of the magnitude above a threshold."""
    m = spectrum.mags
    if m.size < 3:
        return 0
    interior = (m[1:-1] > m[:-2]) & (m[1:-1] > m[2:]) & (m[1:-1] > threshold)
    return int(np.sum(interior))

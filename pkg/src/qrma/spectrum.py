"""Parity-sector spectra, eigenstate coefficients, photon numbers, sweeps.

Each combined-parity sector of the spin-rotated Hamiltonian is a symmetric
tridiagonal matrix in the squeezed Fock basis; its eigenvector C gives the
full two-component eigenstate via the parity spinor structure.  This module
solves those blocks with the in-house tridiagonal solver, manages truncation
convergence, evaluates the exact photon-number expectation, scans level
crossings, and produces the coupling-sweep tables behind the figures.
"""

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, TruncationError
from .model import ModelParams, Parity, build_parity_block, derive_params
from .rwa import rwa_photon_number, rwar_excited, rwar_sector_energies
from .tridiag import tridiagonal_eigh, tridiagonal_eigvals

AUTO_START = 64
AUTO_CAP = 4096
AUTO_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class EigenSolution:
    """Lowest eigenpairs of one combined-parity sector.

    energies is ascending; vectors holds the coefficient arrays C as columns
    (unit norm, first significant component positive).  converged records
    whether the truncation passed the doubling test.
    """

    parity: Parity
    energies: np.ndarray
    vectors: np.ndarray
    n_max: int
    converged: bool


@dataclass(frozen=True)
class SpectrumRow:
    """One (coupling, sector, level) entry of a sweep table."""

    f: float
    parity: int
    level: int
    e_exact: float
    e_rwar: float
    photon_exact: float
    photon_rwa: float


def solve_block(p, parity, n_max, levels, vectors=True):
    """Lowest `levels` eigenpairs of one parity block at fixed truncation."""
    if levels > n_max:
        raise ParameterError(f"levels={levels} exceeds n_max={n_max}")
    diag, offdiag = build_parity_block(p, parity, n_max)
    energies, vecs = tridiagonal_eigh(diag, offdiag, levels, vectors=vectors)
    return EigenSolution(
        parity=Parity(parity),
        energies=energies,
        vectors=vecs,
        n_max=n_max,
        converged=False,
    )


def solve_converged(p, parity, levels, n_max="auto", vectors=True):
    """Solve one sector, doubling the truncation until energies settle.

    With n_max="auto" the truncation starts at AUTO_START and doubles until
    the requested energies move by less than AUTO_TOL, returning the finer
    solve.  An explicit integer n_max skips the test (converged=False).
    """
    if n_max != "auto":
        return solve_block(p, parity, n_max, levels, vectors)
    size = max(AUTO_START, 2 * levels)
    prev = tridiagonal_eigvals(*build_parity_block(p, parity, size), levels)
    while size < AUTO_CAP:
        size *= 2
        cur = tridiagonal_eigvals(*build_parity_block(p, parity, size), levels)
        if np.max(np.abs(cur - prev)) < AUTO_TOL:
            sol = solve_block(p, parity, size, levels, vectors)
            return dataclasses.replace(sol, converged=True)
        prev = cur
    raise TruncationError(
        f"energies not converged at n_max={AUTO_CAP} for parity={parity}"
    )


def ground_state(p, n_max="auto"):
    """Global ground state over both parity sectors.

    Returns (energy, parity, coefficient vector C).
    """
    best = None
    for parity in (Parity.MINUS, Parity.PLUS):
        sol = solve_converged(p, parity, 1, n_max)
        if best is None or sol.energies[0] < best.energies[0]:
            best = sol
    return best.energies[0], best.parity, best.vectors[:, 0]


def photon_number_exact(c, omega):
    """Photon-number expectation of a state with squeezed-basis coefficients c.

    Closed form of <C|S^dag a^dag a S|C> for real unit-norm C:
    the squeezed-vacuum constant, a rescaled occupation sum, and a
    two-step correlation term.
    """
    c = np.asarray(c, dtype=float)
    if abs(np.linalg.norm(c) - 1.0) > 1e-10:
        raise ParameterError("coefficient vector must have unit norm")
    k = np.arange(float(c.size))
    occupation = float(np.sum(k * c * c))
    cross = 0.0
    if c.size > 2:
        weights = np.sqrt((k[:-2] + 1.0) * (k[:-2] + 2.0))
        cross = float(np.sum(weights * 2.0 * c[:-2] * c[2:]))
    return (
        (omega - 1.0) ** 2 / (4.0 * omega)
        + (omega * omega + 1.0) / (2.0 * omega) * occupation
        + 0.25 * (1.0 / omega - omega) * cross
    )


def _rwar_minus_gap(p_base, n, f):
    pf = dataclasses.replace(p_base, coupling=f)
    hi = rwar_excited(pf, n + 2)[1].energy
    lo = rwar_excited(pf, n)[1].energy
    return hi - lo


def _exact_gap(p_base, n, f, n_max):
    pf = dataclasses.replace(p_base, coupling=f)
    parity = Parity.PLUS if n % 2 == 0 else Parity.MINUS
    sol = solve_converged(pf, parity, n + 3, n_max, vectors=False)
    return sol.energies[n + 2] - sol.energies[n]


def find_crossings(p_base, n, f_range, grid, route="rwar", n_max="auto"):
    """Couplings f where the same-parity level gap E[n+2] - E[n] vanishes.

    route="rwar" uses the closed-form minus-branch doublet energies;
    route="exact" tracks levels by index inside the matching parity sector.
    Sign changes on the scan grid are refined by bisection to |df| < 1e-10;
    an empty list means no crossing in range.
    """
    if grid < 2:
        raise ParameterError(f"grid must be >= 2, got {grid}")
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if route == "rwar":
        gap = lambda f: _rwar_minus_gap(p_base, n, f)
    elif route == "exact":
        gap = lambda f: _exact_gap(p_base, n, f, n_max)
    else:
        raise ParameterError(f"unknown route {route!r}")
    fs = np.linspace(f_range[0], f_range[1], grid)
    gaps = [gap(f) for f in fs]
    crossings = []
    for i in range(grid - 1):
        left, right = gaps[i], gaps[i + 1]
        if left == 0.0:
            crossings.append(float(fs[i]))
            continue
        if left * right < 0.0:
            lo, hi = float(fs[i]), float(fs[i + 1])
            glo = left
            while hi - lo > 1e-10:
                mid = 0.5 * (lo + hi)
                gm = gap(mid)
                if gm == 0.0:
                    lo = hi = mid
                    break
                if glo * gm < 0.0:
                    hi = mid
                else:
                    lo, glo = mid, gm
            crossings.append(0.5 * (lo + hi))
    if grid >= 1 and gaps[-1] == 0.0:
        crossings.append(float(fs[-1]))
    return crossings


def sweep(p_base, f_values, levels, n_max="auto"):
    """Spectrum and photon-number table over a coupling grid.

    Emits `levels` rows per parity sector at each f, ordered by
    (f, parity descending, level).  The RWAR column pairs the m-th exact
    level of a sector with the m-th smallest closed-form energy of the same
    sector; photon_rwa is the squeezed-vacuum value, the RWA curve for the
    ground state.
    """
    rows = []
    for f in f_values:
        pf = dataclasses.replace(p_base, coupling=float(f))
        d = derive_params(pf)
        n_rwa = rwa_photon_number(pf)
        for parity in (Parity.PLUS, Parity.MINUS):
            sol = solve_converged(pf, parity, levels, n_max)
            rwar = rwar_sector_energies(pf, parity, levels)
            for m in range(levels):
                rows.append(
                    SpectrumRow(
                        f=float(f),
                        parity=int(parity),
                        level=m,
                        e_exact=float(sol.energies[m]),
                        e_rwar=float(rwar[m]),
                        photon_exact=photon_number_exact(
                            sol.vectors[:, m], d.omega
                        ),
                        photon_rwa=n_rwa,
                    )
                )
    return rows

import math

import numpy as np
import pytest

from qrma.dynamics import (
    FrequencySpectrum,
    InitialCondition,
    TimeGrid,
    TimeSeries,
    atomic_density_matrix,
    count_peaks,
    direct_evolution_oracle,
    evolve_inversion,
    fourier_spectrum,
    prepare_dynamics,
)
from qrma.errors import ParameterError, TruncationError
from qrma.model import ModelParams, build_qrma_dense, derive_params
from qrma.rwa import rwa_inversion
from qrma.squeeze import coherent_amplitudes


def test_type_validation():
    with pytest.raises(ParameterError):
        InitialCondition(-0.5)
    with pytest.raises(ParameterError):
        TimeGrid(0.0, 16)
    with pytest.raises(ParameterError):
        TimeGrid(1.0, 1)
    grid = TimeGrid(1.0, 5)
    assert grid.dt == pytest.approx(0.25)
    assert grid.times[-1] == 1.0
    with pytest.raises(ParameterError):
        TimeSeries(grid=grid, w=np.zeros(4))
    with pytest.raises(ParameterError):
        TimeSeries(grid=grid, w=np.full(5, 2.0))
    with pytest.raises(ParameterError):
        FrequencySpectrum(freqs=np.zeros(3), mags=np.zeros(4))


def test_uncoupled_vacuum_projection_is_one_state():
    p = ModelParams(1.0, 0.0, 0.0)
    proj = prepare_dynamics(p, InitialCondition(0.0), n_max=32)
    assert proj.completeness == pytest.approx(1.0, abs=1e-12)
    nonzero = np.sum(np.abs(proj.amps_plus) > 1e-12) + np.sum(
        np.abs(proj.amps_minus) > 1e-12
    )
    assert nonzero == 1
    assert np.max(np.abs(proj.amps_minus)) == pytest.approx(1.0, abs=1e-12)


def test_inversion_constant_without_coupling():
    # sigma_3 commutes with H at f = 0, so the lower level never empties
    p = ModelParams(1.0, 0.0, 0.0)
    proj = prepare_dynamics(p, InitialCondition(1.0), n_max=64)
    ts = evolve_inversion(proj, TimeGrid(30.0, 97))
    assert np.max(np.abs(ts.w - 1.0)) < 1e-10


def test_initial_density_matrix_is_lower_state():
    p = ModelParams(1.0, 1.0, 0.2)
    proj = prepare_dynamics(p, InitialCondition(2.0), n_max=128)
    rho = atomic_density_matrix(proj, np.array([0.0]))
    assert rho[1, 1, 0].real == pytest.approx(1.0, abs=1e-8)
    assert abs(rho[0, 0, 0]) < 1e-8
    assert abs(rho[0, 1, 0]) < 1e-4


def test_density_matrix_trace_hermiticity_positivity():
    p = ModelParams(1.0, 1.0, 0.3)
    proj = prepare_dynamics(p, InitialCondition(1.5))
    times = np.linspace(0.0, 12.0, 7)
    rho = atomic_density_matrix(proj, times)
    for i in range(times.size):
        m = rho[:, :, i]
        assert abs(np.trace(m).real - 1.0) < 1e-6
        assert abs(np.trace(m).imag) < 1e-12
        assert np.max(np.abs(m - m.conj().T)) < 1e-12
        assert np.min(np.linalg.eigvalsh(m)) > -1e-12


def test_sector_energies_reproduce_bare_expectation():
    # sum A_n^2 E_n must equal <psi0|H|psi0> in the untransformed basis
    p = ModelParams(1.0, 1.0, 0.2)
    n_max = 160
    proj = prepare_dynamics(p, InitialCondition(2.0), n_max=n_max)
    mean_proj = float(
        np.sum(proj.amps_plus**2 * proj.plus.energies)
        + np.sum(proj.amps_minus**2 * proj.minus.energies)
    )
    h = build_qrma_dense(p, n_max)
    coh = coherent_amplitudes(2.0, n_max).amps
    psi0 = np.concatenate([np.zeros(n_max), coh])
    assert mean_proj == pytest.approx(float(psi0 @ h @ psi0), abs=1e-8)


def test_frame_consistency_against_dense_oracle():
    p = ModelParams(1.0, 1.0, 0.2)
    ic = InitialCondition(2.0)
    grid = TimeGrid(20.0, 101)
    proj = prepare_dynamics(p, ic, n_max=128)
    ts = evolve_inversion(proj, grid)
    oracle = direct_evolution_oracle(p, ic, grid, n_max=128)
    assert np.max(np.abs(ts.w - oracle.w)) < 1e-8


def test_truncation_error_when_basis_too_small():
    with pytest.raises(TruncationError):
        prepare_dynamics(ModelParams(1.0, 0.0, 0.1), InitialCondition(5.0), n_max=32)


def test_rwa_series_matches_dense_jc_propagation():
    # independent oracle: evolve the rotating-wave Hamiltonian itself
    p = ModelParams(1.0, 1.0, 0.3)
    d = derive_params(p)
    epsilon = 2.0
    n = 96
    sq = np.sqrt(np.arange(1.0, n))
    h = np.zeros((2 * n, 2 * n))
    # rows 0..n-1 hold the initially occupied level, n..2n-1 the other
    idx = np.arange(n)
    h[idx, idx] = 0.5 * p.big_delta + d.omega * idx
    h[n + idx, n + idx] = -0.5 * p.big_delta + d.omega * idx
    h[idx[:-1], n + idx[1:]] = d.f_tilde * sq
    h[n + idx[1:], idx[:-1]] = d.f_tilde * sq
    energies, modes = np.linalg.eigh(h)
    eps_eff = epsilon * (d.omega + 1.0) / (2.0 * math.sqrt(d.omega))
    psi0 = np.concatenate([coherent_amplitudes(eps_eff, n).amps, np.zeros(n)])
    weights = modes.T @ psi0
    times = np.linspace(0.0, 30.0, 41)
    w_dense = np.empty(times.size)
    for i, t in enumerate(times):
        psi_t = modes @ (weights * np.exp(-1j * energies * t))
        pops = np.abs(psi_t) ** 2
        w_dense[i] = np.sum(pops[:n]) - np.sum(pops[n:])
    w_series = rwa_inversion(p, epsilon, times)
    assert np.max(np.abs(w_series - w_dense)) < 1e-9


def test_fourier_on_bin_cosine_lands_in_one_bin():
    samples = 256
    grid = TimeGrid(25.5, samples)  # dt = 0.1
    k = 20
    omega = 2.0 * math.pi * k / (samples * grid.dt)
    w = 0.5 * np.cos(omega * grid.times)
    spec = fourier_spectrum(TimeSeries(grid=grid, w=w))
    assert spec.freqs[k] == pytest.approx(omega, rel=1e-15)
    assert spec.mags[k] == pytest.approx(0.5 * samples / 2.0, rel=1e-10)
    others = np.delete(spec.mags, k)
    assert np.max(others) < 1e-9


def test_fourier_parseval_even_sample_count():
    rng = np.random.default_rng(3)
    samples = 128
    grid = TimeGrid(12.7, samples)
    w = np.clip(rng.normal(scale=0.2, size=samples), -1.0, 1.0)
    spec = fourier_spectrum(TimeSeries(grid=grid, w=w))
    x = w - np.mean(w)
    # one-sided rfft of even N: interior bins count twice, Nyquist once
    total = (
        spec.mags[0] ** 2
        + 2.0 * np.sum(spec.mags[1:-1] ** 2)
        + spec.mags[-1] ** 2
    ) / samples
    assert total == pytest.approx(float(np.sum(x**2)), abs=1e-8)


def test_fourier_windows():
    samples = 128
    grid = TimeGrid(12.7, samples)
    omega = 2.0 * math.pi * 10.5 / (samples * grid.dt)  # off-bin on purpose
    w = 0.5 * np.cos(omega * grid.times)
    ts = TimeSeries(grid=grid, w=w)
    plain = fourier_spectrum(ts, window="none")
    hann = fourier_spectrum(ts, window="hann")
    # the window trades main-lobe height for far-bin leakage suppression
    assert hann.mags[40] < plain.mags[40]
    with pytest.raises(ParameterError):
        fourier_spectrum(ts, window="hamming")


def test_count_peaks_synthetic():
    freqs = np.arange(7.0)
    mags = np.array([0.0, 1.0, 0.0, 2.0, 0.0, 3.0, 0.0])
    spec = FrequencySpectrum(freqs=freqs, mags=mags)
    assert count_peaks(spec, 0.5) == 3
    assert count_peaks(spec, 1.5) == 2
    tiny = FrequencySpectrum(freqs=freqs[:2], mags=mags[:2])
    assert count_peaks(tiny, 0.0) == 0


def test_spectral_lines_multiply_with_coupling():
    # stronger coupling spreads the Rabi line into resolved components
    ic = InitialCondition(5.0)
    grid = TimeGrid(50.0, 1024)
    counts = []
    for f in (0.05, 0.3):
        p = ModelParams(1.0, 1.0, f)
        ts = evolve_inversion(prepare_dynamics(p, ic), grid)
        spec = fourier_spectrum(ts)
        counts.append(count_peaks(spec, 0.05 * np.max(spec.mags)))
    assert counts[0] <= counts[1]
    assert counts[1] > 1

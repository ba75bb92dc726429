import math

import numpy as np
import pytest

from qrma.errors import ParameterError, TruncationError
from qrma.model import number_op
from qrma.squeeze import (
    FockVector,
    SqueezeSpec,
    coherent_amplitudes,
    squeeze_matrix,
    squeezed_coherent_overlaps,
)

SQRT2 = math.sqrt(2.0)


def test_spec_validation():
    with pytest.raises(ParameterError):
        SqueezeSpec(0.0, 64)
    with pytest.raises(ParameterError):
        SqueezeSpec(1.5, 1)
    with pytest.raises(ParameterError):
        FockVector(np.zeros(3), 4)
    with pytest.raises(ParameterError):
        FockVector(np.full(4, 1.0), 4)  # norm 2


def test_identity_at_unit_frequency():
    assert np.array_equal(squeeze_matrix(SqueezeSpec(1.0, 32)), np.eye(32))


def test_orthogonality():
    for omega in (1.1, SQRT2, 2.0):
        s = squeeze_matrix(SqueezeSpec(omega, 256))
        dev = np.max(np.abs(s.T @ s - np.eye(256)))
        assert dev < 1e-10


def test_squeezed_vacuum_photon_number():
    for omega in (1.1, SQRT2, 2.0):
        s = squeeze_matrix(SqueezeSpec(omega, 256))
        nbar = s[:, 0] @ number_op(256) @ s[:, 0]
        analytic = (omega - 1.0) ** 2 / (4.0 * omega)
        r = 0.5 * math.log(omega)
        assert nbar == pytest.approx(analytic, abs=1e-9)
        assert analytic == pytest.approx(math.sinh(r) ** 2, abs=1e-15)


def test_vacuum_column_is_even():
    s = squeeze_matrix(SqueezeSpec(SQRT2, 128))
    assert np.max(np.abs(s[1::2, 0])) == 0.0


def test_inverse_squeeze_on_interior_block():
    s = squeeze_matrix(SqueezeSpec(1.7, 128))
    s_inv = squeeze_matrix(SqueezeSpec(1.0 / 1.7, 128))
    prod = s @ s_inv
    interior = prod[:96, :96]
    assert np.max(np.abs(interior - np.eye(96))) < 1e-10


def test_coherent_amplitudes_basics():
    vac = coherent_amplitudes(0.0, 16)
    assert vac.amps[0] == 1.0
    assert np.max(np.abs(vac.amps[1:])) == 0.0
    coh = coherent_amplitudes(5.0, 128)
    assert coh.norm == pytest.approx(1.0, abs=1e-12)
    mean = np.sum(np.arange(128.0) * coh.amps**2)
    assert mean == pytest.approx(25.0, abs=1e-8)


def test_coherent_amplitudes_truncation_error():
    with pytest.raises(TruncationError):
        coherent_amplitudes(5.0, 40)
    with pytest.raises(ParameterError):
        coherent_amplitudes(-1.0, 64)


def test_overlaps_identity_squeeze():
    coh = coherent_amplitudes(2.0, 64)
    v = squeezed_coherent_overlaps(2.0, SqueezeSpec(1.0, 64))
    assert np.allclose(v.amps, coh.amps)


def test_overlaps_vacuum_even_only():
    v = squeezed_coherent_overlaps(0.0, SqueezeSpec(SQRT2, 128))
    assert np.max(np.abs(v.amps[1::2])) == 0.0
    assert v.norm == pytest.approx(1.0, abs=1e-10)


def test_overlaps_norm_at_scale():
    v = squeezed_coherent_overlaps(5.0, SqueezeSpec(SQRT2, 512))
    assert v.norm == pytest.approx(1.0, abs=1e-8)


def overlap_recurrence(eps, omega, n_max):
    """Independent closed-form route to <k|S^dag|eps> for real eps."""
    r = 0.5 * math.log(omega)
    c = np.zeros(n_max)
    c[0] = math.exp(-eps * eps * omega / (omega + 1.0)) / math.sqrt(math.cosh(r))
    if n_max > 1:
        c[1] = eps * c[0] / math.cosh(r)
    for k in range(1, n_max - 1):
        c[k + 1] = (eps * c[k] + math.sinh(r) * math.sqrt(k) * c[k - 1]) / (
            math.cosh(r) * math.sqrt(k + 1.0)
        )
    return c


def test_overlaps_match_recurrence_oracle():
    # frozen leading amplitude for eps=2, omega=1.5
    assert overlap_recurrence(2.0, 1.5, 4)[0] == pytest.approx(
        0.08979683954856026, abs=1e-16
    )
    for eps, omega in ((0.0, SQRT2), (2.0, 1.5), (5.0, 1.2)):
        v = squeezed_coherent_overlaps(eps, SqueezeSpec(omega, 512))
        ref = overlap_recurrence(eps, omega, 512)
        assert np.max(np.abs(v.amps - ref)) < 1e-12


def test_tail_mass_diagnostic():
    vec = FockVector(np.ones(32) / math.sqrt(32.0), 32)
    assert vec.tail_mass() == pytest.approx(8.0 / 32.0, abs=1e-14)


def test_overlap_mean_photon_identity():
    # <eps| S n S^dag |eps> = Omega eps^2 + sinh^2 r, exactly
    for eps, omega in ((1.0, 1.21), (2.0, 1.5), (3.0, 2.0)):
        v = squeezed_coherent_overlaps(eps, SqueezeSpec(omega, 512)).amps
        mean = float(np.sum(np.arange(512) * v * v))
        r = 0.5 * math.log(omega)
        assert mean == pytest.approx(omega * eps * eps + math.sinh(r) ** 2, abs=1e-10)

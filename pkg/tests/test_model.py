import numpy as np
import pytest

from qrma.errors import ParameterError
from qrma.model import (
    ModelParams,
    Parity,
    build_parity_block,
    build_qrma_dense,
    build_rotated_dense,
    build_transformed_dense,
    derive_params,
    destroy_op,
    number_op,
    quadrature_op,
    quadrature_squared_op,
)


def test_params_validation():
    with pytest.raises(ParameterError):
        ModelParams(0.0, 1.0, 0.1)
    with pytest.raises(ParameterError):
        ModelParams(1.0, 1.0, -0.1)
    with pytest.raises(ParameterError):
        ModelParams(1.0, 0.5, 0.1)  # sum rule forbids (0, 1)
    ModelParams(1.0, 0.0, 0.1)
    ModelParams(1.0, 1.0, 0.0)


def test_derive_params_reference_point():
    d = derive_params(ModelParams(1.0, 1.0, 0.6))
    assert d.k == pytest.approx(0.36, abs=0)
    assert d.omega == pytest.approx(1.5620499351813309, abs=1e-15)
    assert d.f_tilde == pytest.approx(0.4800691448939546, abs=1e-15)
    assert d.shift == pytest.approx(0.28102496759066544, abs=1e-15)


def test_derive_params_plain_rabi_limit():
    d = derive_params(ModelParams(1.0, 0.0, 0.8))
    assert d.k == 0.0
    assert d.omega == 1.0
    assert d.f_tilde == 0.8
    assert d.shift == 0.0


def test_ladder_operators():
    n = 6
    a = destroy_op(n)
    comm = a @ a.T - a.T @ a
    # canonical commutator holds except the truncation corner
    assert np.allclose(comm[:-1, :-1], np.eye(n)[:-1, :-1])
    assert np.allclose(a.T @ a, number_op(n))
    assert np.allclose(quadrature_op(n), a + a.T)


def test_quadrature_squared_keeps_commutator_weight():
    n = 8
    x2 = quadrature_squared_op(n)
    naive = quadrature_op(n) @ quadrature_op(n)
    # squaring the truncated matrix loses the path through |n_max> on the
    # last diagonal entry only
    diff = x2 - naive
    expected = np.zeros((n, n))
    expected[-1, -1] = n
    assert np.allclose(diff, expected)


def test_dense_builders_are_symmetric():
    p = ModelParams(1.3, 2.0, 0.7)
    for build in (build_qrma_dense, build_transformed_dense, build_rotated_dense):
        h = build(p, 32)
        assert h.shape == (64, 64)
        assert np.allclose(h, h.T)


def test_transformed_equals_bare_at_zero_coupling():
    p = ModelParams(1.0, 1.0, 0.0)
    assert np.allclose(build_qrma_dense(p, 16), build_transformed_dense(p, 16))


def test_rotated_same_spectrum_as_transformed():
    p = ModelParams(1.0, 1.0, 0.5)
    w1 = np.linalg.eigvalsh(build_transformed_dense(p, 64))
    w2 = np.linalg.eigvalsh(build_rotated_dense(p, 64))
    assert np.max(np.abs(w1 - w2)) < 1e-12


def test_parity_block_entries():
    p = ModelParams(1.0, 1.0, 0.6)
    d = derive_params(p)
    diag, off = build_parity_block(p, Parity.PLUS, 5)
    n = np.arange(5.0)
    assert np.allclose(diag, d.omega * n + d.shift + 0.5 * (-1.0) ** n)
    assert np.allclose(off, -d.f_tilde * np.sqrt(n[:-1] + 1))
    diag_m, _ = build_parity_block(p, Parity.MINUS, 5)
    assert np.allclose(diag_m, d.omega * n + d.shift - 0.5 * (-1.0) ** n)


def test_parity_blocks_cover_rotated_spectrum():
    p = ModelParams(0.9, 2.0, 0.4)
    n = 48
    dense = np.linalg.eigvalsh(build_rotated_dense(p, n))
    union = []
    for parity in (Parity.PLUS, Parity.MINUS):
        diag, off = build_parity_block(p, parity, n)
        t = np.diag(diag) + np.diag(off, 1) + np.diag(off, -1)
        union.append(np.linalg.eigvalsh(t))
    union = np.sort(np.concatenate(union))
    assert np.max(np.abs(union - dense)) < 1e-12

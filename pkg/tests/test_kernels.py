import numpy as np
import pytest

from pinlorentz import _kernels
from pinlorentz.sl2c import sample_sl2_batch

needs_numba = pytest.mark.skipif(not _kernels.USE_JIT, reason="numba path disabled")


def test_phi_batch_paths_agree(rng):
    mats = sample_sl2_batch(rng, 300)
    ref = _kernels.phi_batch(mats, jit=False)
    assert ref.shape == (300, 4, 4)
    assert np.max(np.abs(_kernels.phi_batch(mats, jit=True) - ref)) <= 1e-12 * np.max(np.abs(ref))


def test_phi_batch_empty():
    assert _kernels.phi_batch(np.empty((0, 2, 2), complex), jit=False).shape == (0, 4, 4)


@pytest.mark.parametrize("shape, axis", [((4,), 0), ((4, 4), 0), ((4, 4), 1), ((4, 4, 4, 4), 2),
                                         ((3, 4, 5), 1)])
def test_contract_axis_paths_agree(shape, axis, rng):
    x = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    m = rng.standard_normal((4, shape[axis])) + 1j * rng.standard_normal((4, shape[axis]))
    ref = np.moveaxis(np.tensordot(m, x, axes=([1], [axis])), 0, axis)
    for jit in (False, True):
        got = _kernels.contract_axis(x, m, axis, jit=jit)
        assert got.shape == ref.shape
        assert np.max(np.abs(got - ref)) <= 1e-12


@needs_numba
def test_jit_is_default_when_available():
    assert _kernels.USE_JIT


def test_env_flag_disables_jit(monkeypatch):
    import importlib

    monkeypatch.setenv("PINLORENTZ_NO_JIT", "1")
    fresh = importlib.reload(_kernels)
    try:
        assert not fresh.USE_JIT
    finally:
        monkeypatch.delenv("PINLORENTZ_NO_JIT")
        importlib.reload(_kernels)

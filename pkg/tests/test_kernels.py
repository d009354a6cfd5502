"""Backend parity: the compiled kernels must agree with the NumPy twins."""

import numpy as np
import pytest

from frobasis import _kernels
from frobasis._kernels import pykernels

fastkernels = pytest.importorskip(
    "frobasis._kernels.fastkernels", reason="compiled extension not built"
)


def test_selected_backend_reported():
    assert _kernels.BACKEND in ("compiled", "python")


@pytest.mark.parametrize("d", [1, 2, 3, 8, 17])
def test_jacobi_parity(d, rng):
    x = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    h = x + x.conj().T
    w_fast, v_fast, off_fast, _ = fastkernels.jacobi_eigh(h, 1e-12, 100)
    w_py, v_py, off_py, _ = pykernels.jacobi_eigh(h, 1e-12, 100)
    np.testing.assert_allclose(w_fast, w_py, atol=1e-10)
    assert off_fast <= 1e-12 and off_py <= 1e-12
    # columns agree up to phase
    for k in range(d):
        assert abs(np.vdot(v_fast[:, k], v_py[:, k])) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("d", [2, 3, 8])
def test_jacobi_against_library(d, rng):
    x = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    h = x + x.conj().T
    w, v = fastkernels.jacobi_eigh(h, 1e-12, 100)[:2]
    np.testing.assert_allclose(w, np.linalg.eigvalsh(h), atol=1e-11)
    np.testing.assert_allclose(v @ np.diag(w) @ v.conj().T, h, atol=1e-10)


@pytest.mark.parametrize("degree", [1, 2, 5, 9])
def test_aberth_parity_and_oracle(degree, rng):
    roots_true = rng.normal(size=degree) + 1j * rng.normal(size=degree)
    coeffs = np.poly(roots_true)  # monic, highest first
    z_fast, _, ok_fast = fastkernels.aberth_roots(coeffs, 1e-13, 200)
    z_py, _, ok_py = pykernels.aberth_roots(coeffs, 1e-13, 200)
    assert ok_fast and ok_py
    np.testing.assert_allclose(np.sort_complex(z_fast), np.sort_complex(z_py), atol=1e-8)
    np.testing.assert_allclose(np.sort_complex(z_fast), np.sort_complex(roots_true), atol=1e-7)


def test_power_parity(rng):
    for shape in ((3, 3), (2, 5), (6, 2)):
        a = rng.normal(size=shape) + 1j * rng.normal(size=shape)
        s_fast, _, c_fast = fastkernels.power_norm(a, 1e-9, 1e-9, 300)
        s_py, _, c_py = pykernels.power_norm(a, 1e-9, 1e-9, 300)
        assert c_fast and c_py
        ref = np.linalg.svd(a, compute_uv=False)[0]
        assert s_fast == pytest.approx(ref, rel=1e-8)
        assert s_py == pytest.approx(ref, rel=1e-8)


def test_power_zero_matrix():
    s, _, ok = fastkernels.power_norm(np.zeros((3, 3), dtype=complex), 1e-9, 1e-9, 300)
    assert ok and s == 0.0

"""Shared test helpers: random bases, unitaries and structures."""

import numpy as np
import pytest

from frobasis import BasisKind, BasisSpec


def rand_unitary(d: int, rng) -> np.ndarray:
    """Haar-ish random unitary from the QR of a complex Gaussian matrix."""
    q, r = np.linalg.qr(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)))
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_orthogonal_basis(d: int, rng, lo: float = 0.5, hi: float = 2.0) -> BasisSpec:
    """Random unitary columns scaled by norms drawn from [lo, hi]."""
    u = rand_unitary(d, rng)
    norms = rng.uniform(lo, hi, size=d)
    return BasisSpec(dim=d, vectors=(u * norms).T, kind=BasisKind.ORTHOGONAL)


def random_orthonormal_basis(d: int, rng) -> BasisSpec:
    return BasisSpec(dim=d, vectors=rand_unitary(d, rng).T, kind=BasisKind.ORTHONORMAL)


def random_arbitrary_basis(d: int, rng, max_cond: float = 100.0) -> BasisSpec:
    """Random invertible columns with condition number at most max_cond."""
    while True:
        p = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        sv = np.linalg.svd(p, compute_uv=False)
        if sv[-1] > 0 and sv[0] / sv[-1] <= max_cond:
            return BasisSpec(dim=d, vectors=p.T, kind=BasisKind.ARBITRARY)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)

"""Dense complex linear algebra on explicit-shape tensors.

Everything operates on ``numpy`` arrays of ``complex128``. The index
convention for tensor (Kronecker) products is left-factor major
throughout: the pair ``(i, j)`` flattens to ``i * dim_b + j``. All
eigencomputations and norms go through the package's own iterative
kernels (cyclic Jacobi, Ehrlich-Aberth on the characteristic polynomial,
power iteration); NumPy supplies storage, products and linear solves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import aberth_roots, jacobi_eigh, power_norm
from ._kernels.pykernels import _start_vector
from .errors import ConvergenceError, ShapeError, ToleranceError

__all__ = [
    "Tolerance",
    "DEFAULT_TOL",
    "as_tensor",
    "matmul",
    "kron",
    "adjoint",
    "swap_map",
    "inner",
    "eig_hermitian",
    "GeneralEigenpair",
    "eig_general",
    "operator_norm",
    "singular_values",
    "schmidt_rank",
]

#: Relative spectral gap below which eigenvalues count as one cluster.
CLUSTER_GAP_FACTOR = 1e-6

_JACOBI_MAX_SWEEPS = 100
_ABERTH_MAX_ITER = 200
_POWER_MAX_ITER = 300  # plain phase; harder cases switch to squaring


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair; ``bound(s) = abs + rel * s``."""

    abs: float = 1e-9
    rel: float = 1e-9

    def __post_init__(self):
        if self.abs < 0 or self.rel < 0:
            raise ToleranceError("tolerance components must be non-negative")
        if self.abs == 0 and self.rel == 0:
            raise ToleranceError("abs and rel tolerance cannot both be zero")

    def bound(self, scale: float = 1.0) -> float:
        return self.abs + self.rel * scale


DEFAULT_TOL = Tolerance()


def as_tensor(data, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Coerce to a complex128 array, enforcing finiteness (and shape)."""
    arr = np.asarray(data, dtype=np.complex128)
    if shape is not None and arr.shape != shape:
        raise ShapeError(f"expected shape {shape}, got {arr.shape}")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError("tensor entries must be finite")
    return arr


def _require_matrix(a: np.ndarray, name: str) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2:
        raise ShapeError(f"{name} must be a rank-2 tensor, got rank {a.ndim}")
    return a


def _require_vector(x: np.ndarray, name: str) -> np.ndarray:
    x = np.asarray(x, dtype=np.complex128)
    if x.ndim == 2 and 1 in x.shape:
        x = x.reshape(-1)
    if x.ndim != 1:
        raise ShapeError(f"{name} must be a vector, got rank {x.ndim}")
    return x


def matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product with an explicit inner-dimension check."""
    a = _require_matrix(a, "a")
    b = _require_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise ShapeError(f"inner dimensions disagree: {a.shape} x {b.shape}")
    return a @ b


def kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, left factor major: ``(i, j) -> i * dim_b + j``."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return _require_matrix(a, "a").conj().T


def swap_map(d: int) -> np.ndarray:
    """The symmetry on a d-dim space with itself: ``e_i (x) e_j -> e_j (x) e_i``."""
    if d < 1:
        raise ShapeError("dimension must be >= 1")
    s = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            s[j * d + i, i * d + j] = 1.0
    return s


def inner(x: np.ndarray, y: np.ndarray) -> complex:
    """Inner product, conjugate-linear in the first argument."""
    x = _require_vector(x, "x")
    y = _require_vector(y, "y")
    if x.shape != y.shape:
        raise ShapeError(f"length mismatch: {x.shape} vs {y.shape}")
    return complex(np.vdot(x, y))


def frobenius_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a))


def eig_hermitian(a: np.ndarray, tol: Tolerance = DEFAULT_TOL):
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns ``(eigenvalues ascending, eigenvector columns)``; the columns
    are orthonormal and satisfy ``a v = w v`` within the Jacobi stopping
    threshold. Raises on non-Hermitian input (max-abs entry norm of
    ``a - a*``) and on sweep-cap exhaustion.
    """
    a = _require_matrix(a, "a")
    n, nc = a.shape
    if n != nc:
        raise ShapeError("eig_hermitian expects a square matrix")
    herm_defect = float(np.max(np.abs(a - a.conj().T))) if n else 0.0
    scale = float(np.max(np.abs(a))) if n else 0.0
    if herm_defect > tol.bound(scale):
        raise ShapeError(f"matrix is not Hermitian: max |a - a*| = {herm_defect:.3e}")
    h = 0.5 * (a + a.conj().T)
    # Quadratic terminal convergence makes a hard threshold cheap; the
    # 0.05 factor buys eigenvector margin against moderately small gaps.
    off_threshold = 0.05 * tol.bound(frobenius_norm(h))
    w, v, off, sweeps = jacobi_eigh(h, off_threshold, _JACOBI_MAX_SWEEPS)
    if off > off_threshold:
        raise ConvergenceError(
            f"Jacobi did not converge in {sweeps} sweeps (off-norm {off:.3e})"
        )
    return w, v


def char_poly(a: np.ndarray) -> np.ndarray:
    """Monic characteristic polynomial coefficients via Faddeev-LeVerrier.

    Returns ``c`` with ``c[0] = 1`` so that ``det(tI - a) = sum c[k] t^(n-k)``.
    """
    a = _require_matrix(a, "a")
    n, nc = a.shape
    if n != nc:
        raise ShapeError("char_poly expects a square matrix")
    coeffs = np.zeros(n + 1, dtype=np.complex128)
    coeffs[0] = 1.0
    m = np.zeros_like(a)
    for k in range(1, n + 1):
        m = a @ (m + coeffs[k - 1] * np.eye(n))
        coeffs[k] = -np.trace(m) / k
    return coeffs


@dataclass(frozen=True)
class GeneralEigenpair:
    """One root of the characteristic polynomial.

    ``vector`` is a unit eigenvector when the eigenvalue is numerically
    simple and inverse iteration met the residual contract, else ``None``.
    ``cluster_size > 1`` flags eigenvalues that fall inside a degenerate
    cluster (gap below ``CLUSTER_GAP_FACTOR`` times the spectral radius).
    """

    value: complex
    vector: np.ndarray | None
    cluster_size: int
    residual: float | None


def _solve(a: np.ndarray, b: np.ndarray) -> np.ndarray | None:
    try:
        x = np.linalg.solve(a, b)
    except np.linalg.LinAlgError:
        return None
    if not np.all(np.isfinite(x)):
        return None
    return x


def _inverse_iteration(a: np.ndarray, lam: complex, tol: Tolerance):
    """Unit eigenvector for an isolated eigenvalue estimate ``lam``.

    Inverse iteration with a singularity-escape jitter, followed by a few
    Rayleigh-quotient refinements (kept only while the residual improves).
    """
    n = a.shape[0]
    scale = max(1.0, frobenius_norm(a))
    eye = np.eye(n)
    v = _start_vector(n).astype(np.complex128)
    v /= np.linalg.norm(v)
    best_v, best_res, best_lam = None, np.inf, lam
    mu = lam
    for _ in range(12):
        shifted = a - mu * eye
        x = _solve(shifted, v)
        if x is None:
            x = _solve(shifted + (1e-13 * scale) * eye, v)
            if x is None:
                break
        nx = np.linalg.norm(x)
        if nx == 0.0 or not np.isfinite(nx):
            break
        v = x / nx
        rq = complex(np.vdot(v, a @ v))
        res = float(np.linalg.norm(a @ v - rq * v))
        if res < best_res:
            best_v, best_res, best_lam = v.copy(), res, rq
        if res <= tol.abs * scale * 0.01:
            break
        mu = rq
    return best_v, best_lam, best_res


def eig_general(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> list[GeneralEigenpair]:
    """All eigenvalues (with multiplicity) of a square complex matrix.

    Roots come from Ehrlich-Aberth on the Faddeev-LeVerrier characteristic
    polynomial; eigenvectors are recovered for numerically simple
    eigenvalues only. Results are sorted by (real, imag).
    """
    a = _require_matrix(a, "a")
    n, nc = a.shape
    if n != nc:
        raise ShapeError("eig_general expects a square matrix")
    if n == 1:
        v = np.array([1.0 + 0.0j])
        return [GeneralEigenpair(complex(a[0, 0]), v, 1, 0.0)]

    coeffs = char_poly(a)
    root_tol = max(tol.abs, 1e-13)
    roots, _, converged = aberth_roots(coeffs, root_tol, _ABERTH_MAX_ITER)
    if not converged:
        raise ConvergenceError("root finder did not converge within the iteration cap")

    order = np.lexsort((roots.imag, roots.real))
    roots = roots[order]

    radius = float(np.max(np.abs(roots)))
    gap = CLUSTER_GAP_FACTOR * max(radius, tol.abs)
    # Single-linkage clustering of the sorted roots.
    labels = np.zeros(n, dtype=int)
    for i in range(n):
        labels[i] = i
        for j in range(i):
            if abs(roots[i] - roots[j]) < gap:
                labels[labels == labels[i]] = labels[j]
    sizes = {lab: int(np.sum(labels == lab)) for lab in set(labels.tolist())}

    scale = max(1.0, frobenius_norm(a))
    values: list[complex] = []
    vectors: list[np.ndarray | None] = []
    residuals: list[float | None] = []
    cluster: list[int] = []
    for i in range(n):
        size = sizes[labels[i]]
        if size > 1:
            values.append(complex(roots[i]))
            vectors.append(None)
            residuals.append(None)
            cluster.append(size)
            continue
        v, lam, res = _inverse_iteration(a, complex(roots[i]), tol)
        if v is None or res > 10.0 * tol.bound(scale):
            values.append(complex(roots[i]))
            vectors.append(None)
            residuals.append(res if v is not None else None)
            cluster.append(1)
        else:
            values.append(lam)
            vectors.append(v)
            residuals.append(res)
            cluster.append(1)

    # A multiple root split by roundoff beyond the gap threshold still
    # reproduces one eigendirection; collinear certified eigenvectors
    # therefore mark an unresolved cluster, not distinct simple pairs.
    groups: dict[int, list[int]] = {}
    rep: list[int] = list(range(n))
    for i in range(n):
        if vectors[i] is None:
            continue
        for j in range(i):
            if vectors[j] is None or rep[j] != j:
                continue
            if abs(np.vdot(vectors[i], vectors[j])) >= 1.0 - 1e-8:
                rep[i] = j
                break
    for i in range(n):
        groups.setdefault(rep[i], []).append(i)
    pairs = []
    for i in range(n):
        members = groups.get(rep[i], [i])
        if vectors[i] is not None and len(members) > 1:
            pairs.append(GeneralEigenpair(values[i], None, len(members), residuals[i]))
        else:
            pairs.append(GeneralEigenpair(values[i], vectors[i], cluster[i], residuals[i]))
    return pairs


def _power_norm_squared(a: np.ndarray, rtol: float, atol: float) -> float:
    """Largest singular value by power iteration with repeated squaring.

    Normalized squaring of the Gram matrix contracts toward the projector
    on the top eigenspace at a doubly exponential rate, so the residual
    certificate is reached in logarithmically many squarings even when
    the plain iteration contracts too slowly. Used only when the plain
    phase cannot certify its exit.
    """
    rows, cols = a.shape
    gram = a.conj().T @ a if cols <= rows else a @ a.conj().T
    scale = frobenius_norm(gram)
    if scale == 0.0:
        return 0.0
    b = gram / scale
    v0 = _start_vector(b.shape[0]).astype(np.complex128)
    v0 /= np.linalg.norm(v0)
    for _ in range(64):
        b2 = b @ b
        norm_b = frobenius_norm(b2)
        if norm_b < 1e-300:
            break
        b = b2 / norm_b
        v = b @ v0
        nv = float(np.linalg.norm(v))
        if nv < 1e-300:
            continue
        v /= nv
        w = gram @ v
        rho = float(np.vdot(v, w).real)
        res = float(np.linalg.norm(w - rho * v))
        if res <= 0.5 * (rtol * rho + atol * math.sqrt(max(rho, 0.0))) + 1e-300:
            return math.sqrt(max(rho, 0.0))
    raise ConvergenceError("operator norm iteration did not stabilize")


def operator_norm(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> float:
    """Largest singular value, by power iteration on the smaller Gram matrix.

    Plain iteration with a certified stop; near-degenerate leading
    singular values fall back to the squaring form.
    """
    a = _require_matrix(a, "a")
    if a.size == 0:
        return 0.0
    rtol = tol.rel if tol.rel > 0 else 1e-12
    sigma, _, converged = power_norm(a, rtol, tol.abs, _POWER_MAX_ITER)
    if not converged:
        return _power_norm_squared(a, rtol, tol.abs)
    return sigma


def singular_values(a: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """All singular values, descending, via the Hermitian eigensolver on a*a.

    Each value is recovered as ``|a v|`` from a Gram eigenvector rather
    than as the square root of the eigenvalue: the eigensolver noise then
    enters linearly, so true zeros come out near machine precision instead
    of flooring at sqrt(eps) times the largest value.
    """
    a = _require_matrix(a, "a")
    del tol  # the Gram eigenproblem needs machine-level resolution regardless
    if a.shape[1] <= a.shape[0]:
        gram = a.conj().T @ a
        factor = a
    else:
        gram = a @ a.conj().T
        factor = a.conj().T
    _, v = eig_hermitian(gram, Tolerance(abs=0.0, rel=1e-12))
    sigmas = np.array([float(np.linalg.norm(factor @ v[:, i])) for i in range(v.shape[1])])
    return np.sort(sigmas)[::-1]


def schmidt_rank(v: np.ndarray, d: int, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of singular values of the d x d reshape exceeding ``tol.abs``.

    Rank 1 means the vector is a product vector; higher values measure
    entanglement across the two tensor factors.
    """
    v = _require_vector(v, "v")
    if d < 1 or v.shape[0] != d * d:
        raise ShapeError(f"vector length {v.shape[0]} is not the square of d={d}")
    sv = singular_values(v.reshape(d, d), tol)
    return int(np.sum(sv > tol.abs))


def random_unit_vector(n: int, rng) -> np.ndarray:
    """Unit vector from splitmix draws; ``rng`` is a ``SplitMix64``."""
    while True:
        v = rng.complex_vector(n)
        norm = float(np.linalg.norm(v))
        if norm > 1e-3:
            return v / norm


def vec_norm(x: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(x)))


def max_abs(a: np.ndarray) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0

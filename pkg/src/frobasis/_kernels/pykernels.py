"""NumPy implementations of the iterative numerical kernels.

These are the pure-Python twins of the compiled extension in
``fastkernels``; both expose the same three functions with identical
semantics, and the package picks one at import time (see ``__init__``).
The hot loops here are the cyclic Jacobi sweeps, the Ehrlich-Aberth
root iteration and the power iteration for the largest singular value.
"""

from __future__ import annotations

import math

import numpy as np

_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1
_START_SEED = 0x243F6A8885A308D3


def _start_vector(n: int) -> np.ndarray:
    # Fixed pseudo-random start for the power iteration: deterministic,
    # and with measure-zero overlap failure against any fixed matrix.
    out = np.empty(n)
    x = _START_SEED
    for i in range(n):
        x = (x * _LCG_MULT + _LCG_INC) & _MASK64
        out[i] = 0.5 + (x >> 11) / float(1 << 53)
    return out


def jacobi_eigh(a: np.ndarray, off_threshold: float, max_sweeps: int):
    """Cyclic Jacobi diagonalization of a Hermitian matrix.

    The strictly lower triangle is assumed to mirror the upper one;
    callers are responsible for the Hermiticity check. Returns
    ``(eigenvalues ascending, eigenvector columns, final off-diagonal
    Frobenius norm, sweeps used)``.
    """
    n = a.shape[0]
    h = np.array(a, dtype=np.complex128, copy=True)
    v = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([h[0, 0].real]), v, 0.0, 0

    def offnorm():
        return math.sqrt(max(0.0, np.sum(np.abs(h) ** 2) - np.sum(np.abs(np.diagonal(h)) ** 2)))

    off = offnorm()
    sweeps = 0
    while off > off_threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = h[p, q]
                absg = abs(g)
                if absg == 0.0:
                    continue
                app = h[p, p].real
                aqq = h[q, q].real
                phase = g / absg
                tau = (aqq - app) / (2.0 * absg)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sp = s * phase
                spc = s * np.conj(phase)

                rp = h[p, :].copy()
                rq = h[q, :].copy()
                h[p, :] = c * rp - sp * rq
                h[q, :] = spc * rp + c * rq
                cp = h[:, p].copy()
                cq = h[:, q].copy()
                h[:, p] = c * cp - spc * cq
                h[:, q] = sp * cp + c * cq
                h[p, q] = 0.0
                h[q, p] = 0.0
                h[p, p] = h[p, p].real
                h[q, q] = h[q, q].real

                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - spc * vq
                v[:, q] = sp * vp + c * vq
        sweeps += 1
        off = offnorm()

    w = np.diagonal(h).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order], off, sweeps


def _horner(coeffs: np.ndarray, z: complex):
    """Evaluate the polynomial and its derivative at z."""
    p = coeffs[0]
    dp = 0.0 + 0.0j
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth_roots(coeffs: np.ndarray, tol: float, max_iter: int):
    """Simultaneous Ehrlich-Aberth refinement of all polynomial roots.

    ``coeffs`` holds monic coefficients, highest power first. Returns
    ``(roots, iterations, converged)``; convergence means every last
    correction satisfied ``|w| <= tol * (1 + |z|)``.
    """
    coeffs = np.asarray(coeffs, dtype=np.complex128)
    n = len(coeffs) - 1
    if n < 1:
        return np.empty(0, dtype=np.complex128), 0, True
    if n == 1:
        return np.array([-coeffs[1]]), 0, True

    center = -coeffs[1] / n
    radius = 1.0 + float(np.max(np.abs(coeffs[1:])))
    k = np.arange(n)
    angles = 2.0 * np.pi * (k + 0.25) / n + 0.5 / n
    z = center + radius * np.exp(1j * angles)

    iterations = 0
    converged = False
    for iterations in range(1, max_iter + 1):
        all_small = True
        for i in range(n):
            p, dp = _horner(coeffs, z[i])
            if p == 0.0:
                continue
            diffs = z[i] - np.delete(z, i)
            bad = np.abs(diffs) < 1e-300
            if np.any(bad):
                z[i] += (1.0 + 1.0j) * 1e-12 * (1.0 + abs(z[i]))
                all_small = False
                continue
            ssum = np.sum(1.0 / diffs)
            if dp == 0.0:
                w = p * (1.0 + 1.0j)  # nudge off a critical point
            else:
                newton = p / dp
                denom = 1.0 - newton * ssum
                w = newton if denom == 0.0 else newton / denom
            z[i] -= w
            if abs(w) > tol * (1.0 + abs(z[i])):
                all_small = False
        if all_small:
            converged = True
            break
    return z, iterations, converged


def power_norm(a: np.ndarray, rtol: float, atol: float, max_iter: int):
    """Largest singular value via power iteration on the smaller Gram matrix.

    Returns ``(sigma, iterations, converged)``. The stop is certified by
    the eigen-residual of the Gram matrix: for a Hermitian matrix the
    Rayleigh quotient lies within ``|Gv - rho v|`` of an eigenvalue, so a
    small residual bounds the error regardless of the spectral gap. When
    the cap is reached uncertified, ``converged`` is False and callers
    switch to the repeated-squaring form.
    """
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError("power_norm expects a matrix")
    rows, cols = a.shape
    if rows == 0 or cols == 0:
        return 0.0, 0, True
    gram = a.conj().T @ a if cols <= rows else a @ a.conj().T
    k = gram.shape[0]

    v = _start_vector(k).astype(np.complex128)
    v /= np.linalg.norm(v)
    rho = 0.0
    for it in range(1, max_iter + 1):
        w = gram @ v
        rho = float(np.vdot(v, w).real)  # v is unit
        res = float(np.linalg.norm(w - rho * v))
        if res <= 0.5 * (rtol * rho + atol * math.sqrt(max(rho, 0.0))) + 1e-300:
            return math.sqrt(max(rho, 0.0)), it, True
        nw = float(np.linalg.norm(w))
        if nw < 1e-300:
            return 0.0, it, True
        v = w / nw
    return math.sqrt(max(rho, 0.0)), max_iter, False

# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: cyclic Jacobi sweeps, Ehrlich-Aberth iteration and
power iteration. Semantics mirror ``pykernels`` exactly; only the inner
loops are lowered to C."""

import numpy as np

cimport numpy as cnp
from libc.math cimport sqrt

cnp.import_array()

ctypedef double complex cplx

cdef extern from "complex.h" nogil:
    double cabs(double complex)
    double creal(double complex)
    double cimag(double complex)
    double complex conj(double complex)

cdef unsigned long long _LCG_MULT = 6364136223846793005ULL
cdef unsigned long long _LCG_INC = 1442695040888963407ULL
cdef unsigned long long _START_SEED = 0x243F6A8885A308D3ULL


cdef void _fill_start(double[::1] out, Py_ssize_t n) nogil:
    cdef unsigned long long x = _START_SEED
    cdef Py_ssize_t i
    for i in range(n):
        x = x * _LCG_MULT + _LCG_INC
        out[i] = 0.5 + (x >> 11) / 9007199254740992.0  # 2^53


cdef double _offnorm(cplx[:, ::1] h, Py_ssize_t n) nogil:
    cdef double s = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                s += creal(h[i, j]) ** 2 + cimag(h[i, j]) ** 2
    return sqrt(s)


def jacobi_eigh(a, double off_threshold, int max_sweeps):
    """Cyclic Jacobi diagonalization of a Hermitian matrix; see pykernels."""
    h_arr = np.array(a, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = h_arr.shape[0]
    v_arr = np.eye(n, dtype=np.complex128)
    if n == 1:
        return np.array([h_arr[0, 0].real]), v_arr, 0.0, 0

    cdef cplx[:, ::1] h = h_arr
    cdef cplx[:, ::1] v = v_arr
    cdef Py_ssize_t p, q, i
    cdef int sweeps = 0
    cdef double off, absg, app, aqq, tau, t, c, s
    cdef cplx g, phase, sp, spc, rp, rq

    off = _offnorm(h, n)
    while off > off_threshold and sweeps < max_sweeps:
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    g = h[p, q]
                    absg = cabs(g)
                    if absg == 0.0:
                        continue
                    app = creal(h[p, p])
                    aqq = creal(h[q, q])
                    phase = g / absg
                    tau = (aqq - app) / (2.0 * absg)
                    if tau >= 0.0:
                        t = 1.0 / (tau + sqrt(1.0 + tau * tau))
                    else:
                        t = -1.0 / (-tau + sqrt(1.0 + tau * tau))
                    c = 1.0 / sqrt(1.0 + t * t)
                    s = t * c
                    sp = s * phase
                    spc = s * conj(phase)

                    for i in range(n):
                        rp = h[p, i]
                        rq = h[q, i]
                        h[p, i] = c * rp - sp * rq
                        h[q, i] = spc * rp + c * rq
                    for i in range(n):
                        rp = h[i, p]
                        rq = h[i, q]
                        h[i, p] = c * rp - spc * rq
                        h[i, q] = sp * rp + c * rq
                    h[p, q] = 0.0
                    h[q, p] = 0.0
                    h[p, p] = creal(h[p, p])
                    h[q, q] = creal(h[q, q])
                    for i in range(n):
                        rp = v[i, p]
                        rq = v[i, q]
                        v[i, p] = c * rp - spc * rq
                        v[i, q] = sp * rp + c * rq
        sweeps += 1
        off = _offnorm(h, n)

    w = np.diagonal(h_arr).real.copy()
    order = np.argsort(w, kind="stable")
    return w[order], v_arr[:, order], off, sweeps


def aberth_roots(coeffs, double tol, int max_iter):
    """Simultaneous Ehrlich-Aberth root refinement; see pykernels."""
    c_arr = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef Py_ssize_t n = c_arr.shape[0] - 1
    if n < 1:
        return np.empty(0, dtype=np.complex128), 0, True
    if n == 1:
        return np.array([-c_arr[1]]), 0, True

    center = -c_arr[1] / n
    radius = 1.0 + float(np.max(np.abs(c_arr[1:])))
    k = np.arange(n)
    angles = 2.0 * np.pi * (k + 0.25) / n + 0.5 / n
    z_arr = center + radius * np.exp(1j * angles)

    cdef cplx[::1] cs = c_arr
    cdef cplx[::1] z = z_arr
    cdef Py_ssize_t i, j, m
    cdef int it = 0
    cdef bint all_small, skip
    cdef cplx pval, dpval, ssum, diff, newton, denom, w
    cdef bint converged = False

    for it in range(1, max_iter + 1):
        all_small = True
        with nogil:
            for i in range(n):
                pval = cs[0]
                dpval = 0.0
                for m in range(1, n + 1):
                    dpval = dpval * z[i] + pval
                    pval = pval * z[i] + cs[m]
                if pval == 0.0:
                    continue
                ssum = 0.0
                skip = False
                for j in range(n):
                    if j == i:
                        continue
                    diff = z[i] - z[j]
                    if cabs(diff) < 1e-300:
                        z[i] = z[i] + (1.0 + 1.0j) * 1e-12 * (1.0 + cabs(z[i]))
                        all_small = False
                        skip = True
                        break
                    ssum = ssum + 1.0 / diff
                if skip:
                    continue
                if dpval == 0.0:
                    w = pval * (1.0 + 1.0j)
                else:
                    newton = pval / dpval
                    denom = 1.0 - newton * ssum
                    if denom == 0.0:
                        w = newton
                    else:
                        w = newton / denom
                z[i] = z[i] - w
                if cabs(w) > tol * (1.0 + cabs(z[i])):
                    all_small = False
        if all_small:
            converged = True
            break
    return z_arr, it, converged


def power_norm(a, double rtol, double atol, int max_iter):
    """Largest singular value by power iteration; see pykernels."""
    a_arr = np.asarray(a, dtype=np.complex128)
    if a_arr.ndim != 2:
        raise ValueError("power_norm expects a matrix")
    cdef Py_ssize_t rows = a_arr.shape[0]
    cdef Py_ssize_t cols = a_arr.shape[1]
    if rows == 0 or cols == 0:
        return 0.0, 0, True
    if cols <= rows:
        gram_arr = np.ascontiguousarray(a_arr.conj().T @ a_arr)
    else:
        gram_arr = np.ascontiguousarray(a_arr @ a_arr.conj().T)
    cdef Py_ssize_t k = gram_arr.shape[0]

    start = np.empty(k)
    _fill_start(start, k)
    v_arr = start.astype(np.complex128)
    v_arr /= np.linalg.norm(v_arr)
    w_arr = np.empty(k, dtype=np.complex128)

    cdef cplx[:, ::1] gram = gram_arr
    cdef cplx[::1] v = v_arr
    cdef cplx[::1] w = w_arr
    cdef Py_ssize_t i, j
    cdef int it
    cdef double rho = 0.0, res, nw, acc
    cdef cplx dot, dev

    for it in range(1, max_iter + 1):
        with nogil:
            rho = 0.0
            for i in range(k):
                dot = 0.0
                for j in range(k):
                    dot = dot + gram[i, j] * v[j]
                w[i] = dot
                rho += creal(conj(v[i]) * dot)
            res = 0.0
            nw = 0.0
            for i in range(k):
                dev = w[i] - rho * v[i]
                res += creal(dev) ** 2 + cimag(dev) ** 2
                nw += creal(w[i]) ** 2 + cimag(w[i]) ** 2
            res = sqrt(res)
            nw = sqrt(nw)
        if rho < 0.0:
            rho = 0.0
        if res <= 0.5 * (rtol * rho + atol * sqrt(rho)) + 1e-300:
            return sqrt(rho), it, True
        if nw < 1e-300:
            return 0.0, it, True
        with nogil:
            for i in range(k):
                v[i] = w[i] / nw
    return sqrt(rho), max_iter, False

"""JIT-compiled implementations of the hot kernels (numba backend).

Same functions and contracts as ``_kernels_numpy``; the math is kept in
lockstep so the two backends agree to floating-point round-off.
"""

import numpy as np
from numba import njit

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0
_ARMIJO_C1 = 0.3


@njit(cache=True)
def _objective(mats, x):
    d, n, _ = mats.shape
    f = 0.0
    for k in range(d):
        v = 0.0 + 0.0j
        for i in range(n):
            acc = 0.0 + 0.0j
            for j in range(n):
                acc += mats[k, i, j] * x[j]
            v += np.conj(x[i]) * acc
        f += v.real * v.real + v.imag * v.imag
    return f


@njit(cache=True)
def _gradient(mats, x):
    d, n, _ = mats.shape
    g = np.zeros(n, dtype=np.complex128)
    for k in range(d):
        v = 0.0 + 0.0j
        Ax = np.zeros(n, dtype=np.complex128)
        AHx = np.zeros(n, dtype=np.complex128)
        for i in range(n):
            acc = 0.0 + 0.0j
            acch = 0.0 + 0.0j
            for j in range(n):
                acc += mats[k, i, j] * x[j]
                acch += np.conj(mats[k, j, i]) * x[j]
            Ax[i] = acc
            AHx[i] = acch
            v += np.conj(x[i]) * acc
        for i in range(n):
            g[i] += 2.0 * (np.conj(v) * Ax[i] + v * AHx[i])
    return g


def objective(mats, x):
    return float(_objective(np.ascontiguousarray(mats), np.ascontiguousarray(x)))


def gradient(mats, x):
    return _gradient(np.ascontiguousarray(mats), np.ascontiguousarray(x))


@njit(cache=True)
def _ascent_one(mats, x0, max_iters, tol):
    n = x0.shape[0]
    x = x0.copy()
    f = _objective(mats, x)
    alpha = 1.0
    iters = 0
    for it in range(max_iters):
        iters = it + 1
        g = _gradient(mats, x)
        ip = 0.0
        for i in range(n):
            ip += x[i].real * g[i].real + x[i].imag * g[i].imag
        gn2 = 0.0
        for i in range(n):
            g[i] = g[i] - ip * x[i]
            gn2 += g[i].real * g[i].real + g[i].imag * g[i].imag
        if gn2 <= (tol * max(1.0, f)) ** 2:
            break
        alpha = min(1.0, 4.0 * alpha)
        moved = False
        while alpha > 1e-18:
            y = x + alpha * g
            nrm = 0.0
            for i in range(n):
                nrm += y[i].real * y[i].real + y[i].imag * y[i].imag
            nrm = np.sqrt(nrm)
            for i in range(n):
                y[i] = y[i] / nrm
            fy = _objective(mats, y)
            if fy >= f + _ARMIJO_C1 * alpha * gn2:
                x = y
                f = fy
                moved = True
                break
            alpha *= 0.5
        if not moved:
            break
    return f, x, iters


@njit(cache=True)
def _ascent_run(mats, starts, max_iters, tol):
    nr, n = starts.shape
    vals = np.empty(nr)
    xs = np.empty((nr, n), dtype=np.complex128)
    iters = np.empty(nr, dtype=np.int64)
    for r in range(nr):
        f, x, it = _ascent_one(mats, starts[r].copy(), max_iters, tol)
        vals[r] = np.sqrt(f)
        xs[r] = x
        iters[r] = it
    return vals, xs, iters


def ascent_run(mats, starts, max_iters, tol):
    """Projected gradient ascent from every start vector (see numpy twin)."""
    return _ascent_run(
        np.ascontiguousarray(mats), np.ascontiguousarray(starts), max_iters, tol
    )


@njit(cache=True)
def _alternating_one(mats, x0, max_iters, tol):
    d, n, _ = mats.shape
    x = x0.copy()
    best = np.sqrt(_objective(mats, x))
    iters = 0
    for it in range(max_iters):
        iters = it + 1
        v = np.zeros(d, dtype=np.complex128)
        for k in range(d):
            acc = 0.0 + 0.0j
            for i in range(n):
                row = 0.0 + 0.0j
                for j in range(n):
                    row += mats[k, i, j] * x[j]
                acc += np.conj(x[i]) * row
            v[k] = acc
        nv = 0.0
        for k in range(d):
            nv += v[k].real * v[k].real + v[k].imag * v[k].imag
        nv = np.sqrt(nv)
        lam = np.zeros(d, dtype=np.complex128)
        if nv < 1e-300:
            lam[0] = 1.0
        else:
            for k in range(d):
                lam[k] = v[k] / nv
        H = np.zeros((n, n), dtype=np.complex128)
        for k in range(d):
            c = np.conj(lam[k])
            for i in range(n):
                for j in range(n):
                    H[i, j] += 0.5 * (c * mats[k, i, j] + np.conj(c * mats[k, j, i]))
        _, Q = np.linalg.eigh(H)
        xn = np.ascontiguousarray(Q[:, n - 1])
        fn = np.sqrt(_objective(mats, xn))
        if fn <= best + tol * max(1.0, best):
            if fn > best:
                best = fn
                x = xn
            break
        best = fn
        x = xn
    return best, x, iters


@njit(cache=True)
def _alternating_run(mats, starts, max_iters, tol):
    nr, n = starts.shape
    vals = np.empty(nr)
    xs = np.empty((nr, n), dtype=np.complex128)
    iters = np.empty(nr, dtype=np.int64)
    for r in range(nr):
        b, x, it = _alternating_one(mats, starts[r].copy(), max_iters, tol)
        vals[r] = b
        xs[r] = x
        iters[r] = it
    return vals, xs, iters


def alternating_run(mats, starts, max_iters, tol):
    """Alternating maximisation (see numpy twin for the scheme)."""
    return _alternating_run(
        np.ascontiguousarray(mats), np.ascontiguousarray(starts), max_iters, tol
    )


@njit(cache=True)
def _lam_max_theta(mat, theta):
    n = mat.shape[0]
    ph = np.exp(1j * theta)
    H = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            H[i, j] = 0.5 * (ph * mat[i, j] + np.conj(ph * mat[j, i]))
    w = np.linalg.eigvalsh(H)
    return w[n - 1]


def lam_max_theta(mat, theta):
    return float(_lam_max_theta(np.ascontiguousarray(mat), theta))


@njit(cache=True)
def _theta_grid_vals(mat, n_grid):
    vals = np.empty(n_grid)
    for i in range(n_grid):
        vals[i] = _lam_max_theta(mat, 2.0 * np.pi * i / n_grid)
    return vals


@njit(cache=True)
def _theta_grid_max(mat, n_grid):
    best = -1e300
    for i in range(n_grid):
        v = _lam_max_theta(mat, 2.0 * np.pi * i / n_grid)
        if v > best:
            best = v
    return best


def theta_grid_max(mat, n_grid):
    """Plain maximum of lam_max_theta over a uniform grid (no refinement)."""
    return float(_theta_grid_max(np.ascontiguousarray(mat), n_grid))


@njit(cache=True)
def _theta_sweep(mat, n_grid, top_k, theta_tol):
    vals = _theta_grid_vals(mat, n_grid)
    n_evals = n_grid
    best = vals[0]
    best_theta = 0.0
    for i in range(n_grid):
        if vals[i] > best:
            best = vals[i]
            best_theta = 2.0 * np.pi * i / n_grid
    h = 2.0 * np.pi / n_grid
    # top_k local maxima of the cyclic grid, largest first
    peak = np.zeros(n_grid, dtype=np.bool_)
    for i in range(n_grid):
        if vals[i] >= vals[(i - 1) % n_grid] and vals[i] >= vals[(i + 1) % n_grid]:
            peak[i] = True
    for _ in range(top_k):
        sel = -1
        vbest = -1e300
        for i in range(n_grid):
            if peak[i] and vals[i] > vbest:
                vbest = vals[i]
                sel = i
        if sel < 0:
            break
        peak[sel] = False
        a = 2.0 * np.pi * sel / n_grid - h
        b = 2.0 * np.pi * sel / n_grid + h
        c = b - _INVPHI * (b - a)
        e = a + _INVPHI * (b - a)
        fc = _lam_max_theta(mat, c)
        fe = _lam_max_theta(mat, e)
        n_evals += 2
        while (b - a) > theta_tol:
            if fc > fe:
                b, e, fe = e, c, fc
                c = b - _INVPHI * (b - a)
                fc = _lam_max_theta(mat, c)
            else:
                a, c, fc = c, e, fe
                e = a + _INVPHI * (b - a)
                fe = _lam_max_theta(mat, e)
            n_evals += 1
            if fc > best:
                best = fc
                best_theta = c
            if fe > best:
                best = fe
                best_theta = e
    return best, best_theta, n_evals


def theta_sweep(mat, n_grid, top_k, theta_tol):
    """Coarse grid plus golden-section refinement around top_k maxima."""
    b, t, n = _theta_sweep(np.ascontiguousarray(mat), n_grid, top_k, theta_tol)
    return float(b), float(t), int(n)


@njit(cache=True)
def _sphere_scan_2d(mats, t0, t1, nt, p0, p1, npp):
    d = mats.shape[0]
    best = -1.0
    bt = t0
    bp = p0
    for i in range(nt):
        t = t0 + (t1 - t0) * i / (nt - 1) if nt > 1 else t0
        c = np.cos(t)
        s = np.sin(t)
        for j in range(npp):
            p = p0 + (p1 - p0) * j / (npp - 1) if npp > 1 else p0
            x1 = s * np.exp(1j * p)
            f = 0.0
            for k in range(d):
                v = c * (mats[k, 0, 0] * c + mats[k, 0, 1] * x1) + np.conj(x1) * (
                    mats[k, 1, 0] * c + mats[k, 1, 1] * x1
                )
                f += v.real * v.real + v.imag * v.imag
            if f > best:
                best = f
                bt = t
                bp = p
    return best, bt, bp


def sphere_scan_2d(mats, t0, t1, nt, p0, p1, npp):
    """Scan F over x = (cos t, e^{i p} sin t) on an inclusive grid."""
    b, t, p = _sphere_scan_2d(np.ascontiguousarray(mats), t0, t1, nt, p0, p1, npp)
    return float(b), float(t), float(p)

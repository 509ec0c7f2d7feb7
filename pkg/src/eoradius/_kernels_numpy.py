"""Pure-numpy implementations of the numerically hot kernels.

Reference semantics for the numba backend in ``_kernels_numba``; both
modules expose the same functions with the same contracts.  Everything
here works on raw ``complex128`` arrays, validation lives in the callers.
"""

import numpy as np

_INVPHI = (np.sqrt(5.0) - 1.0) / 2.0
_ARMIJO_C1 = 0.3


def objective(mats, x):
    """F(x) = sum_k |<A_k x, x>|^2 for a (d, n, n) stack and a unit vector."""
    v = np.einsum("i,kij,j->k", x.conj(), mats, x)
    return float(np.sum(v.real**2 + v.imag**2))


def gradient(mats, x):
    """Gradient of ``objective`` in the 2n real coordinates of x.

    Returned as the complex carrier g with g[i] = dF/dRe(x_i) + i*dF/dIm(x_i),
    i.e. g = 2 * sum_k (conj(v_k) A_k + v_k A_k^*) x with v_k = <A_k x, x>.
    """
    v = np.einsum("i,kij,j->k", x.conj(), mats, x)
    p = np.einsum("k,kij,j->i", v.conj(), mats, x)
    p += np.einsum("k,kji,j->i", v, mats.conj(), x)
    return 2.0 * p


def _ascent_one(mats, x0, max_iters, tol):
    x = x0.copy()
    f = objective(mats, x)
    alpha = 1.0
    iters = 0
    for it in range(max_iters):
        iters = it + 1
        g = gradient(mats, x)
        g -= np.real(np.vdot(x, g)) * x
        gn2 = float(np.real(np.vdot(g, g)))
        if gn2 <= (tol * max(1.0, f)) ** 2:
            break
        alpha = min(1.0, 4.0 * alpha)
        moved = False
        while alpha > 1e-18:
            y = x + alpha * g
            y /= np.linalg.norm(y)
            fy = objective(mats, y)
            if fy >= f + _ARMIJO_C1 * alpha * gn2:
                x, f, moved = y, fy, True
                break
            alpha *= 0.5
        if not moved:
            break
    return f, x, iters


def ascent_run(mats, starts, max_iters, tol):
    """Projected gradient ascent from every start vector.

    Armijo backtracking (shrink 1/2, unit initial step, warm-started after
    the first accepted step), retraction by renormalisation.  Returns per
    start the attained sqrt(F), the final unit vector and the iteration
    count.
    """
    nr, n = starts.shape
    vals = np.empty(nr)
    xs = np.empty((nr, n), dtype=np.complex128)
    iters = np.empty(nr, dtype=np.int64)
    for r in range(nr):
        f, x, it = _ascent_one(mats, starts[r], max_iters, tol)
        vals[r] = np.sqrt(f)
        xs[r] = x
        iters[r] = it
    return vals, xs, iters


def _alternating_one(mats, x0, max_iters, tol):
    d, n, _ = mats.shape
    x = x0.copy()
    best = np.sqrt(objective(mats, x))
    iters = 0
    for it in range(max_iters):
        iters = it + 1
        v = np.einsum("i,kij,j->k", x.conj(), mats, x)
        nv = np.linalg.norm(v)
        if nv < 1e-300:
            lam = np.zeros(d, dtype=np.complex128)
            lam[0] = 1.0
        else:
            lam = v / nv
        H = np.einsum("k,kij->ij", lam.conj(), mats)
        H = 0.5 * (H + H.conj().T)
        _, Q = np.linalg.eigh(H)
        xn = np.ascontiguousarray(Q[:, -1])
        fn = np.sqrt(objective(mats, xn))
        if fn <= best + tol * max(1.0, best):
            if fn > best:
                best, x = fn, xn
            break
        best, x = fn, xn
    return best, x, iters


def alternating_run(mats, starts, max_iters, tol):
    """Alternating maximisation: optimal direction in C^d, then the top
    eigenvector of the rotated Hermitian part.  Monotone in sqrt(F)."""
    nr, n = starts.shape
    vals = np.empty(nr)
    xs = np.empty((nr, n), dtype=np.complex128)
    iters = np.empty(nr, dtype=np.int64)
    for r in range(nr):
        b, x, it = _alternating_one(mats, starts[r], max_iters, tol)
        vals[r] = b
        xs[r] = x
        iters[r] = it
    return vals, xs, iters


def lam_max_theta(mat, theta):
    """Largest eigenvalue of (e^{i theta} M + e^{-i theta} M^*)/2."""
    H = 0.5 * (np.exp(1j * theta) * mat + np.exp(-1j * theta) * mat.conj().T)
    return float(np.linalg.eigvalsh(H)[-1])


def _theta_grid_vals(mat, n_grid):
    thetas = np.arange(n_grid) * (2.0 * np.pi / n_grid)
    ph = np.exp(1j * thetas)
    out = np.empty(n_grid)
    step = 4096
    for lo in range(0, n_grid, step):
        hi = min(lo + step, n_grid)
        H = 0.5 * (
            ph[lo:hi, None, None] * mat[None]
            + ph[lo:hi, None, None].conj() * mat.conj().T[None]
        )
        out[lo:hi] = np.linalg.eigvalsh(H)[:, -1]
    return thetas, out


def theta_grid_max(mat, n_grid):
    """Plain maximum of lam_max_theta over a uniform grid (no refinement)."""
    _, vals = _theta_grid_vals(mat, n_grid)
    return float(vals.max())


def theta_sweep(mat, n_grid, top_k, theta_tol):
    """Coarse grid plus golden-section refinement around the top_k grid
    maxima.  Returns (best value, best theta, number of evaluations)."""
    thetas, vals = _theta_grid_vals(mat, n_grid)
    n_evals = n_grid
    best = float(vals.max())
    best_theta = float(thetas[int(vals.argmax())])
    h = 2.0 * np.pi / n_grid
    left = np.roll(vals, 1)
    right = np.roll(vals, -1)
    is_peak = (vals >= left) & (vals >= right)
    peaks = np.nonzero(is_peak)[0]
    order = peaks[np.argsort(vals[peaks])[::-1]]
    for idx in order[:top_k]:
        a = thetas[idx] - h
        b = thetas[idx] + h
        c = b - _INVPHI * (b - a)
        e = a + _INVPHI * (b - a)
        fc = lam_max_theta(mat, c)
        fe = lam_max_theta(mat, e)
        n_evals += 2
        while (b - a) > theta_tol:
            if fc > fe:
                b, e, fe = e, c, fc
                c = b - _INVPHI * (b - a)
                fc = lam_max_theta(mat, c)
            else:
                a, c, fc = c, e, fe
                e = a + _INVPHI * (b - a)
                fe = lam_max_theta(mat, e)
            n_evals += 1
            if fc > best:
                best, best_theta = fc, c
            if fe > best:
                best, best_theta = fe, e
    return best, best_theta, n_evals


def sphere_scan_2d(mats, t0, t1, nt, p0, p1, npp):
    """Scan F over x = (cos t, e^{i p} sin t) on an inclusive (nt x npp)
    grid.  Returns (best F, best t, best p)."""
    ts = np.linspace(t0, t1, nt)
    ps = np.linspace(p0, p1, npp)
    eip = np.exp(1j * ps)
    best = -1.0
    bt = t0
    bp = p0
    for i in range(nt):
        c = np.cos(ts[i])
        s = np.sin(ts[i])
        x1 = s * eip  # (npp,)
        # v_k(p) = conj(x0)(A00 x0 + A01 x1) + conj(x1)(A10 x0 + A11 x1)
        f = np.zeros(npp)
        for k in range(mats.shape[0]):
            a00, a01 = mats[k, 0, 0], mats[k, 0, 1]
            a10, a11 = mats[k, 1, 0], mats[k, 1, 1]
            v = c * (a00 * c + a01 * x1) + x1.conj() * (a10 * c + a11 * x1)
            f += v.real**2 + v.imag**2
        j = int(f.argmax())
        if f[j] > best:
            best = float(f[j])
            bt = float(ts[i])
            bp = float(ps[j])
    return best, bt, bp

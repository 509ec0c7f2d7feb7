"""Complex-matrix decompositions and spectral matrix functions.

Supplies the building blocks consumed by every radius bound: modulus
powers ``|M|^t`` and ``|M*|^t``, the (completed) polar factor, Hermitian
functional calculus, the operator norm and the spectral radius, plus the
validated function pairs (f, g) with ``f(lam) * g(lam) == lam``.

Conventions
-----------
* ``0**0 == 1`` in all spectral powers, so ``|M|**0 == I`` also for
  singular ``M``.  The endpoint exponents t in {0, 1} therefore behave
  like limits from the inside of the interval; this only enlarges the
  right-hand sides of the inequalities built on top.
* The polar factor is the full-SVD unitary completion ``W @ Vh`` (never a
  partial isometry), so ``U @ |M| == M`` and ``U |M|^s U* == |M*|^s`` hold
  for every ``s > 0`` including rank-deficient input.
* Results of Hermitian constructions are symmetrised, ``(X + X*)/2``, to
  suppress round-off.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError, PreconditionError, ShapeError

__all__ = [
    "HERMITICITY_RTOL",
    "SpectralFunctionPair",
    "abs_adjoint_fn",
    "abs_adjoint_pow",
    "abs_fn",
    "abs_pow",
    "as_square_matrix",
    "hermitian_part",
    "op_norm",
    "polar_unitary",
    "power_pair",
    "project_psd",
    "spectral_apply",
    "spectral_radius_mat",
    "sqrt_pair",
]

HERMITICITY_RTOL = 1e-10
_PSD_CLAMP_RTOL = 1e-12


def as_square_matrix(mat, name: str = "matrix") -> np.ndarray:
    """Validate and return ``mat`` as a square complex128 array.

    Raises ShapeError for non-square input and DomainError for non-finite
    entries.
    """
    arr = np.asarray(mat, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr.real)) or not np.all(np.isfinite(arr.imag)):
        raise DomainError(f"{name} contains non-finite entries")
    return arr


def hermitian_part(mat: np.ndarray) -> np.ndarray:
    """(M + M*)/2."""
    return 0.5 * (mat + mat.conj().T)


def op_norm(mat) -> float:
    """Operator (spectral) norm: the largest singular value."""
    mat = as_square_matrix(mat)
    if mat.shape[0] == 0:
        return 0.0
    return float(np.linalg.norm(mat, 2))


def spectral_radius_mat(mat) -> float:
    """Spectral radius: max |eigenvalue| over the (general) spectrum."""
    mat = as_square_matrix(mat)
    return float(np.max(np.abs(np.linalg.eigvals(mat))))


def _svd(mat):
    return np.linalg.svd(mat)


def abs_pow(mat, t: float) -> np.ndarray:
    """|M|^t = V diag(s^t) V* from the full SVD M = W diag(s) V*.

    ``t`` must be finite and >= 0; ``0**0 == 1`` (module convention), so
    ``abs_pow(M, 0)`` is the identity even for singular M.  The result is
    Hermitian positive semidefinite up to round-off.
    """
    mat = as_square_matrix(mat)
    if not np.isfinite(t) or t < 0:
        raise DomainError(f"exponent must be finite and >= 0, got {t}")
    _, s, vh = _svd(mat)
    st = np.power(s, t)  # numpy gives 0.0**0.0 == 1.0, the convention we want
    return hermitian_part((vh.conj().T * st) @ vh)


def abs_adjoint_pow(mat, t: float) -> np.ndarray:
    """|M*|^t = W diag(s^t) W*; same conventions as :func:`abs_pow`."""
    mat = as_square_matrix(mat)
    if not np.isfinite(t) or t < 0:
        raise DomainError(f"exponent must be finite and >= 0, got {t}")
    w, s, _ = _svd(mat)
    st = np.power(s, t)
    return hermitian_part((w * st) @ w.conj().T)


def abs_fn(mat, fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """fn(|M|) through the singular values: V diag(fn(s)) V*."""
    mat = as_square_matrix(mat)
    _, s, vh = _svd(mat)
    fs = np.asarray(fn(s), dtype=np.float64)
    return hermitian_part((vh.conj().T * fs) @ vh)


def abs_adjoint_fn(mat, fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """fn(|M*|) through the singular values: W diag(fn(s)) W*."""
    mat = as_square_matrix(mat)
    w, s, _ = _svd(mat)
    fs = np.asarray(fn(s), dtype=np.float64)
    return hermitian_part((w * fs) @ w.conj().T)


def polar_unitary(mat) -> np.ndarray:
    """Unitary polar factor U = W @ Vh from the full SVD M = W diag(s) Vh.

    Satisfies ``U @ |M| == M`` and ``U |M|^s U* == |M*|^s`` for all s > 0;
    rank-deficient input is accepted (the null-space columns are whatever
    unitary completion the SVD returns, the two identities hold anyway).
    """
    mat = as_square_matrix(mat)
    w, _, vh = _svd(mat)
    return w @ vh


def spectral_apply(mat, fn: Callable[[np.ndarray], np.ndarray], clamp_psd: bool = False) -> np.ndarray:
    """Hermitian functional calculus: Q diag(fn(w)) Q* with H = Q diag(w) Q*.

    Parameters
    ----------
    mat : array_like
        Hermitian within ``HERMITICITY_RTOL`` relative to its norm,
        otherwise PreconditionError.
    fn : callable
        Vectorised real function applied to the eigenvalues.
    clamp_psd : bool
        Treat the input as nominally positive semidefinite: eigenvalues in
        ``[-1e-12 * ||H||, 0)`` are clamped to 0, anything more negative
        raises DomainError.  Use this before fractional powers.
    """
    mat = as_square_matrix(mat)
    scale = op_norm(mat)
    dev = float(np.linalg.norm(mat - mat.conj().T, 2))
    if dev > HERMITICITY_RTOL * max(scale, 1e-300):
        raise PreconditionError(
            f"matrix is not Hermitian: ||H - H*|| = {dev:.3e} vs norm {scale:.3e}"
        )
    w, q = np.linalg.eigh(hermitian_part(mat))
    if clamp_psd:
        floor = -_PSD_CLAMP_RTOL * max(scale, 1e-300)
        if w.min() < floor:
            raise DomainError(
                f"eigenvalue {w.min():.3e} below the PSD clamp threshold {floor:.3e}"
            )
        w = np.where(w < 0.0, 0.0, w)
    fw = np.asarray(fn(w), dtype=np.float64)
    return hermitian_part((q * fw) @ q.conj().T)


def project_psd(mat, rtol: float = 1e-10, name: str = "matrix") -> np.ndarray:
    """Check that ``mat`` is PSD up to ``-rtol * ||mat||`` and clamp.

    Returns the Hermitian matrix with the (slightly) negative eigenvalues
    set to 0; raises PreconditionError when the most negative eigenvalue
    falls below the tolerance.
    """
    mat = as_square_matrix(mat)
    scale = op_norm(mat)
    dev = float(np.linalg.norm(mat - mat.conj().T, 2))
    if dev > HERMITICITY_RTOL * max(scale, 1e-300):
        raise PreconditionError(f"{name} is not Hermitian (deviation {dev:.3e})")
    w, q = np.linalg.eigh(hermitian_part(mat))
    lo = float(w.min()) if w.size else 0.0
    if lo < -rtol * max(scale, 1e-300):
        raise PreconditionError(
            f"{name} is not positive semidefinite: min eigenvalue {lo:.6e}"
        )
    w = np.where(w < 0.0, 0.0, w)
    return hermitian_part((q * w) @ q.conj().T)


_PAIR_GRID = np.array([0.0, 1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3])
_PAIR_RTOL = 1e-10


@dataclass(frozen=True)
class SpectralFunctionPair:
    """Pair of nonnegative functions on [0, inf) with f(lam)*g(lam) == lam.

    Both callables must be vectorised (they receive eigenvalue arrays).
    The constraint is validated at construction on a fixed sample grid
    {0, 1e-3, 1e-2, ..., 1e3} within 1e-10 relative error.
    """

    f: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    g: Callable[[np.ndarray], np.ndarray] = field(repr=False)
    description: str = ""

    def __post_init__(self):
        lam = _PAIR_GRID
        fv = np.asarray(self.f(lam), dtype=np.float64)
        gv = np.asarray(self.g(lam), dtype=np.float64)
        if fv.shape != lam.shape or gv.shape != lam.shape:
            raise DomainError("f and g must map arrays to same-shape arrays")
        if np.any(fv < 0.0) or np.any(gv < 0.0):
            raise DomainError("f and g must be nonnegative on [0, inf)")
        err = np.abs(fv * gv - lam)
        if np.any(err > _PAIR_RTOL * np.maximum(1.0, lam)):
            raise DomainError(
                "f(lam) * g(lam) must equal lam on the sample grid "
                f"(max deviation {err.max():.3e})"
            )


def power_pair(alpha: float) -> SpectralFunctionPair:
    """The pair f = lam^alpha, g = lam^(1-alpha) for alpha in [0, 1]."""
    if not (np.isfinite(alpha) and 0.0 <= alpha <= 1.0):
        raise DomainError(f"alpha must lie in [0, 1], got {alpha}")

    def f(lam, _a=float(alpha)):
        return np.power(lam, _a)

    def g(lam, _a=1.0 - float(alpha)):
        return np.power(lam, _a)

    label = "sqrt" if alpha == 0.5 else f"power({alpha:g})"
    return SpectralFunctionPair(f, g, label)


def sqrt_pair() -> SpectralFunctionPair:
    """The canonical pair f = g = sqrt."""
    return power_pair(0.5)

"""Numerical radius, Euclidean operator norm and Euclidean operator radius.

For a d-tuple A = (A_1, ..., A_d) of same-size square complex matrices:

* ``tuple_op_norm(A)``   -- sup over unit x of sqrt(sum_k ||A_k x||^2),
  computed exactly as sqrt(lam_max(sum_k A_k* A_k));
* ``numerical_radius(M)`` -- sup over unit x of |<M x, x>|, computed as the
  maximum over theta of lam_max((e^{i theta} M + e^{-i theta} M*)/2) by a
  coarse grid plus golden-section refinement;
* ``euclidean_radius(A)`` -- sup over unit x of sqrt(sum_k |<A_k x, x>|^2),
  a nonconvex sphere maximisation attacked by two strategies whose larger
  result is reported (see below).

Every evaluation of the objective at a feasible unit vector is a valid
lower bound of the corresponding supremum, so all reported values carry
certified-lower-bound semantics: the package never claims an upper
certificate for an optimised radius.

Strategies for ``euclidean_radius``
-----------------------------------
1. Multi-start projected gradient ascent of F(x) = sum_k |<A_k x, x>|^2
   over the unit sphere of C^n viewed as R^{2n} (analytic gradient, Armijo
   backtracking with halving steps, renormalisation retraction).  Starts:
   seeded random unit vectors plus two deterministic ones (top
   eigenvectors of sum_k (A_k + A_k*)/2 and of sum_k A_k* A_k).
2. For d <= 3, the direction reduction
   ``w_e(A) = max over unit lam in C^d of w(sum_k conj(lam_k) A_k)``
   (a consequence of Cauchy-Schwarz applied to the vector of quadratic
   forms <A_k x, x>), realised as an alternating maximisation: the optimal
   lam for fixed x is v/||v|| with v_k = <A_k x, x>, the optimal x for
   fixed lam is the top eigenvector of the Hermitian part of the combined
   matrix; a full angle sweep at the incumbent lam polishes the result.

Restart r draws its starting vector from a generator seeded with
(master seed, r), so results are independent of execution schedule.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable

import numpy as np

from ._backend import kernels
from .errors import ConfigError, ShapeError, UnsupportedError
from .matfun import as_square_matrix, hermitian_part, abs_pow, abs_adjoint_pow

__all__ = [
    "OperatorTuple",
    "RadiusConfig",
    "RadiusEstimate",
    "SweepConfig",
    "euclidean_radius",
    "euclidean_radius_ascent",
    "euclidean_radius_lambda",
    "euclidean_radius_oracle",
    "numerical_radius",
    "numerical_radius_oracle",
    "sphere_gradient",
    "sphere_objective",
    "tuple_op_norm",
]


class OperatorTuple:
    """Ordered d-tuple of equal-size square complex matrices.

    The tuple algebra is entrywise: ``A + B``, ``A @ B`` (entrywise matrix
    products A_k B_k), scalar multiples, ``adjoint()``, modulus powers
    ``abs_pow(t)`` / ``abs_adjoint_pow(t)`` and entrywise matrix powers.
    The underlying (d, n, n) stack is read-only.
    """

    __slots__ = ("_stack",)

    # keep numpy scalars from hijacking scalar * tuple
    __array_ufunc__ = None

    def __init__(self, matrices: Iterable):
        mats = [as_square_matrix(m, f"entry {k}") for k, m in enumerate(matrices)]
        if not mats:
            raise ShapeError("a tuple needs at least one matrix")
        dim = mats[0].shape[0]
        for k, m in enumerate(mats):
            if m.shape[0] != dim:
                raise ShapeError(
                    f"entry {k} has dim {m.shape[0]}, expected {dim}"
                )
        stack = np.stack(mats).astype(np.complex128)
        stack.setflags(write=False)
        self._stack = stack

    @classmethod
    def from_stack(cls, stack) -> "OperatorTuple":
        stack = np.asarray(stack, dtype=np.complex128)
        if stack.ndim != 3:
            raise ShapeError(f"expected a (d, n, n) stack, got shape {stack.shape}")
        return cls(list(stack))

    @classmethod
    def zeros(cls, d: int, dim: int) -> "OperatorTuple":
        return cls.from_stack(np.zeros((d, dim, dim), dtype=np.complex128))

    @classmethod
    def identity(cls, d: int, dim: int) -> "OperatorTuple":
        return cls.from_stack(np.broadcast_to(np.eye(dim), (d, dim, dim)).copy())

    @property
    def d(self) -> int:
        return self._stack.shape[0]

    @property
    def dim(self) -> int:
        return self._stack.shape[1]

    @property
    def stack(self) -> np.ndarray:
        return self._stack

    def __len__(self) -> int:
        return self.d

    def __getitem__(self, k: int) -> np.ndarray:
        return self._stack[k]

    def __iter__(self):
        return iter(self._stack)

    def _check_same_shape(self, other: "OperatorTuple"):
        if not isinstance(other, OperatorTuple):
            raise TypeError(f"expected OperatorTuple, got {type(other).__name__}")
        if other.d != self.d or other.dim != self.dim:
            raise ShapeError(
                f"tuple shapes differ: (d={self.d}, dim={self.dim}) vs "
                f"(d={other.d}, dim={other.dim})"
            )

    def __add__(self, other: "OperatorTuple") -> "OperatorTuple":
        self._check_same_shape(other)
        return OperatorTuple.from_stack(self._stack + other._stack)

    def __sub__(self, other: "OperatorTuple") -> "OperatorTuple":
        self._check_same_shape(other)
        return OperatorTuple.from_stack(self._stack - other._stack)

    def __matmul__(self, other: "OperatorTuple") -> "OperatorTuple":
        """Entrywise products (A_1 B_1, ..., A_d B_d)."""
        self._check_same_shape(other)
        return OperatorTuple.from_stack(
            np.einsum("kij,kjl->kil", self._stack, other._stack)
        )

    def __mul__(self, scalar) -> "OperatorTuple":
        return OperatorTuple.from_stack(self._stack * complex(scalar))

    __rmul__ = __mul__

    def __neg__(self) -> "OperatorTuple":
        return OperatorTuple.from_stack(-self._stack)

    def adjoint(self) -> "OperatorTuple":
        return OperatorTuple.from_stack(self._stack.conj().transpose(0, 2, 1))

    def abs_pow(self, t: float) -> "OperatorTuple":
        """(|A_1|^t, ..., |A_d|^t)."""
        return OperatorTuple([abs_pow(m, t) for m in self._stack])

    def abs_adjoint_pow(self, t: float) -> "OperatorTuple":
        """(|A_1*|^t, ..., |A_d*|^t)."""
        return OperatorTuple([abs_adjoint_pow(m, t) for m in self._stack])

    def apply(self, fn) -> "OperatorTuple":
        """Entrywise matrix-to-matrix map."""
        return OperatorTuple([fn(m) for m in self._stack])

    def mat_power(self, n: int) -> "OperatorTuple":
        """(A_1^n, ..., A_d^n) with ordinary matrix powers."""
        return OperatorTuple([np.linalg.matrix_power(m, n) for m in self._stack])

    def __repr__(self) -> str:
        return f"OperatorTuple(d={self.d}, dim={self.dim})"


@dataclass(frozen=True)
class RadiusConfig:
    """Settings for the sphere optimiser behind ``euclidean_radius``."""

    restarts: int = 32
    max_iters: int = 500
    tol: float = 1e-8
    seed: int = 42

    def __post_init__(self):
        if self.restarts < 1:
            raise ConfigError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_iters < 1:
            raise ConfigError(f"max_iters must be >= 1, got {self.max_iters}")
        if not (np.isfinite(self.tol) and self.tol > 0):
            raise ConfigError(f"tol must be positive, got {self.tol}")


@dataclass(frozen=True)
class SweepConfig:
    """Settings for the angle sweep behind ``numerical_radius``."""

    grid_points: int = 720
    refine_tol: float = 1e-9
    top_k: int = 5

    def __post_init__(self):
        if self.grid_points < 8:
            raise ConfigError(f"grid_points must be >= 8, got {self.grid_points}")
        if not (np.isfinite(self.refine_tol) and self.refine_tol > 0):
            raise ConfigError(f"refine_tol must be positive, got {self.refine_tol}")
        if self.top_k < 1:
            raise ConfigError(f"top_k must be >= 1, got {self.top_k}")


@dataclass(frozen=True)
class RadiusEstimate:
    """Optimised radius value with certified-lower-bound semantics.

    ``value`` is the maximum objective value attained at an explicit
    feasible unit vector across all restarts, hence itself a valid lower
    bound of the true supremum; ``certified_lower`` repeats it to make the
    semantics explicit in reports.
    """

    value: float
    certified_lower: float
    restarts: int
    iterations: int
    tolerance: float
    method: str
    witness: np.ndarray | None = field(default=None, compare=False, repr=False)


def _gauge(x: np.ndarray) -> np.ndarray:
    """Rotate the global phase so the first component > 1e-12 is real >= 0."""
    for c in x:
        if abs(c) > 1e-12:
            return x * (c.conjugate() / abs(c))
    return x


def sphere_objective(tup: OperatorTuple, x: np.ndarray) -> float:
    """F(x) = sum_k |<A_k x, x>|^2 (no normalisation of x applied)."""
    v = np.einsum("i,kij,j->k", np.conj(x), tup.stack, x)
    return float(np.sum(v.real**2 + v.imag**2))


def sphere_gradient(tup: OperatorTuple, x: np.ndarray) -> np.ndarray:
    """Gradient of F in the 2n real coordinates of x, as complex carrier.

    g[i] = dF/dRe(x_i) + i dF/dIm(x_i) = (2 sum_k conj(v_k) A_k + v_k A_k*) x.
    Validated against central finite differences in the test suite.
    """
    stack = tup.stack
    v = np.einsum("i,kij,j->k", np.conj(x), stack, x)
    p = np.einsum("k,kij,j->i", np.conj(v), stack, x)
    p += np.einsum("k,kji,j->i", v, np.conj(stack), x)
    return 2.0 * p


def tuple_op_norm(tup: OperatorTuple) -> float:
    """sqrt(lam_max(sum_k A_k* A_k)); exact closed form, no optimisation."""
    gram = np.einsum("kji,kjl->il", np.conj(tup.stack), tup.stack)
    w = np.linalg.eigvalsh(hermitian_part(gram))
    return float(np.sqrt(max(w[-1], 0.0)))


def _theta_tol(refine_tol: float, scale: float) -> float:
    # the sweep objective is locally quadratic in theta, so an angle
    # resolution of sqrt(tol/scale) gives value resolution ~ tol
    return float(np.sqrt(max(refine_tol, 1e-15) / max(1.0, scale)))


def numerical_radius(mat, cfg: SweepConfig = SweepConfig()) -> RadiusEstimate:
    """w(M) = sup over unit x of |<M x, x>| for a square complex matrix.

    Maximum over theta of lam_max((e^{i theta} M + e^{-i theta} M*)/2),
    computed on ``cfg.grid_points`` angles and refined by golden-section
    search around the ``cfg.top_k`` best grid maxima.  Every evaluated
    angle yields a certified lower bound; the best one is returned.
    """
    mat = as_square_matrix(mat)
    scale = float(np.linalg.norm(mat, 2))
    if scale == 0.0:
        return RadiusEstimate(0.0, 0.0, cfg.top_k, 0, cfg.refine_tol, "theta-sweep",
                              _first_basis(mat.shape[0]))
    val, theta, evals = kernels.theta_sweep(
        mat, cfg.grid_points, cfg.top_k, _theta_tol(cfg.refine_tol, scale)
    )
    h = hermitian_part(np.exp(1j * theta) * mat)
    _, q = np.linalg.eigh(h)
    witness = _gauge(np.ascontiguousarray(q[:, -1]))
    return RadiusEstimate(
        value=val,
        certified_lower=val,
        restarts=cfg.top_k,
        iterations=evals,
        tolerance=cfg.refine_tol,
        method="theta-sweep",
        witness=witness,
    )


def numerical_radius_oracle(mat, grid_points: int = 10_000) -> float:
    """Dense uniform-angle oracle for w(M), no refinement heuristics.

    The grid error is O(1/grid_points^2) by smoothness of the sweep
    objective; intended for cross-checking ``numerical_radius``.
    """
    mat = as_square_matrix(mat)
    if grid_points < 10_000:
        raise ConfigError(f"grid_points must be >= 10000, got {grid_points}")
    return kernels.theta_grid_max(mat, grid_points)


def _first_basis(n: int) -> np.ndarray:
    x = np.zeros(n, dtype=np.complex128)
    x[0] = 1.0
    return x


def _deterministic_starts(tup: OperatorTuple) -> list[np.ndarray]:
    stack = tup.stack
    s = hermitian_part(stack.sum(axis=0))
    gram = hermitian_part(np.einsum("kji,kjl->il", np.conj(stack), stack))
    starts = []
    for h in (s, gram):
        _, q = np.linalg.eigh(h)
        starts.append(np.ascontiguousarray(q[:, -1]))
    return starts


def _random_starts(n: int, cfg: RadiusConfig) -> list[np.ndarray]:
    starts = []
    for r in range(cfg.restarts):
        rng = np.random.default_rng((cfg.seed, r))
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        nrm = np.linalg.norm(x)
        starts.append(x / nrm if nrm > 0 else _first_basis(n))
    return starts


def _best(vals, xs, iters):
    i = int(np.argmax(vals))
    return float(vals[i]), np.ascontiguousarray(xs[i]), int(iters.sum())


def euclidean_radius_ascent(tup: OperatorTuple, cfg: RadiusConfig = RadiusConfig()) -> RadiusEstimate:
    """Strategy 1 alone: multi-start projected gradient ascent."""
    starts = np.stack(_deterministic_starts(tup) + _random_starts(tup.dim, cfg))
    vals, xs, iters = kernels.ascent_run(tup.stack, starts, cfg.max_iters, cfg.tol)
    val, x, total = _best(vals, xs, iters)
    return RadiusEstimate(val, val, cfg.restarts, total, cfg.tol, "ascent", _gauge(x))


def _lambda_combination(tup: OperatorTuple, x: np.ndarray) -> np.ndarray | None:
    v = np.einsum("i,kij,j->k", np.conj(x), tup.stack, x)
    nv = np.linalg.norm(v)
    if nv < 1e-300:
        return None
    lam = v / nv
    return np.einsum("k,kij->ij", np.conj(lam), tup.stack)


_AM_TOL = 1e-12
_POLISH_GRID = 120
_POLISH_ROUNDS = 4


def euclidean_radius_lambda(
    tup: OperatorTuple,
    cfg: RadiusConfig = RadiusConfig(),
    extra_starts: list[np.ndarray] | None = None,
) -> RadiusEstimate:
    """Strategy 2 alone: the direction reduction over unit lam in C^d.

    Alternating maximisation (optimal lam for fixed x, top eigenvector for
    fixed lam), then up to a few rounds of full angle sweeps of
    w(sum_k conj(lam_k) A_k) at the incumbent direction, each sweep
    re-entering the alternation from its maximiser.  Only used for
    d <= 3 by :func:`euclidean_radius`.
    """
    base = _deterministic_starts(tup)
    n_rand = min(cfg.restarts, 8)
    rand = _random_starts(tup.dim, replace(cfg, restarts=n_rand))
    starts = base + rand + list(extra_starts or [])
    vals, xs, iters = kernels.alternating_run(
        tup.stack, np.stack(starts), max(cfg.max_iters, 60), _AM_TOL
    )
    val, x, total = _best(vals, xs, iters)
    tol = min(cfg.tol, 1e-10)
    for _ in range(_POLISH_ROUNDS):
        comb = _lambda_combination(tup, x)
        if comb is None:
            break
        scale = float(np.linalg.norm(comb, 2))
        if scale == 0.0:
            break
        sval, theta, evals = kernels.theta_sweep(
            comb, _POLISH_GRID, 3, _theta_tol(tol, scale)
        )
        total += evals
        if sval <= val + tol * max(1.0, val):
            break
        h = hermitian_part(np.exp(1j * theta) * comb)
        _, q = np.linalg.eigh(h)
        seed_x = np.ascontiguousarray(q[:, -1])
        vals2, xs2, it2 = kernels.alternating_run(
            tup.stack, seed_x[None, :], max(cfg.max_iters, 60), _AM_TOL
        )
        total += int(it2.sum())
        if vals2[0] > val:
            val, x = float(vals2[0]), np.ascontiguousarray(xs2[0])
        else:
            break
    return RadiusEstimate(val, val, cfg.restarts, total, cfg.tol, "lambda-reduction", _gauge(x))


def euclidean_radius(tup: OperatorTuple, cfg: RadiusConfig = RadiusConfig()) -> RadiusEstimate:
    """w_e(A) = sup over unit x of sqrt(sum_k |<A_k x, x>|^2).

    Runs the multi-start projected gradient ascent, and for d <= 3 also
    the direction-reduction strategy (seeded with the ascent maximiser);
    the larger certified value is reported.  See the module docstring for
    both schemes.
    """
    est = euclidean_radius_ascent(tup, cfg)
    if tup.d <= 3:
        lam_est = euclidean_radius_lambda(tup, cfg, extra_starts=[est.witness])
        iterations = est.iterations + lam_est.iterations
        if lam_est.value >= est.value:
            est = replace(lam_est, iterations=iterations, method="ascent+lambda")
        else:
            est = replace(est, iterations=iterations, method="ascent+lambda")
    return est


_ORACLE_REFINE_POINTS = 41
_ORACLE_LEVELS = 2


def euclidean_radius_oracle(tup: OperatorTuple, grid_density: int = 1000) -> float:
    """Brute-force w_e for dim == 2 via the sphere parameterisation
    x = (cos theta, e^{i phi} sin theta).

    Exhaustive scan of (theta, phi) in [0, pi/2] x [0, 2 pi) at the given
    density, followed by two local refinement levels around the best cell;
    accuracy ~ 1e-4 at density 1000.  Raises UnsupportedError for other
    dimensions.
    """
    if tup.dim != 2:
        raise UnsupportedError(f"oracle supports dim == 2 only, got dim {tup.dim}")
    if grid_density < 100:
        raise ConfigError(f"grid_density must be >= 100, got {grid_density}")
    nt = grid_density + 1
    npp = 2 * grid_density
    ht = (np.pi / 2) / grid_density
    hp = 2 * np.pi / npp
    best, bt, bp = kernels.sphere_scan_2d(
        tup.stack, 0.0, np.pi / 2, nt, 0.0, 2 * np.pi - hp, npp
    )
    for _ in range(_ORACLE_LEVELS):
        f, bt, bp = kernels.sphere_scan_2d(
            tup.stack,
            bt - ht, bt + ht, _ORACLE_REFINE_POINTS,
            bp - hp, bp + hp, _ORACLE_REFINE_POINTS,
        )
        best = max(best, f)
        ht = 2 * ht / (_ORACLE_REFINE_POINTS - 1)
        hp = 2 * hp / (_ORACLE_REFINE_POINTS - 1)
    return float(np.sqrt(best))

"""Operator matrices of d-tuples and their nonnegative comparison matrices.

An n x n grid of d-tuples assembles into a single d-tuple of (n*m) x (n*m)
block matrices.  Its Euclidean operator radius is dominated by the
numerical radius of a small entrywise-nonnegative real matrix whose
entries combine the blockwise radii --- the comparison matrix.  Six modes
are implemented:

============== ====================================================
THEM1_FG        upper triangular; off-diagonal entries use w_e of the
                combination tuples f^2(|A_ji|) + g^2(|A_ij*|)
COR1_ALPHA      THEM1_FG with the power pair f = lam^alpha
COR2_FG_NORM    like THEM1_FG with tuple operator norms instead of w_e
COR3_ALPHA_NORM COR2_FG_NORM with the power pair
COR4_SYM        symmetrised COR1_ALPHA (half weight off the diagonal)
COR5_SYM_NORM   symmetrised COR3_ALPHA_NORM
============== ====================================================

For entrywise-nonnegative real matrices the numerical radius equals the
top eigenvalue of the symmetrised matrix (B + B^T)/2: symmetrisation
preserves w for such matrices, and for a symmetric nonnegative matrix the
Perron-Frobenius eigenvalue dominates every eigenvalue modulus.

The norm applied to a tuple-valued combination is the tuple operator norm
sqrt(||sum_k X_k^2||) (the entries are Hermitian PSD); this reading makes
the norm modes scale linearly and reduce to the closed-form 2x2 bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigError, PreconditionError, ShapeError
from .matfun import (
    SpectralFunctionPair,
    abs_adjoint_fn,
    abs_fn,
    power_pair,
)
from .radii import OperatorTuple, RadiusConfig, euclidean_radius, tuple_op_norm
from .bounds import BoundReport, RHS_RESTART_FACTOR, _report, _register

__all__ = [
    "MODES",
    "BlockOperatorMatrix",
    "ComparisonMatrix",
    "assemble",
    "block_radius_bound",
    "comparison_matrix",
    "nonneg_numrad",
    "two_by_two_bounds",
]

MODES = (
    "THEM1_FG",
    "COR1_ALPHA",
    "COR2_FG_NORM",
    "COR3_ALPHA_NORM",
    "COR4_SYM",
    "COR5_SYM_NORM",
)
_RADIUS_MODES = {"THEM1_FG", "COR1_ALPHA", "COR4_SYM"}
_SYMMETRIC_MODES = {"COR4_SYM", "COR5_SYM_NORM"}
_FG_MODES = {"THEM1_FG", "COR2_FG_NORM"}


class BlockOperatorMatrix:
    """n x n grid of OperatorTuples sharing d and block dimension m."""

    __slots__ = ("_blocks",)

    def __init__(self, blocks: Sequence[Sequence[OperatorTuple]]):
        rows = [list(row) for row in blocks]
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise ShapeError("blocks must form a non-empty square grid")
        first = rows[0][0]
        if not isinstance(first, OperatorTuple):
            raise ShapeError("grid entries must be OperatorTuples")
        for i, row in enumerate(rows):
            for j, blk in enumerate(row):
                if not isinstance(blk, OperatorTuple):
                    raise ShapeError(f"block ({i}, {j}) is not an OperatorTuple")
                if blk.d != first.d or blk.dim != first.dim:
                    raise ShapeError(
                        f"block ({i}, {j}) has (d={blk.d}, dim={blk.dim}), "
                        f"expected (d={first.d}, dim={first.dim})"
                    )
        self._blocks = rows

    @property
    def n(self) -> int:
        return len(self._blocks)

    @property
    def d(self) -> int:
        return self._blocks[0][0].d

    @property
    def block_dim(self) -> int:
        return self._blocks[0][0].dim

    def block(self, i: int, j: int) -> OperatorTuple:
        return self._blocks[i][j]

    def __repr__(self) -> str:
        return f"BlockOperatorMatrix(n={self.n}, d={self.d}, block_dim={self.block_dim})"


def assemble(bm: BlockOperatorMatrix) -> OperatorTuple:
    """Stack the grid into a d-tuple of (n*m) x (n*m) block matrices,
    the k-th entry being the block matrix of the k-th components."""
    mats = []
    for k in range(bm.d):
        mats.append(np.block([[bm.block(i, j)[k] for j in range(bm.n)] for i in range(bm.n)]))
    return OperatorTuple(mats)


@dataclass(frozen=True)
class ComparisonMatrix:
    """Entrywise-nonnegative real matrix dominating w_e of the assembled
    operator matrix through its numerical radius."""

    n: int
    entries: np.ndarray
    mode: str
    params: dict

    def __post_init__(self):
        entries = np.asarray(self.entries, dtype=np.float64)
        if entries.shape != (self.n, self.n):
            raise ShapeError(f"entries must be ({self.n}, {self.n})")
        if np.any(entries < 0.0):
            raise PreconditionError("comparison-matrix entries must be >= 0")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)


def _combo(p: OperatorTuple, q: OperatorTuple, fg: SpectralFunctionPair) -> OperatorTuple:
    # f^2(|P_k|) + g^2(|Q_k*|), entrywise
    return OperatorTuple(
        [
            abs_fn(p[k], lambda s: np.asarray(fg.f(s)) ** 2)
            + abs_adjoint_fn(q[k], lambda s: np.asarray(fg.g(s)) ** 2)
            for k in range(p.d)
        ]
    )


def comparison_matrix(
    bm: BlockOperatorMatrix,
    mode: str,
    fg: SpectralFunctionPair | None = None,
    alpha: float | None = None,
    cfg: RadiusConfig = RadiusConfig(),
    cache: dict | None = None,
) -> ComparisonMatrix:
    """Build the comparison matrix for the requested mode.

    ``THEM1_FG`` / ``COR2_FG_NORM`` take a function pair ``fg``; the alpha
    modes take ``alpha`` in [0, 1] and use the power pair internally.
    Diagonal entries are always w_e of the diagonal blocks; off-diagonal
    entries combine the two cross blocks as per the mode table, with the
    upper-triangular modes putting zeros below the diagonal and the
    symmetrised modes splitting half the weight on both sides.

    Several modes share entry computations (diagonal radii; the
    symmetrised modes reuse the triangular entries).  Pass one ``cache``
    dict to successive calls on the same block matrix and config to reuse
    them.
    """
    if mode not in MODES:
        raise ConfigError(f"unknown mode {mode!r}; choose one of {MODES}")
    if mode in _FG_MODES:
        if fg is None or alpha is not None:
            raise ConfigError(f"mode {mode} takes fg (and no alpha)")
        params = {"fg": fg.description}
    else:
        if alpha is None or fg is not None:
            raise ConfigError(f"mode {mode} takes alpha (and no fg)")
        fg = power_pair(alpha)
        params = {"alpha": float(alpha)}
    rcfg = RadiusConfig(
        restarts=RHS_RESTART_FACTOR * cfg.restarts,
        max_iters=cfg.max_iters,
        tol=cfg.tol,
        seed=cfg.seed,
    )
    if cache is None:
        cache = {}

    def _we(tup):
        return euclidean_radius(tup, rcfg).value

    def _diag(i):
        key = ("diag", i)
        if key not in cache:
            cache[key] = _we(bm.block(i, i))
        return cache[key]

    def _off(i, j, use_radius):
        key = ("rad" if use_radius else "norm", i, j, fg.description)
        if key not in cache:
            x = _combo(bm.block(j, i), bm.block(i, j), fg)
            y = _combo(bm.block(i, j), bm.block(j, i), fg)
            if use_radius:
                cache[key] = math.sqrt(_we(x) * _we(y))
            else:
                cache[key] = math.sqrt(tuple_op_norm(x) * tuple_op_norm(y))
        return cache[key]

    n = bm.n
    entries = np.zeros((n, n))
    for i in range(n):
        entries[i, i] = _diag(i)
    use_radius = mode in _RADIUS_MODES
    for i in range(n):
        for j in range(i + 1, n):
            e = _off(i, j, use_radius)
            if mode in _SYMMETRIC_MODES:
                entries[i, j] = entries[j, i] = 0.5 * e
            else:
                entries[i, j] = e
    return ComparisonMatrix(n=n, entries=entries, mode=mode, params=params)


def nonneg_numrad(cm: ComparisonMatrix | np.ndarray) -> float:
    """Exact numerical radius of an entrywise-nonnegative real matrix:
    lam_max((B + B^T)/2)."""
    entries = cm.entries if isinstance(cm, ComparisonMatrix) else np.asarray(cm, dtype=np.float64)
    if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
        raise ShapeError(f"expected a square matrix, got shape {entries.shape}")
    if np.any(entries < 0.0):
        raise PreconditionError(
            f"matrix has a negative entry (min {entries.min():.6e})"
        )
    sym = 0.5 * (entries + entries.T)
    return float(np.linalg.eigvalsh(sym)[-1])


def _block_comparison_value(c, p):
    n = p["n"]
    m = np.array([[c[f"a_{i}_{j}"] for j in range(n)] for i in range(n)])
    return float(np.linalg.eigvalsh(0.5 * (m + m.T))[-1])


_register(
    "BLOCK_COMPARISON",
    "lam_max((C + C^T)/2) of the comparison matrix C",
    _block_comparison_value,
)


def block_radius_bound(
    bm: BlockOperatorMatrix,
    mode: str,
    fg: SpectralFunctionPair | None = None,
    alpha: float | None = None,
    cfg: RadiusConfig = RadiusConfig(),
    cache: dict | None = None,
) -> BoundReport:
    """Bound w_e(assemble(bm)) by the numerical radius of the comparison
    matrix; the report's components carry every matrix entry."""
    cm = comparison_matrix(bm, mode, fg=fg, alpha=alpha, cfg=cfg, cache=cache)
    comps = {
        f"a_{i}_{j}": cm.entries[i, j] for i in range(bm.n) for j in range(bm.n)
    }
    params = {"n": bm.n, "d": bm.d, "mode": mode, **cm.params}
    return _report("BLOCK_COMPARISON", params, comps)


_register(
    "COR6",
    "1/2 (w_e(A) + w_e(D) + sqrt((w_e(A) - w_e(D))^2 + beta^2)),"
    " beta = sqrt(w_e(|B|+|C*|) w_e(|C|+|B*|))",
    lambda c, p: 0.5
    * (
        c["we_a"]
        + c["we_d"]
        + math.sqrt((c["we_a"] - c["we_d"]) ** 2 + c["we_left"] * c["we_right"])
    ),
)
_register(
    "COR7",
    "1/2 (w_e(A) + w_e(D) + sqrt((w_e(A) - w_e(D))^2 + gamma^2)),"
    " gamma = (|| |B|+|C*| || * || |C|+|B*| ||)^(1/2)",
    lambda c, p: 0.5
    * (
        c["we_a"]
        + c["we_d"]
        + math.sqrt((c["we_a"] - c["we_d"]) ** 2 + c["norm_left"] * c["norm_right"])
    ),
)


def two_by_two_bounds(
    a: OperatorTuple,
    b: OperatorTuple,
    c: OperatorTuple,
    d: OperatorTuple,
    cfg: RadiusConfig = RadiusConfig(),
) -> list[BoundReport]:
    """Closed-form bounds on w_e of the assembled [[A, B], [C, D]] grid.

    COR6 uses w_e of the modulus combinations |B| + |C*| and |C| + |B*|,
    COR7 their tuple operator norms; both equal the top eigenvalue of the
    corresponding symmetrised 2x2 comparison matrix.
    """
    for other in (b, c, d):
        a._check_same_shape(other)
    rcfg = RadiusConfig(
        restarts=RHS_RESTART_FACTOR * cfg.restarts,
        max_iters=cfg.max_iters,
        tol=cfg.tol,
        seed=cfg.seed,
    )

    def _we(tup):
        return euclidean_radius(tup, rcfg).value

    left = OperatorTuple(
        [abs_fn(b[k], lambda s: s) + abs_adjoint_fn(c[k], lambda s: s) for k in range(b.d)]
    )
    right = OperatorTuple(
        [abs_fn(c[k], lambda s: s) + abs_adjoint_fn(b[k], lambda s: s) for k in range(b.d)]
    )
    we_a, we_d = _we(a), _we(d)
    params = {"d": a.d}
    return [
        _report(
            "COR6",
            params,
            {"we_a": we_a, "we_d": we_d, "we_left": _we(left), "we_right": _we(right)},
        ),
        _report(
            "COR7",
            params,
            {
                "we_a": we_a,
                "we_d": we_d,
                "norm_left": tuple_op_norm(left),
                "norm_right": tuple_op_norm(right),
            },
        ),
    ]

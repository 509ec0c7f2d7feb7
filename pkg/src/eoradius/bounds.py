"""Upper-bound calculators for the Euclidean operator radius.

Each calculator evaluates one closed-form upper bound for w_e of a target
tuple (the tuple itself, an entrywise product, or the off-diagonal block
of a positive 2x2 operator matrix) and returns :class:`BoundReport`
objects.  A report records the named intermediate quantities under
``components`` and obtains ``value`` through a registered formula keyed by
``bound_id``, so every report can be recomputed and audited after the
fact (:func:`recompute_value`).

Any w_e(...) term appearing on a right-hand side is estimated from below
by the sphere optimiser in :mod:`eoradius.radii`.  That only weakens the
computed bound, so a soundness failure in the verification suite always
points at a real bug rather than optimiser noise; to keep the slack small
such terms get ``RHS_RESTART_FACTOR`` times the configured restarts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Callable, Mapping

import numpy as np

from .errors import DomainError, PreconditionError
from .matfun import (
    SpectralFunctionPair,
    abs_adjoint_fn,
    abs_fn,
    hermitian_part,
    op_norm,
    power_pair,
    project_psd,
    spectral_radius_mat,
)
from .radii import OperatorTuple, RadiusConfig, euclidean_radius, tuple_op_norm

__all__ = [
    "BOUND_IDS",
    "BoundReport",
    "RHS_RESTART_FACTOR",
    "abstract_bound",
    "block_dominance_bounds",
    "commuting_fg_bound",
    "fg_polar_bounds",
    "imaginary_combo_bound",
    "imaginary_combo_product_bound",
    "polar_power_bounds",
    "product_bounds",
    "product_quarter_bound",
    "quarter_polar_bound",
    "recompute_value",
    "remark_bound",
    "sandwich",
]

RHS_RESTART_FACTOR = 4

_CHAIN_TOL = 1e-9
_PSD_RTOL = 1e-10
_COMMUTE_RTOL = 1e-8


@dataclass(frozen=True)
class BoundReport:
    """One evaluated upper bound: identity, parameters, value, breakdown."""

    bound_id: str
    params: dict
    value: float
    components: dict
    formula: str


_FORMULAS: dict[str, Callable[[Mapping, Mapping], float]] = {}
_FORMULA_TEXT: dict[str, str] = {}


def _register(bound_id: str, text: str, fn: Callable[[Mapping, Mapping], float]):
    _FORMULAS[bound_id] = fn
    _FORMULA_TEXT[bound_id] = text


def _report(bound_id: str, params: Mapping, components: Mapping) -> BoundReport:
    value = _FORMULAS[bound_id](components, params)
    if not (np.isfinite(value) and value >= 0.0):
        raise ArithmeticError(f"{bound_id} produced invalid value {value}")
    return BoundReport(
        bound_id=bound_id,
        params=dict(params),
        value=float(value),
        components={k: float(v) for k, v in components.items()},
        formula=_FORMULA_TEXT[bound_id],
    )


def recompute_value(report: BoundReport) -> float:
    """Re-derive ``report.value`` from its components (audit hook)."""
    return float(_FORMULAS[report.bound_id](report.components, report.params))


_register(
    "TH1_I",
    "sqrt(1/2 * ||sum_k (A_k^2 + B_k^2)||)",
    lambda c, p: math.sqrt(0.5 * c["norm_sum_squares"]),
)
_register(
    "TH1_II",
    "sqrt(1/2 * ||A|| * ||B|| + sqrt(d)/2 * w_e(AB))",
    lambda c, p: math.sqrt(
        0.5 * c["tuple_norm_a"] * c["tuple_norm_b"]
        + 0.5 * math.sqrt(p["d"]) * c["we_ab"]
    ),
)
_register(
    "TH1_III",
    "sqrt(1/4 * ||sum_k (A_k^2 + B_k^2)|| + sqrt(d)/2 * w_e(AB))",
    lambda c, p: math.sqrt(
        0.25 * c["norm_sum_squares"] + 0.5 * math.sqrt(p["d"]) * c["we_ab"]
    ),
)
_register(
    "COR1_1_I",
    "sqrt(1/2 * ||sum_k (|B_k*|^4 + |C_k|^4)||)",
    lambda c, p: math.sqrt(0.5 * c["norm_sum_fourth"]),
)
_register(
    "COR1_1_II",
    "sqrt(1/2 * ||BB*|| * ||C*C|| + sqrt(d)/2 * w_e(B(CB)*C))",
    lambda c, p: math.sqrt(
        0.5 * c["tuple_norm_bbs"] * c["tuple_norm_csc"]
        + 0.5 * math.sqrt(p["d"]) * c["we_mid"]
    ),
)
_register(
    "COR1_1_III",
    "sqrt(1/4 * ||sum_k (|B_k*|^4 + |C_k|^4)|| + sqrt(d)/2 * w_e(B(CB)*C))",
    lambda c, p: math.sqrt(
        0.25 * c["norm_sum_fourth"] + 0.5 * math.sqrt(p["d"]) * c["we_mid"]
    ),
)
_register(
    "TH2",
    "sqrt(1/2 * ||sum_k (|A_k*|^(4(1-t)) + |A_k|^(4t))||)",
    lambda c, p: math.sqrt(0.5 * c["norm_sum_powers"]),
)
_register(
    "TH3",
    "sqrt(1/2 * sqrt(||sum_k |A_k*|^(4(1-t))||) * sqrt(||sum_k |A_k|^(4t)||)"
    " + sqrt(d)/2 * w_e(|A|^(2t) |A*|^(2(1-t))))",
    lambda c, p: math.sqrt(
        0.5 * math.sqrt(c["norm_adj_powers"]) * math.sqrt(c["norm_abs_powers"])
        + 0.5 * math.sqrt(p["d"]) * c["we_product"]
    ),
)
_register(
    "TH4",
    "sqrt(1/4 * ||sum_k (|A_k*|^(4(1-t)) + |A_k|^(4t))||"
    " + sqrt(d)/2 * w_e(|A|^(2t) |A*|^(2(1-t))))",
    lambda c, p: math.sqrt(
        0.25 * c["norm_sum_powers"] + 0.5 * math.sqrt(p["d"]) * c["we_product"]
    ),
)
_register(
    "TH9_W",
    "1/sqrt(2) * max_k r(C_k) * w_e(f^2(|B|) + i g^2(|B*|))",
    lambda c, p: c["max_spectral_radius"] * c["we_combo"] / math.sqrt(2.0),
)
_register(
    "TH9_NORM",
    "1/sqrt(2) * max_k r(C_k) * sqrt(||sum_k (f^4(|B_k|) + g^4(|B_k*|))||)",
    lambda c, p: c["max_spectral_radius"] * math.sqrt(c["norm_sum_f4g4"]) / math.sqrt(2.0),
)
_register(
    "TH10_W",
    "1/sqrt(2) * max_k ||A_k||^t * w_e(f^2(|A|^(1-t)) + i g^2(|A*|^(1-t)))",
    lambda c, p: c["max_entry_norm_t"] * c["we_combo"] / math.sqrt(2.0),
)
_register(
    "TH10_MAXK",
    "1/sqrt(2) * max_k ||A_k||^t * sqrt(||sum_k (f^4(|A_k|^(1-t)) + g^4(|A_k*|^(1-t)))||)",
    lambda c, p: c["max_entry_norm_t"] * math.sqrt(c["norm_sum_f4g4"]) / math.sqrt(2.0),
)
_register(
    "TH10_NORM",
    "1/sqrt(2) * ||A||^t * sqrt(||sum_k (f^4(|A_k|^(1-t)) + g^4(|A_k*|^(1-t)))||)",
    lambda c, p: c["tuple_norm_t"] * math.sqrt(c["norm_sum_f4g4"]) / math.sqrt(2.0),
)
for _rid, _tid in (("REMARK_W", "TH10_W"), ("REMARK_MAXK", "TH10_MAXK"), ("REMARK_NORM", "TH10_NORM")):
    _register(_rid, _FORMULA_TEXT[_tid] + "  [f = lam^alpha, g = lam^(1-alpha)]", _FORMULAS[_tid])
_register(
    "TH7",
    "1/sqrt(2) * w_e(|C|^2 + i |B*|^2)",
    lambda c, p: c["we_combo"] / math.sqrt(2.0),
)
_register(
    "TH8_W",
    "1/sqrt(2) * w_e(|A|^(2t) + i |A*|^(2(1-t)))",
    lambda c, p: c["we_combo"] / math.sqrt(2.0),
)
_register(
    "TH8_NORM",
    "1/sqrt(2) * sqrt(||sum_k (|A_k*|^(4(1-t)) + |A_k|^(4t))||)",
    lambda c, p: math.sqrt(0.5 * c["norm_sum_powers"]),
)
_register(
    "TH15",
    "sqrt(d)/4 * w_e(|B| + |C*|) * w_e(|C| + |B*|)",
    lambda c, p: 0.25 * math.sqrt(p["d"]) * c["we_left"] * c["we_right"],
)
_register(
    "THEO1",
    "sqrt(d)/4 * w_e(|A|^(1-t) + |A|^t) * w_e(|A|^t + |A*|^(1-t))",
    lambda c, p: 0.25 * math.sqrt(p["d"]) * c["we_left"] * c["we_right"],
)


def _check_t(t: float):
    if not (np.isfinite(t) and 0.0 <= t <= 1.0):
        raise DomainError(f"t must lie in [0, 1], got {t}")


def _rhs_cfg(cfg: RadiusConfig) -> RadiusConfig:
    return replace(cfg, restarts=RHS_RESTART_FACTOR * cfg.restarts)


def _we(tup: OperatorTuple, cfg: RadiusConfig) -> float:
    return euclidean_radius(tup, _rhs_cfg(cfg)).value


def _assert_chain(reports: list[BoundReport]):
    for lo, hi in zip(reports, reports[1:]):
        assert lo.value <= hi.value + _CHAIN_TOL * max(1.0, hi.value), (
            f"chain violated: {lo.bound_id}={lo.value!r} > {hi.bound_id}={hi.value!r}"
        )


def sandwich(tup: OperatorTuple) -> tuple[float, float]:
    """The two-sided norm envelope of w_e:
    ``||A|| / (2 sqrt(d)) <= w_e(A) <= ||A||``.  Returns (lower, upper)."""
    norm = tuple_op_norm(tup)
    return norm / (2.0 * math.sqrt(tup.d)), norm


def _check_positive_block(a: OperatorTuple, b: OperatorTuple, c: OperatorTuple):
    m = a.dim
    for k in range(a.d):
        block = np.zeros((2 * m, 2 * m), dtype=np.complex128)
        block[:m, :m] = a[k]
        block[:m, m:] = c[k].conj().T
        block[m:, :m] = c[k]
        block[m:, m:] = b[k]
        scale = max(op_norm(block), 1e-300)
        lo = float(np.linalg.eigvalsh(hermitian_part(block))[0])
        if lo < -_PSD_RTOL * scale:
            raise PreconditionError(
                f"2x2 block for k={k} is not positive: min eigenvalue {lo:.6e}"
            )


def block_dominance_bounds(
    a: OperatorTuple,
    b: OperatorTuple,
    c: OperatorTuple,
    cfg: RadiusConfig = RadiusConfig(),
) -> list[BoundReport]:
    """Three bounds on w_e(C) from positivity of the operator matrix
    [[A, C*], [C, B]] with A, B entrywise positive.

    (i)   sqrt(1/2 ||sum (A_k^2 + B_k^2)||)
    (ii)  sqrt(1/2 ||A|| ||B|| + sqrt(d)/2 w_e(AB))
    (iii) sqrt(1/4 ||sum (A_k^2 + B_k^2)|| + sqrt(d)/2 w_e(AB))

    Positivity is checked entrywise (min eigenvalue >= -1e-10 * scale,
    naming the offending index on failure), then the slightly negative
    eigenvalues are clamped to zero before use.
    """
    a._check_same_shape(b)
    a._check_same_shape(c)
    proj_a, proj_b = [], []
    for label, src, dst in (("A", a, proj_a), ("B", b, proj_b)):
        for k in range(src.d):
            try:
                dst.append(project_psd(src[k], _PSD_RTOL, name=f"{label}_{k}"))
            except PreconditionError as exc:
                raise PreconditionError(f"tuple {label}, entry k={k}: {exc}") from None
    _check_positive_block(a, b, c)
    a, b = OperatorTuple(proj_a), OperatorTuple(proj_b)
    squares = np.einsum("kij,kjl->kil", a.stack, a.stack) + np.einsum(
        "kij,kjl->kil", b.stack, b.stack
    )
    norm_sum_squares = op_norm(hermitian_part(squares.sum(axis=0)))
    we_ab = _we(a @ b, cfg)
    params = {"d": a.d}
    comps = {
        "norm_sum_squares": norm_sum_squares,
        "tuple_norm_a": tuple_op_norm(a),
        "tuple_norm_b": tuple_op_norm(b),
        "we_ab": we_ab,
    }
    return [
        _report("TH1_I", params, {"norm_sum_squares": norm_sum_squares}),
        _report("TH1_II", params, {k: comps[k] for k in ("tuple_norm_a", "tuple_norm_b", "we_ab")}),
        _report("TH1_III", params, {k: comps[k] for k in ("norm_sum_squares", "we_ab")}),
    ]


def product_bounds(
    b: OperatorTuple, c: OperatorTuple, cfg: RadiusConfig = RadiusConfig()
) -> list[BoundReport]:
    """Three bounds on w_e(BC) obtained from :func:`block_dominance_bounds`
    applied to the positive operator matrix [[BB*, BC], [C*B*, C*C]]."""
    b._check_same_shape(c)
    fourth = np.stack(
        [abs_adjoint_fn(b[k], lambda s: s**4) + abs_fn(c[k], lambda s: s**4) for k in range(b.d)]
    )
    norm_sum_fourth = op_norm(hermitian_part(fourth.sum(axis=0)))
    bbs = OperatorTuple([b[k] @ b[k].conj().T for k in range(b.d)])
    csc = OperatorTuple([c[k].conj().T @ c[k] for k in range(c.d)])
    mid = OperatorTuple(
        [b[k] @ (c[k] @ b[k]).conj().T @ c[k] for k in range(b.d)]
    )
    we_mid = _we(mid, cfg)
    params = {"d": b.d}
    return [
        _report("COR1_1_I", params, {"norm_sum_fourth": norm_sum_fourth}),
        _report(
            "COR1_1_II",
            params,
            {
                "tuple_norm_bbs": tuple_op_norm(bbs),
                "tuple_norm_csc": tuple_op_norm(csc),
                "we_mid": we_mid,
            },
        ),
        _report(
            "COR1_1_III",
            params,
            {"norm_sum_fourth": norm_sum_fourth, "we_mid": we_mid},
        ),
    ]


def polar_power_bounds(
    a: OperatorTuple, t: float, cfg: RadiusConfig = RadiusConfig()
) -> list[BoundReport]:
    """Three bounds on w_e(A) from the polar decomposition A_k = U_k |A_k|,
    parameterised by t in [0, 1] (exponents use the 0**0 == 1 convention).

    TH2: sqrt(1/2 ||sum (|A_k*|^(4(1-t)) + |A_k|^(4t))||)
    TH3: sqrt(1/2 sqrt(||sum |A_k*|^(4(1-t))||) sqrt(||sum |A_k|^(4t)||)
         + sqrt(d)/2 w_e(|A|^(2t) |A*|^(2(1-t))))
    TH4: the quarter variant of TH2 plus the same w_e term.
    """
    _check_t(t)
    adj4 = np.stack([abs_adjoint_fn(m, lambda s: np.power(s, 4 * (1 - t))) for m in a])
    abs4 = np.stack([abs_fn(m, lambda s: np.power(s, 4 * t)) for m in a])
    norm_adj = op_norm(hermitian_part(adj4.sum(axis=0)))
    norm_abs = op_norm(hermitian_part(abs4.sum(axis=0)))
    norm_sum = op_norm(hermitian_part((adj4 + abs4).sum(axis=0)))
    prod = OperatorTuple(
        [
            abs_fn(m, lambda s: np.power(s, 2 * t))
            @ abs_adjoint_fn(m, lambda s: np.power(s, 2 * (1 - t)))
            for m in a
        ]
    )
    we_product = _we(prod, cfg)
    params = {"d": a.d, "t": float(t)}
    return [
        _report("TH2", params, {"norm_sum_powers": norm_sum}),
        _report(
            "TH3",
            params,
            {
                "norm_adj_powers": norm_adj,
                "norm_abs_powers": norm_abs,
                "we_product": we_product,
            },
        ),
        _report(
            "TH4",
            params,
            {"norm_sum_powers": norm_sum, "we_product": we_product},
        ),
    ]


def _check_commuting(b: OperatorTuple, c: OperatorTuple):
    for k in range(b.d):
        abs_b = abs_fn(b[k], lambda s: s)
        resid = float(np.linalg.norm(abs_b @ c[k] - c[k].conj().T @ abs_b, 2))
        scale = max(op_norm(abs_b) * op_norm(c[k]), 1e-300)
        if resid > _COMMUTE_RTOL * scale:
            raise PreconditionError(
                f"|B_k| C_k != C_k* |B_k| for k={k}: residual norm {resid:.6e}"
                f" (scale {scale:.3e})"
            )


def commuting_fg_bound(
    b: OperatorTuple,
    c: OperatorTuple,
    fg: SpectralFunctionPair,
    cfg: RadiusConfig = RadiusConfig(),
) -> list[BoundReport]:
    """Chained bounds on w_e(BC) under the intertwining hypothesis
    |B_k| C_k = C_k* |B_k| (checked within 1e-8 relative residual):

    TH9_W:    1/sqrt(2) max_k r(C_k) w_e(f^2(|B|) + i g^2(|B*|))
    TH9_NORM: 1/sqrt(2) max_k r(C_k) sqrt(||sum (f^4(|B_k|) + g^4(|B_k*|))||)

    The first is <= the second; the pair is returned in that order and the
    ordering is asserted.
    """
    b._check_same_shape(c)
    _check_commuting(b, c)
    rmax = max(spectral_radius_mat(c[k]) for k in range(c.d))
    combo = OperatorTuple(
        [
            abs_fn(b[k], lambda s: np.asarray(fg.f(s)) ** 2)
            + 1j * abs_adjoint_fn(b[k], lambda s: np.asarray(fg.g(s)) ** 2)
            for k in range(b.d)
        ]
    )
    f4g4 = np.stack(
        [
            abs_fn(b[k], lambda s: np.asarray(fg.f(s)) ** 4)
            + abs_adjoint_fn(b[k], lambda s: np.asarray(fg.g(s)) ** 4)
            for k in range(b.d)
        ]
    )
    comps = {
        "max_spectral_radius": rmax,
        "we_combo": _we(combo, cfg),
        "norm_sum_f4g4": op_norm(hermitian_part(f4g4.sum(axis=0))),
    }
    params = {"d": b.d, "fg": fg.description}
    reports = [
        _report("TH9_W", params, {k: comps[k] for k in ("max_spectral_radius", "we_combo")}),
        _report("TH9_NORM", params, {k: comps[k] for k in ("max_spectral_radius", "norm_sum_f4g4")}),
    ]
    _assert_chain(reports)
    return reports


def _fg_polar_reports(
    a: OperatorTuple,
    t: float,
    fg: SpectralFunctionPair,
    cfg: RadiusConfig,
    ids: tuple[str, str, str],
    params: dict,
) -> list[BoundReport]:
    combo = OperatorTuple(
        [
            abs_fn(m, lambda s: np.asarray(fg.f(np.power(s, 1 - t))) ** 2)
            + 1j * abs_adjoint_fn(m, lambda s: np.asarray(fg.g(np.power(s, 1 - t))) ** 2)
            for m in a
        ]
    )
    f4g4 = np.stack(
        [
            abs_fn(m, lambda s: np.asarray(fg.f(np.power(s, 1 - t))) ** 4)
            + abs_adjoint_fn(m, lambda s: np.asarray(fg.g(np.power(s, 1 - t))) ** 4)
            for m in a
        ]
    )
    max_norm = max(op_norm(m) for m in a)
    comps = {
        "max_entry_norm_t": max_norm**t,
        "tuple_norm_t": tuple_op_norm(a) ** t,
        "we_combo": _we(combo, cfg),
        "norm_sum_f4g4": op_norm(hermitian_part(f4g4.sum(axis=0))),
    }
    reports = [
        _report(ids[0], params, {k: comps[k] for k in ("max_entry_norm_t", "we_combo")}),
        _report(ids[1], params, {k: comps[k] for k in ("max_entry_norm_t", "norm_sum_f4g4")}),
        _report(ids[2], params, {k: comps[k] for k in ("tuple_norm_t", "norm_sum_f4g4")}),
    ]
    _assert_chain(reports)
    return reports


def fg_polar_bounds(
    a: OperatorTuple,
    t: float,
    fg: SpectralFunctionPair,
    cfg: RadiusConfig = RadiusConfig(),
) -> list[BoundReport]:
    """Non-decreasing chain of three bounds on w_e(A) combining the polar
    decomposition with a spectral function pair; see the TH10_* formulas.
    """
    _check_t(t)
    params = {"d": a.d, "t": float(t), "fg": fg.description}
    return _fg_polar_reports(a, t, fg, cfg, ("TH10_W", "TH10_MAXK", "TH10_NORM"), params)


def remark_bound(
    a: OperatorTuple,
    alpha: float,
    t: float,
    cfg: RadiusConfig = RadiusConfig(),
) -> list[BoundReport]:
    """:func:`fg_polar_bounds` specialised to the power pair
    f = lam^alpha, g = lam^(1-alpha); reported under REMARK_* ids with the
    (alpha, t) parameters recorded."""
    _check_t(t)
    fg = power_pair(alpha)  # validates alpha
    params = {"d": a.d, "alpha": float(alpha), "t": float(t)}
    return _fg_polar_reports(a, t, fg, cfg, ("REMARK_W", "REMARK_MAXK", "REMARK_NORM"), params)


def abstract_bound(a: OperatorTuple, cfg: RadiusConfig = RadiusConfig()) -> BoundReport:
    """The fully specialised closed-form bound (alpha = t = 1/2):
    ``w_e(A) <= 1/sqrt(2) ||A||^(1/2) sqrt(||sum_k (|A_k| + |A_k*|)||)``."""
    return remark_bound(a, 0.5, 0.5, cfg)[2]


def imaginary_combo_product_bound(
    b: OperatorTuple, c: OperatorTuple, cfg: RadiusConfig = RadiusConfig()
) -> BoundReport:
    """w_e(BC) <= 1/sqrt(2) w_e(|C|^2 + i |B*|^2)   (TH7)."""
    b._check_same_shape(c)
    combo = OperatorTuple(
        [
            abs_fn(c[k], lambda s: s**2) + 1j * abs_adjoint_fn(b[k], lambda s: s**2)
            for k in range(b.d)
        ]
    )
    return _report("TH7", {"d": b.d}, {"we_combo": _we(combo, cfg)})


def imaginary_combo_bound(
    a: OperatorTuple, t: float, cfg: RadiusConfig = RadiusConfig()
) -> list[BoundReport]:
    """Chained bounds on w_e(A) for t in [0, 1]:

    TH8_W:    1/sqrt(2) w_e(|A|^(2t) + i |A*|^(2(1-t)))
    TH8_NORM: 1/sqrt(2) sqrt(||sum (|A_k*|^(4(1-t)) + |A_k|^(4t))||)
    """
    _check_t(t)
    combo = OperatorTuple(
        [
            abs_fn(m, lambda s: np.power(s, 2 * t))
            + 1j * abs_adjoint_fn(m, lambda s: np.power(s, 2 * (1 - t)))
            for m in a
        ]
    )
    sums = np.stack(
        [
            abs_adjoint_fn(m, lambda s: np.power(s, 4 * (1 - t)))
            + abs_fn(m, lambda s: np.power(s, 4 * t))
            for m in a
        ]
    )
    params = {"d": a.d, "t": float(t)}
    reports = [
        _report("TH8_W", params, {"we_combo": _we(combo, cfg)}),
        _report(
            "TH8_NORM",
            params,
            {"norm_sum_powers": op_norm(hermitian_part(sums.sum(axis=0)))},
        ),
    ]
    _assert_chain(reports)
    return reports


def product_quarter_bound(
    b: OperatorTuple, c: OperatorTuple, cfg: RadiusConfig = RadiusConfig()
) -> BoundReport:
    """w_e(BC) <= sqrt(d)/4 w_e(|B| + |C*|) w_e(|C| + |B*|)   (TH15)."""
    b._check_same_shape(c)
    left = OperatorTuple(
        [abs_fn(b[k], lambda s: s) + abs_adjoint_fn(c[k], lambda s: s) for k in range(b.d)]
    )
    right = OperatorTuple(
        [abs_fn(c[k], lambda s: s) + abs_adjoint_fn(b[k], lambda s: s) for k in range(b.d)]
    )
    return _report(
        "TH15",
        {"d": b.d},
        {"we_left": _we(left, cfg), "we_right": _we(right, cfg)},
    )


def quarter_polar_bound(
    a: OperatorTuple, t: float, cfg: RadiusConfig = RadiusConfig()
) -> BoundReport:
    """w_e(A) <= sqrt(d)/4 w_e(|A|^(1-t) + |A|^t) w_e(|A|^t + |A*|^(1-t))
    (THEO1), for t in [0, 1]."""
    _check_t(t)
    left = OperatorTuple(
        [
            abs_fn(m, lambda s: np.power(s, 1 - t) + np.power(s, t))
            for m in a
        ]
    )
    right = OperatorTuple(
        [
            abs_fn(m, lambda s: np.power(s, t))
            + abs_adjoint_fn(m, lambda s: np.power(s, 1 - t))
            for m in a
        ]
    )
    return _report(
        "THEO1",
        {"d": a.d, "t": float(t)},
        {"we_left": _we(left, cfg), "we_right": _we(right, cfg)},
    )


BOUND_IDS = tuple(sorted(_FORMULAS))

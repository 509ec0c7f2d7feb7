"""Random-instance generators, inequality suites and tightness reporting.

Every suite follows one policy, stated here once and echoed in report
headers (:data:`POLICY`): left-hand sides are certified lower bounds
attained at explicit unit vectors, right-hand sides are exact or
over-estimated quantities.  The asymmetry means a failing record cannot
be optimiser noise; it is treated as an implementation bug and the
reproducing seed is part of the record.

Determinism: the per-trial seed is a stable hash of
(master seed, family name, trial index); generators, optimiser restarts
and record ordering derive from it, so identical configurations produce
identical record sets regardless of execution order.
"""

from __future__ import annotations

import hashlib
import math
import statistics
from dataclasses import dataclass, field, replace
from typing import Callable, Iterable, Sequence

import numpy as np

from . import blockmat, bounds
from .errors import ConfigError, DomainError
from .matfun import (
    abs_adjoint_fn,
    abs_fn,
    hermitian_part,
    power_pair,
    project_psd,
    spectral_radius_mat,
)
from .radii import OperatorTuple, RadiusConfig, euclidean_radius

__all__ = [
    "FAMILIES",
    "GENERATOR_KINDS",
    "GeneratorSpec",
    "LEMMA_IDS",
    "POLICY",
    "SUITES",
    "SuiteConfig",
    "VerificationRecord",
    "check_lemmas",
    "derive_seed",
    "generate",
    "run_suite",
    "tightness_report",
]

POLICY = (
    "Left-hand sides are certified lower bounds attained at explicit unit "
    "vectors; right-hand sides are exact or over-estimated. A failing "
    "record therefore indicates an implementation bug, not optimiser noise."
)

PASS_RTOL = 1e-8

GENERATOR_KINDS = (
    "GINIBRE",
    "HERMITIAN",
    "PSD",
    "UNITARY_HAAR",
    "COMMUTING_PAIR",
    "POSITIVE_BLOCK",
    "TUPLE",
    "BLOCK_MATRIX",
)

LEMMA_IDS = ("MCCARTHY", "BUZANO", "BOHR", "BLOCK_SCHWARZ", "MIXED_SCHWARZ")


def derive_seed(*parts) -> int:
    """Stable 63-bit seed from the string forms of ``parts``."""
    text = "/".join(str(p) for p in parts)
    digest = hashlib.blake2s(text.encode()).digest()[:8]
    return int.from_bytes(digest, "little") >> 1


def _instance_digest(arrays: Iterable[np.ndarray]) -> str:
    h = hashlib.blake2s()
    for a in arrays:
        a = np.ascontiguousarray(a)
        h.update(str(a.shape).encode())
        h.update(a.tobytes())
    return h.hexdigest()[:16]


@dataclass(frozen=True)
class GeneratorSpec:
    """What to draw: ensemble kind, sizes, scale and seed."""

    kind: str
    dim: int = 2
    d: int = 1
    n: int = 1
    scale: float = 1.0
    seed: int = 0

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ConfigError(f"unknown generator kind {self.kind!r}")
        if self.dim < 1 or self.d < 1 or self.n < 1:
            raise ConfigError("dim, d and n must all be >= 1")
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise ConfigError(f"scale must be positive, got {self.scale}")


def _ginibre(rng, dim, scale):
    return scale * (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2.0)


def generate(spec: GeneratorSpec):
    """Draw the instance described by ``spec``; deterministic in the seed.

    Returns a matrix for the scalar kinds, an OperatorTuple for TUPLE, a
    pair of tuples for COMMUTING_PAIR, an (A, B, C) triple satisfying the
    positive-block hypothesis for POSITIVE_BLOCK, and a
    BlockOperatorMatrix for BLOCK_MATRIX.
    """
    rng = np.random.default_rng(spec.seed)
    kind = spec.kind
    if kind == "GINIBRE":
        return _ginibre(rng, spec.dim, spec.scale)
    if kind == "HERMITIAN":
        return hermitian_part(_ginibre(rng, spec.dim, spec.scale))
    if kind == "PSD":
        g = _ginibre(rng, spec.dim, spec.scale)
        return project_psd(g @ g.conj().T)
    if kind == "UNITARY_HAAR":
        q, r = np.linalg.qr(_ginibre(rng, spec.dim, 1.0))
        ph = np.diagonal(r).copy()
        ph[ph == 0] = 1.0
        return q * (ph / np.abs(ph))
    if kind == "TUPLE":
        return OperatorTuple([_ginibre(rng, spec.dim, spec.scale) for _ in range(spec.d)])
    if kind == "COMMUTING_PAIR":
        # C_k = p(|B_k|) for a random real cubic p: Hermitian and commuting
        # with |B_k| by construction, so |B_k| C_k = C_k* |B_k| exactly.
        bs, cs = [], []
        for _ in range(spec.d):
            b = _ginibre(rng, spec.dim, spec.scale)
            coeff = rng.uniform(-1.0, 1.0, size=4)
            c = abs_fn(b, lambda s: coeff[0] + coeff[1] * s + coeff[2] * s**2 + coeff[3] * s**3)
            bs.append(b)
            cs.append(c)
        return OperatorTuple(bs), OperatorTuple(cs)
    if kind == "POSITIVE_BLOCK":
        # [[X X*, X Y], [Y* X*, Y* Y]] = [X; Y*] [X; Y*]^* is positive,
        # giving A = X X*, B = Y* Y, C = Y* X*.
        a, b, c = [], [], []
        for _ in range(spec.d):
            x = _ginibre(rng, spec.dim, spec.scale)
            y = _ginibre(rng, spec.dim, spec.scale)
            a.append(x @ x.conj().T)
            b.append(y.conj().T @ y)
            c.append(y.conj().T @ x.conj().T)
        return OperatorTuple(a), OperatorTuple(b), OperatorTuple(c)
    if kind == "BLOCK_MATRIX":
        rows = [
            [
                OperatorTuple([_ginibre(rng, spec.dim, spec.scale) for _ in range(spec.d)])
                for _ in range(spec.n)
            ]
            for _ in range(spec.n)
        ]
        return blockmat.BlockOperatorMatrix(rows)
    raise ConfigError(f"unknown generator kind {kind!r}")  # pragma: no cover


@dataclass(frozen=True)
class VerificationRecord:
    """One checked inequality instance: lhs <= rhs up to relative slack."""

    bound_id: str
    trial_seed: int
    lhs: float
    rhs: float
    slack: float
    passed: bool
    instance_digest: str


def _record(bound_id: str, trial_seed: int, lhs: float, rhs: float, digest: str) -> VerificationRecord:
    slack = rhs - lhs
    return VerificationRecord(
        bound_id=bound_id,
        trial_seed=trial_seed,
        lhs=float(lhs),
        rhs=float(rhs),
        slack=float(slack),
        passed=bool(slack >= -PASS_RTOL * max(1.0, rhs)),
        instance_digest=digest,
    )


@dataclass(frozen=True)
class SuiteConfig:
    """Configuration of a verification run.

    ``workers`` > 1 spreads trials over processes; per-trial seeds make
    the merged, sorted record set identical to a serial run.
    """

    suite: str = "all"
    trials: int = 100
    master_seed: int = 42
    dim_range: tuple[int, int] = (2, 5)
    d_max: int = 3
    scale: float = 1.0
    workers: int = 1
    radius: RadiusConfig = field(
        default_factory=lambda: RadiusConfig(restarts=4, max_iters=150, tol=1e-9)
    )

    def __post_init__(self):
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; choose one of {tuple(SUITES)}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        lo, hi = self.dim_range
        if lo < 2 or hi < lo:
            raise ConfigError(f"invalid dim_range {self.dim_range}")
        if self.d_max < 1:
            raise ConfigError(f"d_max must be >= 1, got {self.d_max}")
        if not (np.isfinite(self.scale) and self.scale > 0):
            raise ConfigError(f"scale must be positive, got {self.scale}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")


def _unit(rng, n: int) -> np.ndarray:
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    nrm = np.linalg.norm(x)
    if nrm == 0.0:
        x = np.zeros(n, complex)
        x[0] = 1.0
        return x
    return x / nrm


def _quad(mat: np.ndarray, x: np.ndarray) -> complex:
    return complex(np.vdot(x, mat @ x))


# --------------------------------------------------------------------------
# lemma suite


def _lemma_mccarthy(rng, seed: int) -> VerificationRecord:
    dim = int(rng.integers(2, 7))
    g = _ginibre(rng, dim, 1.0)
    a = project_psd(g @ g.conj().T)
    x = _unit(rng, dim)
    p = float(rng.choice([1.5, 2.0, 3.0]))
    base = max(_quad(a, x).real, 0.0)
    lhs = base**p
    ap = abs_fn(a, lambda s: np.power(s, p))
    rhs = max(_quad(ap, x).real, 0.0)
    return _record("MCCARTHY", seed, lhs, rhs, _instance_digest([a, x, np.array([p])]))


def _lemma_buzano(rng, seed: int) -> VerificationRecord:
    dim = int(rng.integers(2, 7))
    x = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    y = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    z = _unit(rng, dim)
    lhs = abs(np.vdot(z, x) * np.vdot(y, z))
    rhs = 0.5 * (np.linalg.norm(x) * np.linalg.norm(y) + abs(np.vdot(y, x)))
    return _record("BUZANO", seed, lhs, rhs, _instance_digest([x, y, z]))


def _lemma_bohr(rng, seed: int) -> VerificationRecord:
    n = int(rng.integers(1, 7))
    a = np.abs(rng.standard_normal(n))
    p = float(rng.choice([1.5, 2.0, 3.0]))
    lhs = float(a.sum() ** p)
    rhs = float(n ** (p - 1) * np.sum(a**p))
    return _record("BOHR", seed, lhs, rhs, _instance_digest([a, np.array([p])]))


def _lemma_block_schwarz(rng, seed: int) -> VerificationRecord:
    d = int(rng.integers(1, 4))
    dim = int(rng.integers(2, 6))
    a, b, c = generate(
        GeneratorSpec("POSITIVE_BLOCK", dim=dim, d=d, seed=derive_seed(seed, "block"))
    )
    x = _unit(rng, dim)
    y = _unit(rng, dim)
    lhs = sum(abs(np.vdot(y, c[k] @ x)) ** 2 for k in range(d))
    rhs = sum(
        max(_quad(a[k], x).real, 0.0) * max(_quad(b[k], y).real, 0.0) for k in range(d)
    )
    return _record("BLOCK_SCHWARZ", seed, lhs, rhs, _instance_digest([a.stack, b.stack, c.stack, x, y]))


def _lemma_mixed_schwarz(rng, seed: int) -> VerificationRecord:
    d = int(rng.integers(1, 4))
    dim = int(rng.integers(2, 6))
    b, c = generate(
        GeneratorSpec("COMMUTING_PAIR", dim=dim, d=d, seed=derive_seed(seed, "pair"))
    )
    fg = power_pair(float(rng.uniform(0.0, 1.0)))
    x = _unit(rng, dim)
    y = _unit(rng, dim)
    worst = None
    for k in range(d):
        lhs = abs(np.vdot(y, (b[k] @ c[k]) @ x))
        fb = abs_fn(b[k], fg.f)
        gb = abs_adjoint_fn(b[k], fg.g)
        rhs = spectral_radius_mat(c[k]) * np.linalg.norm(fb @ x) * np.linalg.norm(gb @ y)
        if worst is None or (rhs - lhs) < (worst[1] - worst[0]):
            worst = (lhs, rhs)
    return _record(
        "MIXED_SCHWARZ", seed, worst[0], worst[1],
        _instance_digest([b.stack, c.stack, x, y]),
    )


_LEMMA_FNS: dict[str, Callable] = {
    "MCCARTHY": _lemma_mccarthy,
    "BUZANO": _lemma_buzano,
    "BOHR": _lemma_bohr,
    "BLOCK_SCHWARZ": _lemma_block_schwarz,
    "MIXED_SCHWARZ": _lemma_mixed_schwarz,
}


def check_lemmas(trials: int, seed: int = 42) -> list[VerificationRecord]:
    """Run the five scalar/vector lemma checks, one record per lemma per
    trial (fresh random vectors each trial)."""
    if trials < 1:
        raise ConfigError(f"trials must be >= 1, got {trials}")
    records = []
    for lemma, fn in _LEMMA_FNS.items():
        for trial in range(trials):
            tseed = derive_seed(seed, lemma, trial)
            rng = np.random.default_rng(tseed)
            records.append(fn(rng, tseed))
    records.sort(key=lambda r: (r.bound_id, r.trial_seed))
    return records


# --------------------------------------------------------------------------
# bound families


def _draw_t(rng) -> float:
    u = rng.random()
    if u < 0.05:
        return 0.0
    if u > 0.95:
        return 1.0
    return float(rng.random())


def _lhs_cfg(cfg: SuiteConfig, tseed: int) -> RadiusConfig:
    return replace(cfg.radius, restarts=2 * cfg.radius.restarts, seed=derive_seed(tseed, "lhs"))


def _bound_cfg(cfg: SuiteConfig, tseed: int) -> RadiusConfig:
    return replace(cfg.radius, seed=derive_seed(tseed, "rhs"))


def _draw_tuple(rng, cfg: SuiteConfig, tseed: int, tag: str) -> OperatorTuple:
    lo, hi = cfg.dim_range
    dim = int(rng.integers(lo, hi + 1))
    d = int(rng.integers(1, cfg.d_max + 1))
    return generate(
        GeneratorSpec("TUPLE", dim=dim, d=d, scale=cfg.scale, seed=derive_seed(tseed, tag))
    )


def _family_tuple(cfg: SuiteConfig, tseed: int) -> list[VerificationRecord]:
    rng = np.random.default_rng(tseed)
    a = _draw_tuple(rng, cfg, tseed, "A")
    t = _draw_t(rng)
    alpha = _draw_t(rng)
    digest = _instance_digest([a.stack, np.array([t, alpha])])
    lhs = euclidean_radius(a, _lhs_cfg(cfg, tseed)).value
    bcfg = _bound_cfg(cfg, tseed)
    lower, upper = bounds.sandwich(a)
    out = [
        _record("SANDWICH", tseed, lhs, upper, digest),
        _record("SANDWICH_LOWER", tseed, lower, lhs, digest),
    ]
    for rep in bounds.polar_power_bounds(a, t, bcfg):
        out.append(_record(rep.bound_id, tseed, lhs, rep.value, digest))
    for rep in bounds.imaginary_combo_bound(a, t, bcfg):
        out.append(_record(rep.bound_id, tseed, lhs, rep.value, digest))
    for rep in bounds.fg_polar_bounds(a, t, power_pair(alpha), bcfg):
        out.append(_record(rep.bound_id, tseed, lhs, rep.value, digest))
    for rep in bounds.remark_bound(a, alpha, 0.5, bcfg):
        out.append(_record(rep.bound_id, tseed, lhs, rep.value, digest))
    rep = bounds.quarter_polar_bound(a, t, bcfg)
    out.append(_record(rep.bound_id, tseed, lhs, rep.value, digest))
    return out


def _family_product(cfg: SuiteConfig, tseed: int) -> list[VerificationRecord]:
    rng = np.random.default_rng(tseed)
    b = _draw_tuple(rng, cfg, tseed, "B")
    c = generate(
        GeneratorSpec("TUPLE", dim=b.dim, d=b.d, scale=cfg.scale, seed=derive_seed(tseed, "C"))
    )
    digest = _instance_digest([b.stack, c.stack])
    lhs = euclidean_radius(b @ c, _lhs_cfg(cfg, tseed)).value
    bcfg = _bound_cfg(cfg, tseed)
    out = []
    for rep in bounds.product_bounds(b, c, bcfg):
        out.append(_record(rep.bound_id, tseed, lhs, rep.value, digest))
    rep = bounds.imaginary_combo_product_bound(b, c, bcfg)
    out.append(_record(rep.bound_id, tseed, lhs, rep.value, digest))
    rep = bounds.product_quarter_bound(b, c, bcfg)
    out.append(_record(rep.bound_id, tseed, lhs, rep.value, digest))
    return out


def _family_positive_block(cfg: SuiteConfig, tseed: int) -> list[VerificationRecord]:
    rng = np.random.default_rng(tseed)
    lo, hi = cfg.dim_range
    dim = int(rng.integers(lo, hi + 1))
    d = int(rng.integers(1, cfg.d_max + 1))
    a, b, c = generate(
        GeneratorSpec("POSITIVE_BLOCK", dim=dim, d=d, scale=cfg.scale, seed=derive_seed(tseed, "blk"))
    )
    digest = _instance_digest([a.stack, b.stack, c.stack])
    lhs = euclidean_radius(c, _lhs_cfg(cfg, tseed)).value
    return [
        _record(rep.bound_id, tseed, lhs, rep.value, digest)
        for rep in bounds.block_dominance_bounds(a, b, c, _bound_cfg(cfg, tseed))
    ]


def _family_commuting(cfg: SuiteConfig, tseed: int) -> list[VerificationRecord]:
    rng = np.random.default_rng(tseed)
    lo, hi = cfg.dim_range
    dim = int(rng.integers(lo, hi + 1))
    d = int(rng.integers(1, cfg.d_max + 1))
    b, c = generate(
        GeneratorSpec("COMMUTING_PAIR", dim=dim, d=d, scale=cfg.scale, seed=derive_seed(tseed, "pair"))
    )
    fg = power_pair(_draw_t(rng))
    digest = _instance_digest([b.stack, c.stack])
    lhs = euclidean_radius(b @ c, _lhs_cfg(cfg, tseed)).value
    return [
        _record(rep.bound_id, tseed, lhs, rep.value, digest)
        for rep in bounds.commuting_fg_bound(b, c, fg, _bound_cfg(cfg, tseed))
    ]


def _family_power(cfg: SuiteConfig, tseed: int) -> list[VerificationRecord]:
    rng = np.random.default_rng(tseed)
    a = _draw_tuple(rng, cfg, tseed, "A")
    digest = _instance_digest([a.stack])
    base_cfg = replace(
        cfg.radius,
        restarts=bounds.RHS_RESTART_FACTOR * cfg.radius.restarts,
        seed=derive_seed(tseed, "base"),
    )
    base = euclidean_radius(a, base_cfg).value
    sq = math.sqrt(a.d)
    out = []
    for n in (2, 3):
        lhs = euclidean_radius(a.mat_power(n), _lhs_cfg(cfg, tseed)).value
        out.append(_record(f"POWER_N{n}", tseed, lhs, sq * base**n, digest))
    return out


def _family_block_matrix(cfg: SuiteConfig, tseed: int) -> list[VerificationRecord]:
    rng = np.random.default_rng(tseed)
    n = int(rng.integers(2, 4))
    d = int(rng.integers(1, 3))
    bm = generate(
        GeneratorSpec("BLOCK_MATRIX", dim=2, d=d, n=n, scale=cfg.scale, seed=derive_seed(tseed, "bm"))
    )
    alpha = _draw_t(rng)
    digest = _instance_digest([bm.block(i, j).stack for i in range(n) for j in range(n)])
    lhs = euclidean_radius(blockmat.assemble(bm), _lhs_cfg(cfg, tseed)).value
    bcfg = _bound_cfg(cfg, tseed)
    fg = power_pair(0.5)
    out = []
    cache: dict = {}  # the six modes share diagonal radii and entry products
    for mode, kwargs in (
        ("THEM1_FG", {"fg": fg}),
        ("COR1_ALPHA", {"alpha": alpha}),
        ("COR2_FG_NORM", {"fg": fg}),
        ("COR3_ALPHA_NORM", {"alpha": alpha}),
        ("COR4_SYM", {"alpha": alpha}),
        ("COR5_SYM_NORM", {"alpha": alpha}),
    ):
        rep = blockmat.block_radius_bound(bm, mode, cfg=bcfg, cache=cache, **kwargs)
        out.append(_record(mode, tseed, lhs, rep.value, digest))
    return out


def _family_two_by_two(cfg: SuiteConfig, tseed: int) -> list[VerificationRecord]:
    rng = np.random.default_rng(tseed)
    d = int(rng.integers(1, 3))
    tuples = [
        generate(GeneratorSpec("TUPLE", dim=2, d=d, scale=cfg.scale, seed=derive_seed(tseed, tag)))
        for tag in ("A", "B", "C", "D")
    ]
    a, b, c, dd = tuples
    bm = blockmat.BlockOperatorMatrix([[a, b], [c, dd]])
    digest = _instance_digest([t.stack for t in tuples])
    lhs = euclidean_radius(blockmat.assemble(bm), _lhs_cfg(cfg, tseed)).value
    return [
        _record(rep.bound_id, tseed, lhs, rep.value, digest)
        for rep in blockmat.two_by_two_bounds(a, b, c, dd, _bound_cfg(cfg, tseed))
    ]


FAMILIES: dict[str, Callable[[SuiteConfig, int], list[VerificationRecord]]] = {
    "tuple": _family_tuple,
    "product": _family_product,
    "positive_block": _family_positive_block,
    "commuting": _family_commuting,
    "power": _family_power,
    "block_matrix": _family_block_matrix,
    "two_by_two": _family_two_by_two,
}

SUITES: dict[str, tuple[str, ...]] = {
    "lemmas": (),
    "bounds": ("tuple", "product", "positive_block", "commuting", "power"),
    "blockmat": ("block_matrix", "two_by_two"),
    "all": ("tuple", "product", "positive_block", "commuting", "power", "block_matrix", "two_by_two"),
}


def _run_family_chunk(cfg: SuiteConfig, family: str, trials: Sequence[int]) -> list[VerificationRecord]:
    fn = FAMILIES[family]
    out: list[VerificationRecord] = []
    for trial in trials:
        out.extend(fn(cfg, derive_seed(cfg.master_seed, family, trial)))
    return out


def run_suite(cfg: SuiteConfig) -> list[VerificationRecord]:
    """Run the configured suite and return its records sorted by
    (bound_id, trial_seed).  Lemma suites run when the suite name is
    ``lemmas`` or ``all``."""
    records: list[VerificationRecord] = []
    if cfg.suite in ("lemmas", "all"):
        records.extend(check_lemmas(cfg.trials, seed=cfg.master_seed))
    tasks = [(family, trial) for family in SUITES[cfg.suite] for trial in range(cfg.trials)]
    if cfg.workers == 1 or len(tasks) < 2 * cfg.workers:
        for family, trial in tasks:
            records.extend(
                FAMILIES[family](cfg, derive_seed(cfg.master_seed, family, trial))
            )
    else:
        from concurrent.futures import ProcessPoolExecutor

        chunks: list[tuple[str, list[int]]] = []
        for family in SUITES[cfg.suite]:
            per = max(1, -(-cfg.trials // (4 * cfg.workers)))
            for lo in range(0, cfg.trials, per):
                chunks.append((family, list(range(lo, min(lo + per, cfg.trials)))))
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            futures = [pool.submit(_run_family_chunk, cfg, fam, tr) for fam, tr in chunks]
            for fut in futures:
                records.extend(fut.result())
    records.sort(key=lambda r: (r.bound_id, r.trial_seed))
    return records


# --------------------------------------------------------------------------
# tightness summary

EQUALITY_THRESHOLD = 1.0 - 1e-6


def _ratio(rec: VerificationRecord) -> float:
    if rec.rhs > 1e-300:
        return rec.lhs / rec.rhs
    return 1.0 if rec.lhs <= 1e-300 else float("inf")


def tightness_report(records: Sequence[VerificationRecord]) -> dict:
    """Summarise how tight each bound is.

    Per bound id: count, mean/median/min of lhs/rhs, and the number of
    equality instances (ratio > 1 - 1e-6).  Bound pairs evaluated on
    shared instances additionally get a win-rate entry (fraction of shared
    instances where the first bound is strictly smaller; ties split).
    """
    if not records:
        raise DomainError("tightness_report needs at least one record")
    by_bound: dict[str, list[VerificationRecord]] = {}
    for rec in records:
        by_bound.setdefault(rec.bound_id, []).append(rec)
    table = {}
    for bound_id, recs in sorted(by_bound.items()):
        ratios = [_ratio(r) for r in recs]
        table[bound_id] = {
            "count": len(recs),
            "mean_ratio": float(np.mean(ratios)),
            "median_ratio": float(statistics.median(ratios)),
            "min_ratio": float(min(ratios)),
            "equality_count": int(sum(r > EQUALITY_THRESHOLD for r in ratios)),
        }
    win_rates = {}
    ids = sorted(by_bound)
    values = {
        bound_id: {r.instance_digest: r.rhs for r in recs}
        for bound_id, recs in by_bound.items()
    }
    for i, ida in enumerate(ids):
        for idb in ids[i + 1 :]:
            shared = values[ida].keys() & values[idb].keys()
            if not shared:
                continue
            wins = 0.0
            for dig in shared:
                va, vb = values[ida][dig], values[idb][dig]
                if va < vb:
                    wins += 1.0
                elif va == vb:
                    wins += 0.5
            win_rates[f"{ida}|{idb}"] = wins / len(shared)
    return {"policy": POLICY, "bounds": table, "win_rates": win_rates}

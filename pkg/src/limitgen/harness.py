"""Monte Carlo learning-curve estimation, exponential-rate fitting,
distinguishing-set computation, and the exact lower-bound constructions.

Every experiment is fully determined by its configuration: the trial with
index k at sample size n uses the rng seeded by (seed, n, k), so curves
are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .core import Collection, Sample, first_unseen
from .errors import ConfigError, Exhausted, InsufficientData
from .fixtures import make_fixture
from .generate import (Generator, best_of_both_generate, generation_error,
                       km_membership_step, km_subset_generate, trivial_generate)
from .identify import (BatchSchedule, batch_majority_identify, canonicalize_index,
                       finite_collection_identify, finlang_identify, gold_pos_neg,
                       pos_neg_exponential_identify, subset_oracle_identify)
from .reductions import unambiguity_report
from .sampling import (canonical_valid_distribution, draw_labeled_sample,
                       draw_sample, labeled_distribution_for)


@dataclass(frozen=True)
class DistinguishingSet:
    """For each earlier non-superset language, the smallest target member
    it misses; a sample containing these makes the target critical."""

    target_index: int
    elements: tuple[int, ...]
    n0: int


def distinguishing_set(collection: Collection, z: Optional[int] = None) -> DistinguishingSet:
    """Smallest-index elements of K separating it from every L_i, i < z,
    that is not a superset of K."""
    z = z or collection.meta.target_index
    target = collection.language(z)
    elems = set()
    for i in range(1, z):
        if collection.subset(z, i):
            continue
        other = collection.language(i)
        elems.add(first_unseen_outside(target, other))
    return DistinguishingSet(z, tuple(sorted(elems)), z)


def first_unseen_outside(target, other, hard_cap: int = 100_000) -> int:
    """Smallest member of ``target`` that is not in ``other``."""
    if target.is_finite:
        for x in target.elements:
            if not other.contains(x):
                return x
        raise Exhausted(f"{target.name} is a subset of {other.name}")
    x, scanned = 0, 0
    while scanned < hard_cap:
        x = first_unseen(target, range(1, x + 1))
        if not other.contains(x):
            return x
        scanned += 1
    raise Exhausted(f"no separator of {target.name} from {other.name} found")


def telltale_bruteforce(collection: Collection, z: Optional[int] = None,
                        horizon: Optional[int] = None, window: int = 200) -> tuple[int, ...]:
    """Finite subset of K ruling out every proper-subset competitor up to
    the horizon.

    Falls back to the fixture's tell-tale oracle when present; otherwise,
    for each L_j that is a proper subset of K (windowed check, exact on
    finite languages), adds the smallest member of K outside L_j.
    """
    z = z or collection.meta.target_index
    if collection.has_telltale_oracle:
        return tuple(sorted(collection.telltale(z)))
    horizon = horizon or collection.horizon
    target = collection.language(z)
    out = set()
    for j in collection.indices_upto(horizon):
        if collection.meta.equality_oracle(j):
            continue
        if collection.subset(j, z) and not collection.subset(z, j):
            out.add(first_unseen_outside(target, collection.language(j)))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Algorithm registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AlgoSpec:
    """How the harness runs one algorithm: its kind (identify/generate),
    whether it consumes labeled examples, and the trial runner."""

    kind: str
    labeled: bool
    run: Callable
    deterministic: bool = True


def _run_best_of_both(coll, sample, rng, cfg):
    return best_of_both_generate(coll, sample, t=max(len(sample), 1))


ALGORITHMS: dict[str, AlgoSpec] = {
    "gold-pn": AlgoSpec("identify", True,
                        lambda coll, s, rng, cfg: gold_pos_neg(coll, s)),
    # The boosted identifier needs two examples to split; below that it
    # degenerates to its own full-sample fallback.
    "posneg-exp": AlgoSpec("identify", True,
                           lambda coll, s, rng, cfg: (
                               pos_neg_exponential_identify(coll, s)
                               if len(s) >= 2 else gold_pos_neg(coll, s))),
    "finlang": AlgoSpec("identify", False,
                        lambda coll, s, rng, cfg: finlang_identify(coll, s)),
    "finite": AlgoSpec("identify", False,
                       lambda coll, s, rng, cfg: finite_collection_identify(
                           coll, s, t=max(len(s), 1))),
    "subset-id": AlgoSpec("identify", False,
                          lambda coll, s, rng, cfg: subset_oracle_identify(
                              coll, s, t=max(len(s), 1))),
    "batch": AlgoSpec("identify", False,
                      lambda coll, s, rng, cfg: batch_majority_identify(
                          coll, s,
                          base=lambda c, b: subset_oracle_identify(c, b, t=max(len(b), 1)),
                          schedule=cfg.schedule, threshold=cfg.threshold)),
    "km-subset": AlgoSpec("generate", False,
                          lambda coll, s, rng, cfg: km_subset_generate(
                              coll, s, t=max(len(s), 1))),
    "km-membership": AlgoSpec("generate", False,
                              lambda coll, s, rng, cfg: km_membership_step(coll, s)),
    "trivial": AlgoSpec("generate", False,
                        lambda coll, s, rng, cfg: trivial_generate(coll, s)),
    "best-of-both": AlgoSpec("generate", False, _run_best_of_both,
                             deterministic=False),
}

ERROR_MODES = ("identify", "generate-consistency", "generate-breadth", "unambiguous")


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a curve run depends on."""

    fixture: str
    algo: str
    n_grid: tuple[int, ...]
    trials: int = 2000
    seed: int = 0
    error_mode: Optional[str] = None
    window: int = 200
    schedule: Optional[BatchSchedule] = None
    threshold: float = 5 / 7

    def resolved_mode(self, spec: AlgoSpec) -> str:
        mode = self.error_mode
        if mode is None:
            return "identify" if spec.kind == "identify" else "generate-consistency"
        return mode


@dataclass(frozen=True)
class CurveRow:
    n: int
    trials: int
    errors: int

    @property
    def error_rate(self) -> float:
        return self.errors / self.trials


@dataclass(frozen=True)
class Curve:
    rows: tuple[CurveRow, ...]

    def row_at(self, n: int) -> CurveRow:
        for row in self.rows:
            if row.n == n:
                return row
        raise KeyError(n)

    def to_csv(self) -> str:
        lines = ["n,trials,errors,error_rate"]
        for r in self.rows:
            lines.append(f"{r.n},{r.trials},{r.errors},{r.error_rate:.6g}")
        return "\n".join(lines) + "\n"


def _validate(config: ExperimentConfig) -> tuple[Collection, AlgoSpec, str]:
    try:
        collection = make_fixture(config.fixture)
    except KeyError as exc:
        raise ConfigError(str(exc)) from None
    spec = ALGORITHMS.get(config.algo)
    if spec is None:
        raise ConfigError(
            f"unknown algorithm {config.algo!r}; valid: {', '.join(sorted(ALGORITHMS))}")
    if config.trials < 1:
        raise ConfigError("trials must be >= 1")
    if not config.n_grid or list(config.n_grid) != sorted(set(config.n_grid)):
        raise ConfigError("n grid must be strictly increasing and nonempty")
    if config.n_grid[0] < 1:
        raise ConfigError("sample sizes start at 1")
    mode = config.resolved_mode(spec)
    if mode not in ERROR_MODES:
        raise ConfigError(f"unknown error mode {mode!r}")
    if spec.kind == "identify" and mode != "identify":
        raise ConfigError(f"{config.algo} only supports the identify error mode")
    if spec.kind == "generate" and mode == "identify":
        raise ConfigError(f"{config.algo} is a generator; pick a generation error mode")
    if mode in ("generate-breadth", "unambiguous") and spec.deterministic:
        raise ConfigError(f"{config.algo} does not expose a support predicate")
    return collection, spec, mode


def _trial_error(collection, spec, mode, sample, rng, config) -> int:
    out = spec.run(collection, sample, rng, config)
    if mode == "identify":
        canon = canonicalize_index(collection, out, max(len(sample), 1))
        return int(not collection.meta.equality_oracle(canon))
    if mode == "generate-consistency":
        emitted = out.sample(rng) if isinstance(out, Generator) else out
        return generation_error(collection, sample, emitted=emitted)
    if mode == "generate-breadth":
        return generation_error(collection, sample, generator=out,
                                mode="breadth", window=config.window)
    report = unambiguity_report(out, collection, window=config.window)
    return 1 - report.verdict


def estimate_curve(config: ExperimentConfig) -> Curve:
    """Monte Carlo error estimate over the sample-size grid.

    Each trial draws a fresh sample from the fixture's canonical valid (or
    labeled) distribution, runs the algorithm, and scores the configured
    error.  Trial k at size n uses the rng seeded by (seed, n, k).
    """
    collection, spec, mode = _validate(config)
    if spec.labeled:
        dist = labeled_distribution_for(collection)
        draw = draw_labeled_sample
    else:
        dist = canonical_valid_distribution(collection)
        draw = draw_sample
    rows = []
    for n in config.n_grid:
        errors = 0
        for k in range(config.trials):
            rng = np.random.default_rng([config.seed, n, k])
            sample = draw(dist, n, rng)
            try:
                errors += _trial_error(collection, spec, mode, sample, rng, config)
            except Exhausted:
                errors += 1
        rows.append(CurveRow(n, config.trials, errors))
    return Curve(tuple(rows))


@dataclass(frozen=True)
class RateFit:
    """Least-squares exponential fit error_rate ~ C * exp(-c * n)."""

    C: float
    c: float
    residual: float
    zero_rows: int
    rows_used: int


def fit_exponential(curve: Curve) -> RateFit:
    """Fit log error_rate against n over the positive-error rows.

    Zero rows carry no log information and are excluded (their count is
    reported); fewer than three positive rows raise InsufficientData.
    """
    pos = [(r.n, r.error_rate) for r in curve.rows if r.errors > 0]
    zero_rows = len(curve.rows) - len(pos)
    if len(pos) < 3:
        raise InsufficientData(
            f"need >= 3 positive-error rows to fit, got {len(pos)}")
    ns = np.array([n for n, _ in pos], dtype=float)
    logs = np.log(np.array([r for _, r in pos]))
    slope, intercept = np.polyfit(ns, logs, 1)
    resid = float(np.sqrt(np.mean((logs - (slope * ns + intercept)) ** 2)))
    return RateFit(C=float(np.exp(intercept)), c=float(-slope),
                   residual=resid, zero_rows=zero_rows, rows_used=len(pos))


# ---------------------------------------------------------------------------
# Exact lower-bound constructions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentificationLowerBound:
    """Exact conditional errors of a deterministic identifier on the
    all-shared-element sample, for the two candidate targets."""

    shared_element: int
    n: int
    guess: int
    conditional_error: dict
    unconditional_bound: dict
    pigeonhole_ok: bool


def lower_bound_identification(collection: Collection, i: int, j: int,
                               shared: int, identifier, n: int) -> IdentificationLowerBound:
    """Evaluate a deterministic identifier on the length-n all-``shared``
    sample over the two-language sub-collection {L_i, L_j}.

    Under valid distributions placing mass 1/2 on the shared element, the
    all-shared event has probability 2^-n, and the guess can match at most
    one target, so one target's conditional error is certainly 1.
    """
    if not (collection.membership(i, shared) and collection.membership(j, shared)):
        raise ValueError("the shared element must belong to both languages")
    restricted = collection.restrict([i, j])
    sample = Sample.positive([shared] * n)
    guess = identifier(restricted, sample)
    cond = {i: int(guess != 1), j: int(guess != 2)}
    bound = {k: (0.5 ** n) * bit for k, bit in cond.items()}
    return IdentificationLowerBound(shared, n, guess, cond, bound,
                                    pigeonhole_ok=(cond[i] + cond[j] >= 1))


@dataclass(frozen=True)
class GenerationLowerBound:
    """Measured emission behaviour of a generator on the all-intersection
    training set of the worst-case two-language fixture."""

    n: int
    draws: int
    intersection_mass: float
    per_target_error: dict
    k: int
    dichotomy_ok: bool


def lower_bound_generation(collection: Collection, generator_step, n: int,
                           draws: int = 10_000, rng=None,
                           deterministic: bool = False) -> GenerationLowerBound:
    """Feed a generator the sample made of the fixture's finite
    intersection (padded with its first element) and measure, per target,
    the probability the emission errs.

    Checks the dichotomy: either at least half the emission mass sits on
    the intersection, or some target errs with probability >= 1/(2k).
    """
    inter = collection.meta.finite_intersection
    if not inter:
        raise ValueError(f"{collection.name} declares no finite intersection")
    if n < len(inter):
        raise ValueError("n must cover the intersection")
    k = collection.size
    items = list(inter) + [inter[0]] * (n - len(inter))
    sample = Sample.positive(items)
    if deterministic:
        draws = 1
    if rng is None:
        rng = np.random.default_rng(0)
    hist: dict[int, int] = {}
    for _ in range(draws):
        x = generator_step(collection, sample, rng)
        hist[x] = hist.get(x, 0) + 1
    total = sum(hist.values())
    inter_set = set(inter)
    inter_mass = sum(c for x, c in hist.items() if x in inter_set) / total
    seen = sample.as_set
    per_target = {}
    for tgt in range(1, k + 1):
        lang = collection.language(tgt)
        bad = sum(c for x, c in hist.items()
                  if not (lang.contains(x) and x not in seen))
        per_target[tgt] = bad / total
    ok = inter_mass >= 0.5 or max(per_target.values()) >= 1 / (2 * k)
    return GenerationLowerBound(n, total, inter_mass, per_target, k, ok)


def write_curve_csv(curve: Curve, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(curve.to_csv())


def gnuplot_script(csv_path) -> str:
    """A plain gnuplot script plotting the curve CSV on a log scale."""
    return (
        "set datafile separator ','\n"
        "set logscale y\n"
        "set xlabel 'n'\n"
        "set ylabel 'error rate'\n"
        f"plot '{csv_path}' using 1:4 skip 1 with linespoints title 'error'\n"
    )

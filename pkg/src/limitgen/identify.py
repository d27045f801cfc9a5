"""Identification algorithms: in-the-limit identifiers, index
canonicalization, and the boosted statistical identifiers.

All identifiers are pure functions of (collection, sample, parameters) and
return a 1-based language index.  "Output one arbitrarily" fallbacks are
fixed to index 1 for determinism.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import Collection, Sample, critical_indices, is_consistent, project

Identifier = Callable[[Collection, Sample], int]


@dataclass(frozen=True)
class BatchSchedule:
    """Nondecreasing unbounded batch-size function n -> f(n)."""

    f: Callable[[int], int]
    name: str = "custom"

    def g(self, n: int) -> float:
        return n / self.f(n)

    @classmethod
    def logarithmic(cls) -> "BatchSchedule":
        return cls(lambda n: math.ceil(math.log2(n + 2)), "log2(n+2)")

    @classmethod
    def constant(cls, size: int) -> "BatchSchedule":
        return cls(lambda n: size, f"const{size}")


def gold_pos_neg(collection: Collection, sample: Sample,
                 horizon: Optional[int] = None) -> int:
    """Lowest index consistent with a labeled sample; 1 if none in range."""
    if not sample.is_labeled:
        raise ValueError("gold_pos_neg needs a labeled sample")
    horizon = horizon or collection.horizon
    for j in collection.indices_upto(horizon):
        lang = collection.language(j)
        if all(lang.contains(x) == bool(y) for x, y in sample.items):
            return j
    return 1


def finlang_identify(collection: Collection, sample: Sample,
                     horizon: Optional[int] = None) -> int:
    """First language containing every example seen so far; 1 if none.

    This is the classic identifier for collections of finite languages,
    but the rule itself is total on any collection.
    """
    horizon = horizon or collection.horizon
    for j in collection.indices_upto(horizon):
        if is_consistent(collection, j, sample):
            return j
    return 1


def finite_collection_identify(collection: Collection, sample: Sample, t: int) -> int:
    """Version-space identifier for finite collections.

    Keeps consistent languages, then keeps only those none of whose members
    within x_1..x_t lies outside another surviving language; returns the
    smallest surviving index (1 when the filter empties).
    """
    if collection.size is None:
        raise ValueError("finite_collection_identify needs a finite collection")
    if t < len(sample):
        raise ValueError("t must be at least the sample size")
    space = [j for j in collection.indices_upto(collection.size)
             if is_consistent(collection, j, sample)]
    langs = {j: collection.language(j) for j in space}
    refined = [
        j for j in space
        if all(not langs[j].contains(x) or langs[i].contains(x)
               for x in range(1, t + 1) for i in space)
    ]
    return refined[0] if refined else 1


def subset_oracle_identify(collection: Collection, sample: Sample, t: int) -> int:
    """Largest-index critical language among indices <= t; 1 if none."""
    crit = critical_indices(collection, sample, t)
    return crit[-1] if crit else 1


def canonicalize_index(collection: Collection, i: int, n: int) -> int:
    """Smallest index whose length-n projection matches that of L_i."""
    if i < 1 or n < 1:
        raise ValueError("index and prefix length must be >= 1")
    target = project(collection, i, n)
    for ell in range(1, i):
        if project(collection, ell, n) == target:
            return ell
    return i


def _vote(counts: dict[int, int], total: int, threshold: float) -> int:
    """Index clearing the vote threshold, else smallest among max-voted."""
    for idx in sorted(counts):
        if counts[idx] >= threshold * total - 1e-12:
            return idx
    best = max(counts.values())
    return min(idx for idx, c in counts.items() if c == best)


def batch_majority_identify(collection: Collection, sample: Sample,
                            base: Identifier,
                            schedule: Optional[BatchSchedule] = None,
                            threshold: float = 5 / 7) -> int:
    """Boost an in-the-limit identifier by batching and voting.

    Splits the sample into consecutive non-overlapping batches of size
    f(n), runs ``base`` on each, canonicalizes each output at prefix n,
    and returns the index voted by a ``threshold`` fraction of batches
    (smallest most-voted index when none clears it).
    """
    if sample.is_labeled:
        raise ValueError("batch_majority_identify takes positive samples")
    n = len(sample)
    if n < 1:
        raise ValueError("need a nonempty sample")
    schedule = schedule or BatchSchedule.logarithmic()
    size = max(1, schedule.f(n))
    if n < size:
        batches = [sample]
    else:
        batches = [sample.slice(k * size, (k + 1) * size)
                   for k in range(n // size)]
    counts: dict[int, int] = {}
    for batch in batches:
        idx = canonicalize_index(collection, base(collection, batch), n)
        counts[idx] = counts.get(idx, 0) + 1
    return _vote(counts, len(batches), threshold)


@dataclass
class StoppingTimeState:
    """Cross-validated batch-size estimate for labeled boosting.

    ``outputs_by_t[t]`` are the first-half batch predictions at batch size
    t, ``errors_by_t[t]`` the fraction whose language mislabels some
    second-half example, and ``t_hat`` the smallest t below the 1/4
    threshold (``math.inf`` when none qualifies).
    """

    outputs_by_t: dict[int, list[int]] = field(default_factory=dict)
    errors_by_t: dict[int, float] = field(default_factory=dict)
    t_hat: float = math.inf


def stopping_time_estimate(collection: Collection, sample: Sample,
                           base: Optional[Identifier] = None) -> StoppingTimeState:
    """Estimate a good training batch size from a labeled sample.

    Trains ``base`` on disjoint first-half batches of every size t up to
    n/2 and scores each prediction against the second half; t_hat is the
    first size whose empirical error drops below 1/4 (inf if none does).
    """
    if not sample.is_labeled:
        raise ValueError("stopping_time_estimate needs a labeled sample")
    n = len(sample)
    if n < 2:
        raise ValueError("need at least two labeled examples")
    base = base or gold_pos_neg
    half = n // 2
    second = sample.items[half:]
    state = StoppingTimeState()
    for t in range(1, half + 1):
        num_batches = n // (2 * t)
        outputs = [base(collection, sample.slice((i - 1) * t, i * t))
                   for i in range(1, num_batches + 1)]
        bad = 0
        for idx in outputs:
            lang = collection.language(idx)
            if any(lang.contains(x) != bool(y) for x, y in second):
                bad += 1
        state.outputs_by_t[t] = outputs
        state.errors_by_t[t] = bad / num_batches
        if state.t_hat is math.inf and state.errors_by_t[t] < 0.25:
            state.t_hat = t
    return state


def pos_neg_exponential_identify(collection: Collection, sample: Sample,
                                 base: Optional[Identifier] = None) -> int:
    """Exponential-rate identifier from positive and negative examples.

    Estimates a batch size on the first half, retrains on batches of that
    size, canonicalizes the outputs at prefix n, and takes the strict
    majority (smallest most-voted index when there is none).  Falls back
    to the lowest-consistent rule on the full sample when no batch size
    qualifies.
    """
    base = base or gold_pos_neg
    state = stopping_time_estimate(collection, sample, base)
    if state.t_hat is math.inf:
        return gold_pos_neg(collection, sample)
    n = len(sample)
    outputs = state.outputs_by_t[int(state.t_hat)]
    counts: dict[int, int] = {}
    for idx in outputs:
        canon = canonicalize_index(collection, idx, n)
        counts[canon] = counts.get(canon, 0) + 1
    # The strict-majority winner, when one exists, is the unique max-voted
    # index, so the smallest-most-voted rule covers both cases.
    best = max(counts.values())
    return min(idx for idx, c in counts.items() if c == best)

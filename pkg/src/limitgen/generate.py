"""Generation algorithms: critical-language generators with subset or
membership oracles, the trivial-collection generator, rejection-sampling
breadth generators, and error evaluation.

Every stochastic generator is packaged as a :class:`Generator` carrying a
sampler together with a total, decidable support-membership predicate.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional

from .core import (Collection, Sample, critical_indices, first_unseen,
                   is_consistent)
from .errors import IterationCap
from .sampling import geometric_position

REJECTION_CAP = 10_000
M_ITERATION_CAP = 100_000


@dataclass(frozen=True)
class Generator:
    """A samplable output source with a decidable support predicate."""

    sampler: Callable[..., int]
    decide_support: Callable[[int], bool]
    description: str = ""

    def sample(self, rng) -> int:
        return self.sampler(rng)


def _fallback_element(sample: Sample) -> int:
    """Smallest domain element not in the sample (the deterministic
    reading of "output an arbitrary x")."""
    x = 1
    seen = sample.as_set
    while x in seen:
        x += 1
    return x


def _covered(collection: Collection, j: int, sample: Sample) -> bool:
    lang = collection.language(j)
    return lang.is_finite and set(lang.elements) <= sample.as_set


def km_subset_generate(collection: Collection, sample: Sample, t: int) -> int:
    """Emit the first unseen member of the highest-index critical language.

    Criticality is computed over indices <= t with the subset oracle.  When
    no language <= t is consistent, emits the smallest unseen domain
    element.  A fully covered finite critical language propagates
    :class:`Exhausted`.
    """
    crit = critical_indices(collection, sample, t)
    if not crit:
        return _fallback_element(sample)
    return first_unseen(collection.language(crit[-1]), sample.as_set)


@dataclass(frozen=True)
class KMState:
    """Cursor state of the membership-oracle generator.

    ``m`` is the projection cursor, nondecreasing across steps; ``t`` the
    current step (number of examples seen).
    """

    t: int = 0
    m: int = 0
    last_emitted: Optional[int] = None

    @classmethod
    def from_sample(cls, sample: Sample) -> "KMState":
        # With the canonical domain x_i = i, the position of an incoming
        # element equals its value.
        m0 = max(sample.elements) if sample.items else 0
        return cls(t=len(sample), m=m0)


def km_membership_generate(collection: Collection, sample: Sample,
                           state: Optional[KMState] = None,
                           m_cap: int = M_ITERATION_CAP) -> tuple[int, KMState]:
    """One step of the membership-oracle generator.

    Grows the projection length m until the highest-index m-critical
    language (pairwise projection-inclusion checks over the consistent
    set, tracked incrementally) has an unseen member among x_1..x_m, then
    emits the smallest such member.  Finite languages fully covered by the
    sample are skipped as emission sources, since they have nothing left
    to generate.
    """
    if state is None:
        state = KMState.from_sample(sample)
    t = max(state.t, 1)
    consistent = [j for j in collection.indices_upto(t)
                  if is_consistent(collection, j, sample)]
    if not consistent:
        x = _fallback_element(sample)
        return x, replace(state, t=t, last_emitted=x)

    m = state.m
    members = {j: set(collection.language(j).members_upto(m)) for j in consistent}
    # critical[j] stays True while L_j[m] nests inside every lower-index
    # consistent language's projection; nesting violations are monotone in
    # m, so only new elements need checking after the initial pass.
    critical = {}
    for pos, j in enumerate(consistent):
        critical[j] = all(members[j] <= members[i] for i in consistent[:pos])
    eligible = {j for j in consistent if not _covered(collection, j, sample)}
    seen = sample.as_set
    for _ in range(m_cap):
        m += 1
        has_m = {j for j in consistent if collection.membership(j, m)}
        for j in has_m:
            members[j].add(m)
        for pos, j in enumerate(consistent):
            if critical[j] and j in has_m:
                if any(i not in has_m for i in consistent[:pos]):
                    critical[j] = False
        top = max((j for j in eligible if critical[j]), default=None)
        if top is None:
            # Criticality only ever decays and eligibility is fixed, so no
            # safe emission source will appear later either.
            x = _fallback_element(sample)
            return x, KMState(t=t, m=m, last_emitted=x)
        unseen = members[top] - seen
        if unseen:
            x = min(unseen)
            return x, KMState(t=t, m=m, last_emitted=x)
    raise IterationCap(f"projection cursor exceeded {m_cap}")


def km_membership_step(collection: Collection, sample: Sample) -> int:
    """Train-from-scratch convenience wrapper returning only the element."""
    x, _ = km_membership_generate(collection, sample)
    return x


def trivial_generate(collection: Collection, sample: Sample) -> int:
    """Generator for collections whose finite subfamilies all have
    infinite intersection.

    Picks the first sample element x, collects every language up to index
    n containing x (plus the first language containing x at all), and
    emits the smallest unseen element of their intersection.
    """
    if not collection.meta.known_trivial_for_generation:
        raise ValueError(f"{collection.name} is not certified trivial for generation")
    if not sample.items:
        raise ValueError("need at least one example")
    n = len(sample)
    x = sample.elements[0]
    j = 1
    while not collection.membership(j, x):
        j += 1
    members = [i for i in collection.indices_upto(n) if collection.membership(i, x)]
    if j not in members:
        members.append(j)
    langs = [collection.language(i) for i in members]
    seen = sample.as_set
    bound = (max(seen) if seen else 0) + sum(
        l.search_bound or len(l.elements) for l in langs) + 1
    for cand in range(1, bound * len(langs) + 2):
        if cand not in seen and all(l.contains(cand) for l in langs):
            return cand
    raise IterationCap("no intersection element found; fixture not trivial?")


def _geometric_proposal(rng) -> int:
    return geometric_position(rng)


def breadth_via_index(collection: Collection, z: int,
                      proposal: Optional[Callable] = None) -> Generator:
    """Rejection sampler whose support is exactly L_z.

    Draws a domain position from the proposal (geometric by default) and
    accepts members of L_z.
    """
    proposal = proposal or _geometric_proposal
    lang = collection.language(z)

    def sampler(rng):
        for _ in range(REJECTION_CAP):
            x = proposal(rng)
            if lang.contains(x):
                return x
        raise IterationCap(f"rejection sampler exceeded {REJECTION_CAP} draws")

    return Generator(sampler, lang.contains, f"breadth(L_{z} of {collection.name})")


def best_of_both_generate(collection: Collection, sample: Sample, t: int,
                          proposal: Optional[Callable] = None) -> Generator:
    """Breadth sampler over the highest-index critical language, minus the
    sample.

    On identifiable collections the support converges to the unseen part
    of the target; before the distinguishing evidence arrives it may be a
    strict subset (mode collapse).
    """
    proposal = proposal or _geometric_proposal
    crit = critical_indices(collection, sample, t)
    seen = sample.as_set
    if crit:
        lang = collection.language(crit[-1])
        in_support = lambda x: lang.contains(x) and x not in seen
        tag = f"best-of-both(L_{crit[-1]} of {collection.name})"
    else:
        in_support = lambda x: x not in seen
        tag = f"best-of-both(unconstrained on {collection.name})"

    def sampler(rng):
        for _ in range(REJECTION_CAP):
            x = proposal(rng)
            if in_support(x):
                return x
        raise IterationCap(f"rejection sampler exceeded {REJECTION_CAP} draws")

    return Generator(sampler, in_support, tag)


def generation_error(collection: Collection, sample: Sample,
                     emitted: Optional[int] = None,
                     generator: Optional[Generator] = None,
                     mode: str = "consistency", window: int = 200) -> int:
    """0/1 generation error against the fixture's target language.

    consistency: 1 iff the emitted element is not an unseen target member.
    breadth: 1 iff the support predicate disagrees with the indicator of
    (target minus sample) anywhere on the verification window; the window
    is widened to cover finite targets entirely, making the check exact.
    """
    target = collection.language(collection.meta.target_index)
    seen = sample.as_set
    if mode == "consistency":
        if emitted is None:
            raise ValueError("consistency mode needs an emitted element")
        return int(not (target.contains(emitted) and emitted not in seen))
    if mode == "breadth":
        if generator is None:
            raise ValueError("breadth mode needs a Generator")
        w = window
        if target.is_finite and target.elements:
            w = max(w, target.elements[-1])
        if seen:
            w = max(w, max(seen))
        for x in range(1, w + 1):
            want = target.contains(x) and x not in seen
            if bool(generator.decide_support(x)) != want:
                return 1
        return 0
    raise ValueError(f"unknown error mode {mode!r}")

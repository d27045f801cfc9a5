"""Valid distributions, sequence-induced sampling, and example streams.

A valid distribution has support exactly equal to the target language.  The
default construction is the distribution induced by an enumeration: the
element at position j of the enumeration receives weight 2^-j (positions
are 1-indexed, so the weights sum to one and a fair-coin geometric draw
samples the distribution exactly).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .core import Collection, Language, Sample
from .errors import InvalidEnumeration, IterationCap

# A geometric position draw aborts after this many tail flips (mass 2^-64);
# the same truncation bounds pmf evaluation error below 1e-19.
GEOMETRIC_CAP = 64


class Enumeration:
    """A lazily evaluable infinite listing of a language's elements.

    ``at(j)`` returns the element at 1-based position j.  Every member of
    the language must appear at some finite position.
    """

    def __init__(self, name, at: Callable[[int], int]):
        self.name = name
        self._at = at

    def at(self, j: int) -> int:
        if j < 1:
            raise IndexError("enumeration positions are 1-based")
        return self._at(j)

    def prefix(self, n: int) -> list[int]:
        return [self.at(j) for j in range(1, n + 1)]

    def __repr__(self):
        return f"Enumeration({self.name!r})"


def canonical_enumeration(language: Language) -> Enumeration:
    """Members in increasing domain order; finite languages cycle."""
    if language.is_finite:
        if not language.elements:
            raise ValueError(f"{language.name}: cannot enumerate the empty language")
        elems = language.elements
        return Enumeration(f"canonical({language.name})",
                           lambda j: elems[(j - 1) % len(elems)])

    found: list[int] = []
    state = {"next": 1}

    def at(j):
        while len(found) < j:
            x = state["next"]
            # Certificate: a fresh member exists within bound of the last one.
            bound = (found[-1] if found else 0) + language.search_bound
            while x <= bound:
                if language.contains(x):
                    found.append(x)
                    break
                x += 1
            else:
                raise RuntimeError(f"{language.name}: certificate violated")
            state["next"] = x + 1
        return found[j - 1]

    return Enumeration(f"canonical({language.name})", at)


def delayed_enumeration(language: Language, d: int) -> Enumeration:
    """Fresh members in canonical order, with d repeats of the smallest
    member interleaved after each fresh element."""
    if d < 0:
        raise ValueError("delay must be >= 0")
    base = canonical_enumeration(language)
    smallest = base.at(1)

    def at(j):
        q, r = divmod(j - 1, d + 1)
        return base.at(q + 1) if r == 0 else smallest

    return Enumeration(f"delayed<{d}>({language.name})", at)


def explicit_enumeration(language: Language, prefix) -> Enumeration:
    """A verified explicit prefix followed by the canonical listing."""
    prefix = list(prefix)
    for x in prefix:
        if not language.contains(x):
            raise InvalidEnumeration(f"{x} is not a member of {language.name}")
    base = canonical_enumeration(language)

    def at(j):
        if j <= len(prefix):
            return prefix[j - 1]
        return base.at(j - len(prefix))

    return Enumeration(f"explicit({language.name})", at)


def geometric_position(rng) -> int:
    """Fair-coin flips until the first head; returns the flip count.

    P[J = j] = 2^-j for j >= 1.  Aborts at GEOMETRIC_CAP flips.
    """
    for j in range(1, GEOMETRIC_CAP + 1):
        if rng.random() < 0.5:
            return j
    raise IterationCap(f"no head in {GEOMETRIC_CAP} fair-coin flips")


@dataclass(frozen=True)
class ValidDistribution:
    """A samplable distribution whose support equals the target language."""

    target: Language
    pmf: Callable[[int], float]
    sampler: Callable[..., int]

    def sample(self, rng) -> int:
        return self.sampler(rng)


def induced_distribution(sigma: Enumeration) -> ValidDistribution:
    """Distribution with mass 2^-j at the element in position j of sigma.

    The pmf is evaluated by truncating the position sum at GEOMETRIC_CAP
    (tail mass below 1e-19); sampling is exact via a geometric draw.
    """
    def pmf(x):
        return sum(0.5 ** j for j in range(1, GEOMETRIC_CAP + 1)
                   if sigma.at(j) == x)

    def sampler(rng):
        return sigma.at(geometric_position(rng))

    # The target is whatever language sigma enumerates; keep a membership
    # view through the enumeration-independent pmf for support checks.
    target = Language(f"supp({sigma.name})",
                      contains=lambda x: pmf(x) > 0.0,
                      search_bound=GEOMETRIC_CAP)
    return ValidDistribution(target, pmf, sampler)


def sample_induced(sigma: Enumeration, rng) -> int:
    """One draw from the distribution induced by ``sigma``."""
    return sigma.at(geometric_position(rng))


def canonical_valid_distribution(collection: Collection) -> ValidDistribution:
    """Induced distribution of the canonical enumeration of the target."""
    target = collection.language(collection.meta.target_index)
    sigma = canonical_enumeration(target)
    dist = induced_distribution(sigma)
    return ValidDistribution(target, dist.pmf, dist.sampler)


@dataclass(frozen=True)
class LabeledDistribution:
    """Full-support base distribution with deterministic target labels.

    The base puts mass 2^-x on element x (full domain support); the label
    of x is the membership indicator of the target language.
    """

    target: Language

    def base_pmf(self, x: int) -> float:
        return 0.5 ** x

    def sample(self, rng) -> tuple[int, int]:
        x = geometric_position(rng)
        return x, int(self.target.contains(x))


def labeled_distribution_for(collection: Collection) -> LabeledDistribution:
    return LabeledDistribution(collection.language(collection.meta.target_index))


class Stream:
    """A replayable source of examples: a deterministic function of
    (seed, position)."""

    def __init__(self, name, draw=None, seed=None, enumeration=None):
        if (draw is None) == (enumeration is None):
            raise ValueError("exactly one of draw/enumeration required")
        self.name = name
        self._draw = draw
        self._enum = enumeration
        self.seed = seed

    def prefix(self, n: int) -> list:
        if self._enum is not None:
            return self._enum.prefix(n)
        rng = np.random.default_rng(self.seed)
        return [self._draw(rng) for _ in range(n)]

    def __repr__(self):
        return f"Stream({self.name!r}, seed={self.seed})"


def labeled_stream(dist: LabeledDistribution, seed) -> Stream:
    """I.i.d. labeled examples, reproducible by seed."""
    return Stream(f"labeled({dist.target.name})", draw=dist.sample, seed=seed)


def positive_stream(dist: ValidDistribution, seed) -> Stream:
    """I.i.d. positive examples from a valid distribution."""
    return Stream(f"iid({dist.target.name})", draw=dist.sample, seed=seed)


def adversarial_enumeration(language: Language, schedule="canonical",
                            explicit=None) -> Stream:
    """Deterministic enumeration stream of a language.

    ``schedule`` is ``"canonical"``, ``"delayed:<d>"`` (or the pair
    ("delayed", d)), or ``"explicit"`` with an explicit verified prefix.
    """
    if explicit is not None or schedule == "explicit":
        enum = explicit_enumeration(language, explicit or ())
    elif schedule == "canonical":
        enum = canonical_enumeration(language)
    else:
        if isinstance(schedule, str):
            kind, _, arg = schedule.partition(":")
            if kind != "delayed" or not arg.isdigit():
                raise ValueError(f"unknown schedule {schedule!r}")
            d = int(arg)
        else:
            kind, d = schedule
            if kind != "delayed":
                raise ValueError(f"unknown schedule {schedule!r}")
        enum = delayed_enumeration(language, d)
    return Stream(enum.name, enumeration=enum)


def draw_sample(dist: ValidDistribution, n: int, rng) -> Sample:
    return Sample.positive(dist.sample(rng) for _ in range(n))


def draw_labeled_sample(dist: LabeledDistribution, n: int, rng) -> Sample:
    # I.i.d. pairs may repeat an element; labels are deterministic so the
    # no-contradiction invariant always holds.
    return Sample.labeled(dist.sample(rng) for _ in range(n))

"""Constructive reductions: generator-to-identifier conversions, the
statistical-to-online wrapper, and unambiguity measurements.

The reductions retrain from scratch at every step, as the underlying
procedures do; no state is cached across steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .core import Collection, Sample, is_consistent
from .generate import Generator, breadth_via_index
from .identify import gold_pos_neg
from .sampling import Enumeration, Stream, geometric_position

# A trainer maps a positive sample to a Generator with decidable support.
GeneratorTrainer = Callable[[Sample], Generator]


def cheating_trainer(collection: Collection, z: int,
                     exclude_sample: bool = True) -> GeneratorTrainer:
    """Oracle trainer with exact support L_z (minus the sample by default).

    Stands in for a hypothetical breadth-achieving learner when testing
    the reductions end to end.
    """
    def train(sample: Sample) -> Generator:
        base = breadth_via_index(collection, z)
        if not exclude_sample:
            return base
        seen = sample.as_set

        def sampler(rng):
            while True:
                x = base.sample(rng)
                if x not in seen:
                    return x

        return Generator(sampler, lambda x: base.decide_support(x) and x not in seen,
                         f"cheat(L_{z} minus sample)")

    return train


def identify_via_breadth_generator(trainer: GeneratorTrainer, stream: Stream,
                                   t: int, collection: Collection,
                                   ipn: Optional[Callable] = None,
                                   correct_with_sample: bool = True) -> int:
    """Identify by labeling the domain prefix through a breadth generator.

    Trains the generator on the first t stream elements, labels x_1..x_t
    by support membership (or-ed with sample membership when
    ``correct_with_sample``, which repairs the elements a non-repeating
    generator necessarily omits), and feeds the labeled prefix to a
    positive+negative identifier.
    """
    ipn = ipn or gold_pos_neg
    sample = Sample.positive(stream.prefix(t))
    if t == 0:
        return ipn(collection, Sample.labeled(()))
    gen = trainer(sample)
    seen = sample.as_set
    pairs = []
    for x in range(1, t + 1):
        label = bool(gen.decide_support(x))
        if correct_with_sample:
            label = label or x in seen
        pairs.append((x, int(label)))
    return ipn(collection, Sample.labeled(pairs))


def identify_via_unambiguous(trainer: GeneratorTrainer, stream: Stream,
                             t: int, collection: Collection,
                             window: Optional[int] = None) -> int:
    """Identify via sample-consistency and generator-consistency filtering.

    Keeps languages (indices <= t) that contain the sample and whose
    length-t projection lies inside the generator support union the
    sample; returns the smallest surviving index, 1 when none survives.
    ``window`` defaults to t, the prefix length the checks run on.
    """
    w = window or t
    sample = Sample.positive(stream.prefix(t))
    if t == 0:
        return 1
    gen = trainer(sample)
    seen = sample.as_set
    survivors = []
    for j in collection.indices_upto(t):
        if not is_consistent(collection, j, sample):
            continue
        lang = collection.language(j)
        if all(not lang.contains(x) or gen.decide_support(x) or x in seen
               for x in range(1, w + 1)):
            survivors.append(j)
    return survivors[0] if survivors else 1


def statistical_to_online(trainer: Callable[[Sample], object],
                          sigma: Enumeration, n: int, rng,
                          prefix_limit: Optional[int] = None):
    """Run a statistical trainer on i.i.d. draws from the distribution
    induced by an enumeration.

    By default every position of sigma is addressable (the enumeration is
    an oracle).  With ``prefix_limit`` only that many positions have been
    revealed and draws landing beyond it are re-drawn, which slightly
    reweights the tail.
    """
    draws = []
    for _ in range(n):
        while True:
            j = geometric_position(rng)
            if prefix_limit is None or j <= prefix_limit:
                break
        draws.append(sigma.at(j))
    return trainer(Sample.positive(draws))


@dataclass(frozen=True)
class UnambiguityReport:
    """Windowed symmetric-difference distances of a support to the target
    and to its nearest competitor."""

    window: int
    self_distance: int
    min_competitor: int
    verdict: int


def unambiguity_report(generator: Generator, collection: Collection,
                       window: int = 200,
                       horizon: Optional[int] = None) -> UnambiguityReport:
    """Is the support strictly closer to the target than to any other
    language, measured on the window x_1..x_W?

    Competitors are the languages up to the horizon that the fixture
    certifies unequal to the target.
    """
    horizon = horizon or collection.horizon
    meta = collection.meta
    target = collection.language(meta.target_index)
    supp = [bool(generator.decide_support(x)) for x in range(1, window + 1)]

    def distance(lang):
        return sum(1 for k, x in enumerate(range(1, window + 1))
                   if supp[k] != lang.contains(x))

    self_d = distance(target)
    competitors = [j for j in collection.indices_upto(horizon)
                   if not meta.equality_oracle(j)]
    min_comp = min((distance(collection.language(j)) for j in competitors),
                   default=window + 1)
    return UnambiguityReport(window, self_d, min_comp, int(self_d < min_comp))

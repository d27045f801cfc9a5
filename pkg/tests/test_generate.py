import numpy as np
import pytest
from hypothesis import given, strategies as st

from limitgen.core import Collection, FixtureMeta, Sample, infinite_language
from limitgen.errors import Exhausted
from limitgen.fixtures import make_fixture
from limitgen.generate import (KMState, best_of_both_generate,
                               breadth_via_index, generation_error,
                               km_membership_generate, km_membership_step,
                               km_subset_generate, trivial_generate)
from limitgen.harness import distinguishing_set


def singleton_naturals():
    meta = FixtureMeta(1, lambda i: i == 1, True, True)
    return Collection("singleton", lambda i: infinite_language("nat", lambda x: True, 1),
                      meta, size=1, subset_oracle=lambda i, j: True)


def test_km_subset_examples():
    coll = make_fixture("evens")
    assert km_subset_generate(coll, Sample.positive([2, 6]), 3) == 4
    assert km_subset_generate(coll, Sample.positive([4]), 3) == 8
    assert km_subset_generate(singleton_naturals(), Sample.positive([1]), 1) == 2


def test_km_subset_exhausted_on_finite_fixture():
    coll = make_fixture("finlang")
    with pytest.raises(Exhausted):
        km_subset_generate(coll, Sample.positive([1, 2, 3]), 3)


def test_km_membership_examples():
    coll = make_fixture("evens")
    x, state = km_membership_generate(coll, Sample.positive([2, 6]),
                                      KMState(t=3, m=6))
    assert x == 4 and state.m >= 6
    assert km_membership_step(singleton_naturals(), Sample.positive([1])) == 2
    x, _ = km_membership_generate(coll, Sample.positive([4]), KMState(t=3, m=4))
    assert x == 8


def test_km_membership_cursor_is_nondecreasing():
    coll = make_fixture("evens")
    state = KMState()
    items = []
    last_m = 0
    for x in [2, 4, 6, 8]:
        items.append(x)
        sample = Sample.positive(items)
        base = KMState(t=len(items), m=max(state.m, max(items)))
        _, state = km_membership_generate(coll, sample, base)
        assert state.m >= last_m
        last_m = state.m


@given(st.lists(st.sampled_from([2, 4, 6, 8, 10, 12, 16, 20]),
                min_size=1, max_size=8),
       st.integers(1, 64))
def test_nested_fixture_agreement(xs, t):
    # On a chain ordered by inclusion the subset-oracle and
    # membership-oracle generators emit the same element.
    coll = make_fixture("evens")
    sample = Sample.positive(xs)
    by_subset = km_subset_generate(coll, sample, t)
    by_membership, _ = km_membership_generate(
        coll, sample, KMState(t=t, m=max(xs)))
    assert by_subset == by_membership


@given(st.sets(st.integers(1, 40), max_size=6), st.integers(0, 20))
def test_safety_after_distinguishing_set(extra, pad):
    # Once the sample holds the distinguishing set and the target index is
    # within range, every emission is an unseen target member.
    for name in ("evens", "thresholds", "genlb"):
        coll = make_fixture(name)
        z = coll.meta.target_index
        target = coll.language(z)
        dset = distinguishing_set(coll).elements
        members = [x for x in sorted(extra) if target.contains(x)]
        items = list(dset) + members
        if not items:
            items = [next(x for x in range(1, 50) if target.contains(x))]
        items += [items[0]] * max(0, z + pad - len(items))
        sample = Sample.positive(items)
        t = max(len(sample), z)
        emitted = km_subset_generate(coll, sample, t)
        assert target.contains(emitted) and emitted not in sample.as_set


def test_trivial_generate_examples():
    coll = make_fixture("cosingleton")
    assert trivial_generate(coll, Sample.positive([5])) == 2
    assert trivial_generate(coll, Sample.positive([2])) == 3
    assert trivial_generate(coll, Sample.positive([5, 2])) == 3


def test_trivial_generate_requires_certificate():
    with pytest.raises(ValueError):
        trivial_generate(make_fixture("genlb"), Sample.positive([1]))


def test_breadth_via_index_examples():
    coll = make_fixture("evens")
    gen = breadth_via_index(coll, 2)
    assert gen.decide_support(4) and not gen.decide_support(3)
    rng = np.random.default_rng(8)
    assert all(gen.sample(rng) % 2 == 0 for _ in range(1000))
    fin = make_fixture("finlang")
    gen3 = breadth_via_index(fin, 3)
    draws = {gen3.sample(rng) for _ in range(10_000)}
    assert draws == {1, 2, 3}


def test_breadth_via_index_support_matches_membership():
    coll = make_fixture("evens")
    gen = breadth_via_index(coll, 2)
    lang = coll.language(2)
    assert all(gen.decide_support(x) == lang.contains(x) for x in range(1, 501))


def test_best_of_both_examples():
    coll = make_fixture("evens")
    gen = best_of_both_generate(coll, Sample.positive([2, 6]), 3)
    for x in range(1, 21):
        assert gen.decide_support(x) == (x % 2 == 0 and x not in (2, 6))
    gen = best_of_both_generate(singleton_naturals(), Sample.positive([]), 1)
    assert all(gen.decide_support(x) for x in range(1, 21))
    # mode collapse before the distinguishing element arrives
    gen = best_of_both_generate(coll, Sample.positive([4]), 3)
    for x in range(1, 21):
        assert gen.decide_support(x) == (x % 4 == 0 and x != 4)


def test_generation_error_examples():
    coll = make_fixture("evens")
    assert generation_error(coll, Sample.positive([2, 6]), emitted=4) == 0
    assert generation_error(coll, Sample.positive([2, 6]), emitted=2) == 1
    assert generation_error(coll, Sample.positive([2, 6]), emitted=3) == 1
    gen = best_of_both_generate(coll, Sample.positive([2, 6]), 3)
    assert generation_error(coll, Sample.positive([2, 6]), generator=gen,
                            mode="breadth") == 0
    collapsed = best_of_both_generate(coll, Sample.positive([4]), 3)
    assert generation_error(coll, Sample.positive([4]), generator=collapsed,
                            mode="breadth") == 1


def test_generation_error_breadth_exact_on_finite_target():
    coll = make_fixture("finlang")
    sample = Sample.positive([2, 3])
    from limitgen.generate import Generator
    exact = Generator(lambda rng: 1, lambda x: x == 1, "exact")
    assert generation_error(coll, sample, generator=exact, mode="breadth") == 0
    narrow = Generator(lambda rng: 1, lambda x: False, "narrow")
    assert generation_error(coll, sample, generator=narrow, mode="breadth") == 1
    wide = Generator(lambda rng: 1, lambda x: x in (1, 4), "wide")
    assert generation_error(coll, sample, generator=wide, mode="breadth") == 1

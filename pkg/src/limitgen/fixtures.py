"""The fixture catalog: concrete language collections used by experiments.

Every fixture ships an analytic subset oracle, a tell-tale oracle when one
exists, and metadata naming its target language and known properties.
Fixture names (lowercase) are the CLI's ``--fixture`` vocabulary.
"""

from __future__ import annotations

from .core import Collection, FixtureMeta, Language, finite_language, infinite_language


def superfinite() -> Collection:
    """All finite prefix sets plus the full domain; not identifiable.

    L_1 is the whole domain and L_{i+1} = {1..i}.  The target is L_1, so
    identification keeps failing on finite evidence while generation does
    not; no tell-tale oracle exists for L_1.
    """
    def lang(i):
        if i == 1:
            return infinite_language("naturals", lambda x: True, 1)
        return finite_language(f"prefix<{i - 1}>", range(1, i))

    def subset(i, j):
        if i == 1:
            return j == 1
        if j == 1:
            return True
        return i <= j

    meta = FixtureMeta(
        target_index=1,
        equality_oracle=lambda i: i == 1,
        known_identifiable=False,
        known_trivial_for_generation=False,
    )
    return Collection("superfinite", lang, meta, subset_oracle=subset)


def evens() -> Collection:
    """Nested chain: naturals > even numbers > multiples of four.

    Target is L_2 (the evens).  Finite and nested, hence identifiable.
    """
    langs = {
        1: infinite_language("naturals", lambda x: True, 1),
        2: infinite_language("evens", lambda x: x % 2 == 0, 2),
        3: infinite_language("mult4", lambda x: x % 4 == 0, 4),
    }
    telltales = {1: (1,), 2: (2,), 3: (4,)}
    meta = FixtureMeta(
        target_index=2,
        equality_oracle=lambda i: i == 2,
        known_identifiable=True,
        known_trivial_for_generation=True,
    )
    return Collection(
        "evens", langs.__getitem__, meta, size=3,
        subset_oracle=lambda i, j: j <= i,
        telltale_oracle=telltales.__getitem__,
    )


def finlang() -> Collection:
    """L_i = {1..i}: a countable collection of finite languages."""
    meta = FixtureMeta(
        target_index=3,
        equality_oracle=lambda i: i == 3,
        known_identifiable=True,
        known_trivial_for_generation=False,
    )
    return Collection(
        "finlang",
        lambda i: finite_language(f"prefix<={i}", range(1, i + 1)),
        meta,
        subset_oracle=lambda i, j: i <= j,
        telltale_oracle=lambda i: (i,),
    )


def thresholds() -> Collection:
    """L_i = {i, i+1, ...}: downward-nested tails of the domain."""
    def lang(i):
        return infinite_language(f"tail>={i}", lambda x, i=i: x >= i, i)

    meta = FixtureMeta(
        target_index=3,
        equality_oracle=lambda i: i == 3,
        known_identifiable=True,
        known_trivial_for_generation=True,
    )
    return Collection(
        "thresholds", lang, meta,
        subset_oracle=lambda i, j: i >= j,
        telltale_oracle=lambda i: (i,),
    )


def _tree_path(index: int) -> tuple[int, ...]:
    """Path bits for the index-th finite path (depth-major, then lexicographic)."""
    depth = 1
    while index > (1 << (depth + 1)) - 2:
        depth += 1
    rank = index - ((1 << depth) - 2) - 1
    return tuple((rank >> (depth - 1 - k)) & 1 for k in range(depth))


def _path_language(path: tuple[int, ...]) -> Language:
    # Node for the path prefix of length k sits at domain position 2^k + value.
    elems = []
    value = 0
    for k, bit in enumerate(path):
        if bit:
            elems.append((1 << k) + value)
        value = (value << 1) | bit
    name = "path" + "".join(map(str, path))
    return finite_language(name, elems)


def littlestone() -> Collection:
    """Finite path-languages of the complete binary tree over the domain.

    Nodes are enumerated breadth-first (root = 1); each finite path through
    the tree contributes the set of nodes it labels 1.  The family shatters
    arbitrarily deep trees yet is identifiable (all languages are finite).
    Target is the path 11, i.e. {1, 3}.
    """
    def lang(i):
        return _path_language(_tree_path(i))

    def elem_set(i):
        return frozenset(lang(i).elements)

    target = frozenset({1, 3})
    meta = FixtureMeta(
        target_index=6,
        equality_oracle=lambda i: elem_set(i) == target,
        known_identifiable=True,
        known_trivial_for_generation=False,
    )
    return Collection(
        "littlestone", lang, meta,
        subset_oracle=lambda i, j: elem_set(i) <= elem_set(j),
        telltale_oracle=elem_set,
    )


def dupwrap(inner: Collection) -> Collection:
    """Interleave two copies of each language of ``inner``.

    Indices 2k-1 and 2k both map to the inner language k, so the wrapped
    collection exercises index canonicalization.
    """
    back = lambda i: (i + 1) // 2
    inner_meta = inner.meta
    meta = FixtureMeta(
        target_index=2 * inner_meta.target_index - 1,
        equality_oracle=lambda i: inner_meta.equality_oracle(back(i)),
        known_identifiable=inner_meta.known_identifiable,
        known_trivial_for_generation=inner_meta.known_trivial_for_generation,
        index_horizon=inner_meta.index_horizon,
        finite_intersection=inner_meta.finite_intersection,
    )
    subset = None
    if inner.has_subset_oracle:
        subset = lambda i, j: inner.subset(back(i), back(j))
    telltale = None
    if inner.has_telltale_oracle:
        telltale = lambda i: inner.telltale(back(i))
    return Collection(
        f"dupwrap-{inner.name}",
        lambda i: inner.language(back(i)),
        meta,
        size=None if inner.size is None else 2 * inner.size,
        subset_oracle=subset,
        telltale_oracle=telltale,
    )


def cosingleton() -> Collection:
    """L_i = everything except i; trivial for generation.

    Every finite subfamily intersects in a cofinite (hence infinite) set,
    so a generator needs no examples at all.
    """
    def lang(i):
        return infinite_language(f"co<{i}>", lambda x, i=i: x != i, 2)

    meta = FixtureMeta(
        target_index=1,
        equality_oracle=lambda i: i == 1,
        known_identifiable=True,
        known_trivial_for_generation=True,
    )
    return Collection(
        "cosingleton", lang, meta,
        subset_oracle=lambda i, j: i == j,
        telltale_oracle=lambda i: (),
    )


def genlb() -> Collection:
    """Two infinite languages whose intersection is the single element 1.

    The worst-case fixture for generation rate lower bounds: a training set
    of all-1s reveals nothing about which language is the target.
    """
    langs = {
        1: infinite_language("one-or-even", lambda x: x == 1 or x % 2 == 0, 2),
        2: infinite_language("one-or-odd", lambda x: x == 1 or (x % 2 == 1 and x >= 3), 2),
    }
    telltales = {1: (2,), 2: (3,)}
    meta = FixtureMeta(
        target_index=1,
        equality_oracle=lambda i: i == 1,
        known_identifiable=True,
        known_trivial_for_generation=False,
        finite_intersection=(1,),
    )
    return Collection(
        "genlb", langs.__getitem__, meta, size=2,
        subset_oracle=lambda i, j: i == j,
        telltale_oracle=telltales.__getitem__,
    )


def collection_from_sets(name, element_sets, target_index=1,
                         identifiable=True, trivial=False) -> Collection:
    """Ad-hoc finite collection from explicit element lists (handy in tests)."""
    langs = [finite_language(f"{name}<{k + 1}>", els)
             for k, els in enumerate(element_sets)]
    sets = [frozenset(l.elements) for l in langs]
    meta = FixtureMeta(
        target_index=target_index,
        equality_oracle=lambda i: sets[i - 1] == sets[target_index - 1],
        known_identifiable=identifiable,
        known_trivial_for_generation=trivial,
        index_horizon=len(langs),
    )
    return Collection(
        name, lambda i: langs[i - 1], meta, size=len(langs),
        subset_oracle=lambda i, j: sets[i - 1] <= sets[j - 1],
        telltale_oracle=lambda i: sets[i - 1],
    )


FIXTURES = {
    "superfinite": superfinite,
    "evens": evens,
    "finlang": finlang,
    "thresholds": thresholds,
    "littlestone": littlestone,
    "dupwrap-evens": lambda: dupwrap(evens()),
    "cosingleton": cosingleton,
    "genlb": genlb,
}


def make_fixture(name: str) -> Collection:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(
            f"unknown fixture {name!r}; valid: {', '.join(sorted(FIXTURES))}"
        ) from None

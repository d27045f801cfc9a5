"""Countable domain, languages, collections, oracles, and projections.

The domain is the positive integers with the canonical enumeration
``x_i = i`` (1-indexed).  A language is a decidable subset of the domain;
a collection is an indexed family of languages together with optional
subset / tell-tale oracles and ground-truth metadata used by experiments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import Exhausted


class Language:
    """A decidable subset of the positive integers.

    A language is either ``Finite`` (explicit element list) or ``Infinite``
    with a search-bound certificate ``b``: for every finite excluded set E,
    a member outside E exists at index <= max(E, default 0) + b.  The
    certificate makes "first unseen member" a terminating total operation.
    """

    __slots__ = ("name", "_contains", "elements", "search_bound")

    def __init__(self, name, contains=None, elements=None, search_bound=None):
        if (elements is None) == (search_bound is None):
            raise ValueError("exactly one of elements/search_bound required")
        self.name = name
        if elements is not None:
            self.elements = tuple(sorted(set(elements)))
            member_set = frozenset(self.elements)
            self._contains = member_set.__contains__
            self.search_bound = None
        else:
            if contains is None:
                raise ValueError("infinite language needs a membership predicate")
            if search_bound < 1:
                raise ValueError("search bound must be positive")
            self.elements = None
            self._contains = contains
            self.search_bound = search_bound

    @property
    def is_finite(self):
        return self.elements is not None

    def contains(self, x: int) -> bool:
        return bool(self._contains(x))

    def __contains__(self, x):
        return self.contains(x)

    def members_upto(self, m: int) -> list[int]:
        """Members among the first ``m`` domain elements, ascending."""
        if self.is_finite:
            return [x for x in self.elements if x <= m]
        return [x for x in range(1, m + 1) if self._contains(x)]

    def __repr__(self):
        kind = "finite" if self.is_finite else "infinite"
        return f"Language({self.name!r}, {kind})"


def finite_language(name: str, elements: Iterable[int]) -> Language:
    return Language(name, elements=elements)


def infinite_language(name: str, contains: Callable[[int], bool],
                      search_bound: int) -> Language:
    return Language(name, contains=contains, search_bound=search_bound)


@dataclass(frozen=True)
class FixtureMeta:
    """Ground truth a fixture knows about itself.

    ``target_index`` is the smallest index of the target language K and
    ``equality_oracle(i)`` decides L_i = K; language equality is not
    decidable from membership alone, so fixtures carry it analytically.
    """

    target_index: int
    equality_oracle: Callable[[int], bool]
    known_identifiable: bool
    known_trivial_for_generation: bool
    index_horizon: int = 64
    finite_intersection: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.target_index < 1:
            raise ValueError("target index must be >= 1")


class Collection:
    """An indexed countable family of languages, lazily evaluable.

    ``language_fn`` maps a 1-based index to a :class:`Language`.  ``size``
    is the number of languages for finite collections, ``None`` for
    infinite families (which are still evaluable up to any finite index).
    """

    def __init__(self, name, language_fn, meta, size=None,
                 subset_oracle=None, telltale_oracle=None):
        self.name = name
        self._language_fn = language_fn
        self._cache: dict[int, Language] = {}
        self.meta = meta
        self.size = size
        self._subset_oracle = subset_oracle
        self._telltale_oracle = telltale_oracle

    def language(self, i: int) -> Language:
        if i < 1:
            raise IndexError("language indices are 1-based")
        if self.size is not None and i > self.size:
            raise IndexError(f"collection {self.name!r} has {self.size} languages")
        lang = self._cache.get(i)
        if lang is None:
            lang = self._cache[i] = self._language_fn(i)
        return lang

    def membership(self, i: int, x: int) -> bool:
        return self.language(i).contains(x)

    @property
    def has_subset_oracle(self):
        return self._subset_oracle is not None

    @property
    def has_telltale_oracle(self):
        return self._telltale_oracle is not None

    def subset(self, i: int, j: int) -> bool:
        """Answer "is L_i a subset of L_j?" through the fixture's oracle."""
        if self._subset_oracle is None:
            raise LookupError(f"collection {self.name!r} has no subset oracle")
        return bool(self._subset_oracle(i, j))

    def telltale(self, i: int) -> frozenset[int]:
        if self._telltale_oracle is None:
            raise LookupError(f"collection {self.name!r} has no tell-tale oracle")
        return frozenset(self._telltale_oracle(i))

    @property
    def horizon(self) -> int:
        return self.meta.index_horizon

    def indices_upto(self, t: int) -> range:
        """Indices 1..t, clipped to the collection size."""
        top = t if self.size is None else min(t, self.size)
        return range(1, top + 1)

    def restrict(self, indices: Sequence[int]) -> "Collection":
        """Sub-collection containing only ``indices``, renumbered from 1."""
        indices = tuple(indices)
        pos = {old: new for new, old in enumerate(indices, start=1)}
        old_eq = self.meta.equality_oracle
        target = next((pos[i] for i in indices if old_eq(i)), 1)
        meta = FixtureMeta(
            target_index=target,
            equality_oracle=lambda i: old_eq(indices[i - 1]),
            known_identifiable=self.meta.known_identifiable,
            known_trivial_for_generation=self.meta.known_trivial_for_generation,
            index_horizon=len(indices),
        )
        sub_oracle = None
        if self._subset_oracle is not None:
            sub_oracle = lambda i, j: self._subset_oracle(indices[i - 1], indices[j - 1])
        return Collection(
            f"{self.name}[{','.join(map(str, indices))}]",
            lambda i: self.language(indices[i - 1]),
            meta,
            size=len(indices),
            subset_oracle=sub_oracle,
        )

    def __repr__(self):
        n = "inf" if self.size is None else self.size
        return f"Collection({self.name!r}, size={n})"


@dataclass(frozen=True)
class Projection:
    """Membership vector of one language on the domain prefix x_1..x_m."""

    prefix_length: int
    bits: tuple[int, ...]

    @property
    def members(self) -> frozenset[int]:
        return frozenset(k + 1 for k, b in enumerate(self.bits) if b)


class Sample:
    """The ordered multiset of observed examples.

    Positive-only samples hold domain elements; labeled samples hold
    ``(element, label)`` pairs with labels in {0, 1}.  An element may not
    appear with two different labels.
    """

    __slots__ = ("items", "is_labeled", "as_set")

    def __init__(self, items, is_labeled=False):
        items = tuple(items)
        if is_labeled:
            seen: dict[int, int] = {}
            for x, y in items:
                if x < 1 or y not in (0, 1):
                    raise ValueError(f"bad labeled example ({x}, {y})")
                if seen.setdefault(x, y) != y:
                    raise ValueError(f"element {x} appears with two labels")
            self.as_set = frozenset(seen)
        else:
            for x in items:
                if x < 1:
                    raise ValueError(f"domain elements are positive, got {x}")
            self.as_set = frozenset(items)
        self.items = items
        self.is_labeled = is_labeled

    @classmethod
    def positive(cls, xs: Iterable[int]) -> "Sample":
        return cls(xs, is_labeled=False)

    @classmethod
    def labeled(cls, pairs: Iterable[tuple[int, int]]) -> "Sample":
        return cls(pairs, is_labeled=True)

    @property
    def elements(self) -> tuple[int, ...]:
        if self.is_labeled:
            return tuple(x for x, _ in self.items)
        return self.items

    def prefix(self, k: int) -> "Sample":
        return Sample(self.items[:k], self.is_labeled)

    def slice(self, start: int, stop: int) -> "Sample":
        return Sample(self.items[start:stop], self.is_labeled)

    def __len__(self):
        return len(self.items)

    def __iter__(self):
        return iter(self.items)

    def __repr__(self):
        kind = "labeled" if self.is_labeled else "positive"
        return f"Sample({kind}, n={len(self.items)})"


def project(collection: Collection, i: int, m: int) -> Projection:
    """Exact membership vector of L_i on x_1..x_m (m membership queries)."""
    if i < 1 or m < 1:
        raise ValueError("index and prefix length must be >= 1")
    lang = collection.language(i)
    return Projection(m, tuple(int(lang.contains(x)) for x in range(1, m + 1)))


def is_consistent(collection: Collection, i: int, sample: Sample) -> bool:
    """True iff every sample element is a member of L_i."""
    if sample.is_labeled:
        raise ValueError("consistency is defined for positive-only samples")
    lang = collection.language(i)
    return all(lang.contains(x) for x in sample.as_set)


def first_unseen(language: Language, exclude) -> int:
    """Smallest-index member of ``language`` outside ``exclude``.

    Raises :class:`Exhausted` when a finite language is fully covered.  For
    infinite languages the scan terminates within the certificate bound.
    """
    exclude = frozenset(exclude)
    if language.is_finite:
        for x in language.elements:
            if x not in exclude:
                return x
        raise Exhausted(f"{language.name}: all members excluded")
    bound = (max(exclude) if exclude else 0) + language.search_bound
    for x in range(1, bound + 1):
        if x not in exclude and language.contains(x):
            return x
    raise RuntimeError(
        f"{language.name}: search-bound certificate violated (bound {bound})")


def critical_indices(collection: Collection, sample: Sample, t: int) -> list[int]:
    """Critical languages among indices <= t, via the subset oracle.

    L_j is critical w.r.t. the sample if it is consistent and, for every
    consistent L_i with i < j, L_j is a subset of L_i.  The lowest-index
    consistent language is always critical (vacuously).
    """
    consistent = [j for j in collection.indices_upto(t)
                  if is_consistent(collection, j, sample)]
    out = []
    for pos, j in enumerate(consistent):
        if all(collection.subset(j, i) for i in consistent[:pos]):
            out.append(j)
    return out

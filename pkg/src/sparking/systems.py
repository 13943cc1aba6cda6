"""Finite set systems over weighted ground elements.

A system is an ordered family A_1..A_k of finite sets together with a
table of pairwise-distinct rational element weights.  This module holds
the exactly-one operation, the parking-function / parking-set predicates
with their greedy permutation certificates, the reduction steps that the
mapping algorithms lean on, and the weight-rank statistic ``delta``.

Set indices are 1-based throughout the public API (valid indices are
1..k), matching the text file formats.  Element ids are positive
integers; the default weight of an element is its own id.
"""

import warnings
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

# Definitional checks enumerate all 2^k - 1 index subsets; refuse beyond this.
MAX_CHECK_SETS = 20


class Universe:
    """Weight table for ground elements; weights are pairwise distinct."""

    def __init__(self, weights):
        table = {}
        for element, w in dict(weights).items():
            if not isinstance(element, int) or element <= 0:
                raise ValueError(
                    f"element ids must be positive integers, got {element!r}")
            table[element] = Fraction(w)
        if len(set(table.values())) != len(table):
            raise ValueError("element weights must be pairwise distinct")
        self._table = table

    @classmethod
    def identity(cls, elements):
        """Universe in which every element weighs its own id."""
        return cls({e: e for e in elements})

    @property
    def elements(self):
        return frozenset(self._table)

    def weight(self, element):
        try:
            return self._table[element]
        except KeyError:
            raise ValueError(f"element {element} is not in the universe") from None

    def min_element(self, elements):
        """The unique lightest member of a non-empty collection."""
        items = list(elements)
        if not items:
            raise ValueError("cannot take the minimum of no elements")
        return min(items, key=self.weight)

    def __contains__(self, element):
        return element in self._table

    def __len__(self):
        return len(self._table)

    def __eq__(self, other):
        return isinstance(other, Universe) and self._table == other._table

    def __hash__(self):
        return hash(frozenset(self._table.items()))

    def __repr__(self):
        return f"Universe({dict(sorted(self._table.items()))!r})"


class SetSystem:
    """Ordered family of finite element sets over a shared universe.

    The family may contain empty or repeated sets; an empty member makes
    the parking-function family empty, so a warning is emitted when one
    is present.  k == 0 is allowed so that the reduction operations can
    shrink a one-set family to nothing.  Instances are immutable.
    """

    def __init__(self, sets, universe=None):
        self._sets = tuple(frozenset(s) for s in sets)
        covered = frozenset(e for s in self._sets for e in s)
        if universe is None:
            universe = Universe.identity(covered)
        stray = covered - universe.elements
        if stray:
            raise ValueError(f"elements {sorted(stray)} are not in the universe")
        if any(not s for s in self._sets):
            warnings.warn(
                "family contains an empty set: no parking function exists",
                stacklevel=2)
        self._universe = universe
        self._covered = covered

    @property
    def k(self):
        return len(self._sets)

    @property
    def sets(self):
        return self._sets

    @property
    def universe(self):
        return self._universe

    @property
    def covered(self):
        """Union of the family: the only elements that can ever matter."""
        return self._covered

    def set_at(self, index):
        """The family member at a 1-based index."""
        if not 1 <= index <= len(self._sets):
            raise ValueError(f"set index {index} out of range 1..{len(self._sets)}")
        return self._sets[index - 1]

    def weight(self, element):
        return self._universe.weight(element)

    def with_sets(self, sets):
        """A system over the same universe with a different family."""
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return SetSystem(sets, self._universe)

    def __eq__(self, other):
        return (isinstance(other, SetSystem)
                and self._sets == other._sets
                and self._universe == other._universe)

    def __hash__(self):
        return hash((self._sets, self._universe))

    def __repr__(self):
        inner = ", ".join("{" + ",".join(map(str, sorted(s))) + "}"
                          for s in self._sets)
        return f"SetSystem([{inner}])"


def _checked_indices(system, indices):
    chosen = sorted(set(indices))
    if not chosen:
        raise ValueError("index subset must be non-empty")
    if chosen[0] < 1 or chosen[-1] > system.k:
        raise ValueError(f"indices must lie in 1..{system.k}, got {chosen}")
    return chosen


def _checked_function(system, values):
    values = tuple(values)
    if len(values) != system.k:
        raise ValueError(f"expected {system.k} function values, got {len(values)}")
    for v in values:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"function values must be non-negative integers, got {v!r}")
    return values


def _checked_set(system, elements):
    chosen = frozenset(elements)
    if len(chosen) != system.k:
        raise ValueError(
            f"expected a {system.k}-element set, got {len(chosen)} elements")
    return chosen


def _subset_budget(k):
    if k > MAX_CHECK_SETS:
        raise ValueError(
            f"definitional check walks 2^k subsets; k={k} exceeds the cap of {MAX_CHECK_SETS}")


def _index_subsets(k):
    """Non-empty subsets of 1..k, in bitmask order."""
    for mask in range(1, 1 << k):
        yield [j + 1 for j in range(k) if mask >> j & 1]


def exactly_one_sets(sets):
    """Elements that belong to exactly one of the given sets."""
    tally = Counter()
    for s in sets:
        tally.update(s)
    return frozenset(e for e, n in tally.items() if n == 1)


def exactly_one(system, indices):
    """The exactly-one set of the subfamily named by ``indices``.

    Depends on ``indices`` only as a set; duplicates collapse.
    """
    chosen = _checked_indices(system, indices)
    return exactly_one_sets(system.set_at(i) for i in chosen)


def is_parking_function(system, values):
    """Definitional membership test, exhaustive over all 2^k - 1 subfamilies.

    ``values[i-1]`` is the value assigned to the i-th set.  Membership
    requires every non-empty subfamily to contain some index whose
    private part (its intersection with the subfamily's exactly-one set)
    is strictly larger than the assigned value.
    """
    f = _checked_function(system, values)
    _subset_budget(system.k)
    for subset in _index_subsets(system.k):
        pool = exactly_one_sets(system.set_at(i) for i in subset)
        if not any(len(system.set_at(i) & pool) > f[i - 1] for i in subset):
            return False
    return True


def parking_function_permutation(system, values):
    """Greedy permutation certificate for parking-function membership.

    At each step the smallest eligible index among the remaining ones is
    chosen: index i is eligible when its private part within the
    remaining subfamily exceeds values[i-1].  Returns the permutation as
    a tuple of 1-based indices, or None when no certificate exists
    (equivalently, when the values are not a parking function).
    """
    f = _checked_function(system, values)
    remaining = list(range(1, system.k + 1))
    pi = []
    while remaining:
        pool = exactly_one_sets(system.set_at(i) for i in remaining)
        pick = next((i for i in remaining
                     if len(system.set_at(i) & pool) > f[i - 1]), None)
        if pick is None:
            return None
        pi.append(pick)
        remaining.remove(pick)
    return tuple(pi)


def is_parking_set(system, elements):
    """Definitional membership test for k-element parking sets."""
    chosen = _checked_set(system, elements)
    _subset_budget(system.k)
    for subset in _index_subsets(system.k):
        if chosen.isdisjoint(exactly_one_sets(system.set_at(i) for i in subset)):
            return False
    return True


@dataclass(frozen=True)
class ParkingSetCertificate:
    """Permutation certificate for parking-set membership.

    At step i the candidate set meets the private part of set pi[i-1] in
    exactly one element, recorded in witnesses.
    """
    pi: tuple
    witnesses: tuple


def parking_set_permutation(system, elements):
    """Greedy permutation certificate for parking-set membership.

    Smallest eligible index at each step.  Returns a certificate whose
    witnesses are the single element contributed at each step, or None
    when the elements are not a parking set.
    """
    chosen = _checked_set(system, elements)
    remaining = list(range(1, system.k + 1))
    steps = []
    while remaining:
        pool = exactly_one_sets(system.set_at(i) for i in remaining)
        for i in remaining:
            hit = chosen & system.set_at(i) & pool
            if hit:
                break
        else:
            return None
        steps.append((i, hit))
        remaining.remove(i)
    # a completed certificate picks up exactly one element per step,
    # because the k step contributions are pairwise disjoint inside a
    # k-element set
    assert all(len(hit) == 1 for _, hit in steps)
    return ParkingSetCertificate(tuple(i for i, _ in steps),
                                 tuple(next(iter(hit)) for _, hit in steps))


def _owner_index(system, element):
    """Index of the unique set containing an exactly-one element."""
    return next(i for i in range(1, system.k + 1)
                if element in system.set_at(i))


def reduce_function(system, values, element):
    """Shrink a parking function by deleting one privately-owned element.

    ``element`` must belong to exactly one set of the whole family, say
    the s-th, and values[s-1] must be positive.  Returns the reduced
    system (with the element removed from that set) and the reduced
    values (with that entry decremented); the result is a parking
    function of the reduced system.
    """
    f = _checked_function(system, values)
    if not is_parking_function(system, f):
        raise ValueError("values are not a parking function of the system")
    pool = exactly_one(system, range(1, system.k + 1))
    if element not in pool:
        raise ValueError(f"element {element} does not belong to exactly one set")
    s = _owner_index(system, element)
    if f[s - 1] == 0:
        raise ValueError(f"value for set {s} is already zero")
    new_sets = list(system.sets)
    new_sets[s - 1] = new_sets[s - 1] - {element}
    new_values = list(f)
    new_values[s - 1] -= 1
    return system.with_sets(new_sets), tuple(new_values)


def drop_first_set(system, values):
    """Restrict a parking function to the family without its first set."""
    f = _checked_function(system, values)
    if system.k < 2:
        raise ValueError("need at least two sets to drop the first one")
    if not is_parking_function(system, f):
        raise ValueError("values are not a parking function of the system")
    return system.with_sets(system.sets[1:]), f[1:]


def reduce_set(system, elements, element):
    """Shrink a parking set along one privately-owned element.

    ``element`` must belong to exactly one set of the whole family, say
    the s-th.  When it lies outside the parking set, it is deleted from
    that set and the parking set is kept; when it lies inside, the s-th
    set is removed from the family together with the element.  Either
    way the result is a parking set of the reduced system.
    """
    chosen = _checked_set(system, elements)
    if not is_parking_set(system, chosen):
        raise ValueError("elements are not a parking set of the system")
    pool = exactly_one(system, range(1, system.k + 1))
    if element not in pool:
        raise ValueError(f"element {element} does not belong to exactly one set")
    s = _owner_index(system, element)
    if element not in chosen:
        new_sets = list(system.sets)
        new_sets[s - 1] = new_sets[s - 1] - {element}
        return system.with_sets(new_sets), chosen
    new_sets = [a for i, a in enumerate(system.sets, start=1) if i != s]
    return system.with_sets(new_sets), chosen - {element}


def delta(elements, element, universe=None):
    """Weight rank of ``element`` inside ``elements``.

    Counts the strictly lighter members; identity weights when no
    universe is supplied.  Ranges over 0..len(elements)-1 and is
    injective on the set.
    """
    chosen = frozenset(elements)
    if element not in chosen:
        raise ValueError(f"element {element} is not a member of the set")
    if universe is None:
        weigh = lambda e: e
    else:
        weigh = universe.weight
    reference = weigh(element)
    return sum(1 for e in chosen if weigh(e) < reference)

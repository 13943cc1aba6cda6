"""Brute-force enumeration of parking functions and parking sets.

These are the ground-truth oracles for everything else: full
enumeration of both families, full roundtrip verification of the two
mappings, an exhaustive small-system generator, seeded random systems,
and a bitmask fast path used for the large exhaustive sweeps.  The fast
path computes exactly what the object-level code computes and is
cross-checked against it.
"""

import warnings
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .bijections import rho, sigma
from .systems import (
    SetSystem,
    Universe,
    is_parking_function,
    is_parking_set,
)


def enumerate_parking_functions(system):
    """All parking functions, in lexicographic order of value vectors.

    The search box 0 <= values[i-1] <= |A_i| - 1 is complete: any larger
    entry already fails on the singleton subfamily.  Returns [] with a
    warning when some family member is empty.
    """
    if any(not a for a in system.sets):
        warnings.warn("family contains an empty set: no parking functions",
                      stacklevel=2)
        return []
    boxes = [range(len(a)) for a in system.sets]
    return [f for f in product(*boxes) if is_parking_function(system, f)]


def enumerate_parking_sets(system):
    """All parking sets, sorted by their sorted element tuples."""
    elements = sorted(system.covered)
    return [frozenset(combo) for combo in combinations(elements, system.k)
            if is_parking_set(system, frozenset(combo))]


@dataclass
class VerificationReport:
    """Outcome of a full bijection check over one system."""
    functions: list
    sets: list
    pairs: list              # (function values, mapped parking set)
    failures: list

    @property
    def n_functions(self):
        return len(self.functions)

    @property
    def n_sets(self):
        return len(self.sets)

    @property
    def counts_equal(self):
        return self.n_functions == self.n_sets

    @property
    def ok(self):
        return self.counts_equal and not self.failures

    def summary_line(self):
        verdict = "OK" if self.ok else "FAIL"
        return f"|P|={self.n_functions} |Q|={self.n_sets} {verdict}"

    def to_jsonable(self):
        return {
            "functions": [list(f) for f in self.functions],
            "sets": [sorted(d) for d in self.sets],
            "pairs": [[list(f), sorted(d)] for f, d in self.pairs],
            "failures": list(self.failures),
            "ok": self.ok,
        }


def verify_bijection(system):
    """Enumerate both families and check the two mappings are mutually
    inverse between them; failures are report content, never raises."""
    functions = enumerate_parking_functions(system)
    sets_ = enumerate_parking_sets(system)
    failures = []
    if len(functions) != len(sets_):
        failures.append(f"|P|={len(functions)} differs from |Q|={len(sets_)}")
    set_pool = set(sets_)
    function_pool = set(functions)
    forward = {}
    for f in functions:
        image, _ = sigma(system, f, trusted=True)
        forward[f] = image
        if image not in set_pool:
            failures.append(f"sigma({f}) = {sorted(image)} is not a parking set")
    backward = {}
    for d in sets_:
        values, _ = rho(system, d, trusted=True)
        backward[d] = values
        if values not in function_pool:
            failures.append(f"rho({sorted(d)}) = {values} is not a parking function")
    for f, image in forward.items():
        if backward.get(image) != f:
            failures.append(f"rho(sigma({f})) = {backward.get(image)} != {f}")
    for d, values in backward.items():
        if forward.get(values) != d:
            failures.append(
                f"sigma(rho({sorted(d)})) = {sorted(forward.get(values, ()))} != {sorted(d)}")
    pairs = [(f, forward[f]) for f in functions]
    return VerificationReport(functions, sets_, pairs, failures)


# ---------------------------------------------------------------------------
# system generators

def all_mask_systems(max_k, max_universe, canonical=True):
    """Exhaustively yield (k, m, masks) for small systems in bitmask form.

    Bit b of masks[j] says element b+1 belongs to the (j+1)-th set;
    weights are the identity, so lower bits are lighter.  Every universe
    element belongs to at least one set (inert elements change nothing),
    and with ``canonical`` only the lexicographically smallest relabeling
    of the set indices is emitted — all verified properties are
    invariant under that relabeling.
    """
    for k in range(1, max_k + 1):
        patterns = range(1, 1 << k)
        index_perms = list(permutations(range(k))) if k > 1 else []
        for m in range(max_universe + 1):
            for seq in product(patterns, repeat=m):
                masks = [0] * k
                for position, pattern in enumerate(seq):
                    bit = 1 << position
                    for j in range(k):
                        if pattern >> j & 1:
                            masks[j] |= bit
                masks = tuple(masks)
                if canonical and index_perms:
                    if any(tuple(masks[p[j]] for j in range(k)) < masks
                           for p in index_perms):
                        continue
                yield k, m, masks


def system_from_masks(masks):
    """Object-level system matching one generator entry."""
    sets = [frozenset(b + 1 for b in range(mask.bit_length()) if mask >> b & 1)
            for mask in masks]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return SetSystem(sets)


def all_set_systems(max_k, max_universe, canonical=True):
    """Object-level form of :func:`all_mask_systems`."""
    for _, _, masks in all_mask_systems(max_k, max_universe, canonical):
        yield system_from_masks(masks)


def random_set_system(rng, max_k=4, max_universe=6, shuffled_weights=False):
    """Seeded random system; elements 1..m, each kept per set with p=0.6."""
    k = rng.randint(1, max_k)
    m = rng.randint(1, max_universe)
    sets = [frozenset(e for e in range(1, m + 1) if rng.random() < 0.6)
            for _ in range(k)]
    ids = list(range(1, m + 1))
    if shuffled_weights:
        shuffled = ids[:]
        rng.shuffle(shuffled)
        universe = Universe(dict(zip(ids, shuffled)))
    else:
        universe = Universe.identity(ids)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return SetSystem(sets, universe)


# ---------------------------------------------------------------------------
# bitmask fast path for the exhaustive sweeps

def _sigma_masks(masks, values):
    """Bitmask run of the function-to-set mapping; None when it stalls."""
    working = list(masks)
    budget = list(values)
    active = list(range(len(masks)))
    out = 0
    while active:
        once = 0
        twice = 0
        for j in active:
            a = working[j]
            twice |= once & a
            once |= a
        pool = once & ~twice
        if not pool:
            return None
        e = pool & -pool
        for j in active:
            if working[j] & e:
                break
        if budget[j] > 0:
            working[j] &= ~e
            budget[j] -= 1
        else:
            out |= e
            active.remove(j)
    return out


def _rho_masks(masks, dmask):
    """Bitmask run of the set-to-function mapping; None when it stalls."""
    working = list(masks)
    active = list(range(len(masks)))
    counters = [0] * len(masks)
    while active:
        once = 0
        twice = 0
        for j in active:
            a = working[j]
            twice |= once & a
            once |= a
        pool = once & ~twice
        if not pool:
            return None
        e = pool & -pool
        for j in active:
            if working[j] & e:
                break
        if e & dmask:
            active.remove(j)
        else:
            working[j] &= ~e
            counters[j] += 1
    return tuple(counters)


def _scan_masks(k, masks):
    """Enumerate both families of one bitmask system and verify the
    roundtrips; returns (|P|, |Q|, failures)."""
    union = 0
    for a in masks:
        union |= a
    # per non-empty index subset: exactly-one mask and private-part sizes
    constraints = []
    for imask in range(1, 1 << k):
        selected = [j for j in range(k) if imask >> j & 1]
        once = 0
        twice = 0
        for j in selected:
            a = masks[j]
            twice |= once & a
            once |= a
        pool = once & ~twice
        constraints.append((pool, [(j, (masks[j] & pool).bit_count())
                                   for j in selected]))

    bits = [1 << b for b in range(union.bit_length()) if union >> b & 1]
    qs = []
    for combo in combinations(bits, k):
        d = 0
        for bit in combo:
            d |= bit
        if all(pool & d for pool, _ in constraints):
            qs.append(d)

    ps = []
    boxes = [range(a.bit_count()) for a in masks]
    for f in product(*boxes):
        good = True
        for _, sizes in constraints:
            for j, size in sizes:
                if size > f[j]:
                    break
            else:
                good = False
                break
        if good:
            ps.append(f)

    failures = []
    if len(ps) != len(qs):
        failures.append(f"|P|={len(ps)} |Q|={len(qs)}")
    forward = {f: _sigma_masks(masks, f) for f in ps}
    backward = {d: _rho_masks(masks, d) for d in qs}
    q_pool = set(qs)
    p_pool = set(ps)
    for f, d in forward.items():
        if d not in q_pool or backward.get(d) != f:
            failures.append(f"roundtrip failed at f={f}")
    for d, f in backward.items():
        if f not in p_pool or forward.get(f) != d:
            failures.append(f"roundtrip failed at D=0b{d:b}")
    return len(ps), len(qs), failures


@dataclass
class ScanReport:
    """Aggregate outcome of an exhaustive roundtrip sweep."""
    systems: int = 0
    members: int = 0         # total parking functions round-tripped
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def exhaustive_roundtrip_scan(max_k=3, max_universe=6, canonical=True,
                              cross_check_every=0):
    """Run the roundtrip verification over every generated system.

    With ``cross_check_every`` = N > 0, every N-th system is re-verified
    through the object-level code and the outcomes compared, guarding
    the fast path against drift.
    """
    report = ScanReport()
    for k, _, masks in all_mask_systems(max_k, max_universe, canonical):
        report.systems += 1
        n_p, n_q, failures = _scan_masks(k, masks)
        report.members += n_p
        if failures:
            report.failures.append(f"system {masks}: {failures}")
        if cross_check_every and report.systems % cross_check_every == 0:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                slow = verify_bijection(system_from_masks(masks))
            mask_pairs = {f: sum(1 << (e - 1) for e in d) for f, d in slow.pairs}
            fast_pairs = {f: _sigma_masks(masks, f) for f in slow.functions}
            if (not slow.ok or slow.n_functions != n_p or slow.n_sets != n_q
                    or mask_pairs != fast_pairs):
                report.failures.append(
                    f"fast path disagrees with object path on {masks}")
    return report

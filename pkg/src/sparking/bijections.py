"""The two mappings between parking sets and parking functions.

Both algorithms sweep the exactly-one set of the still-active subfamily
in weight order.  ``rho`` turns a parking set into a parking function by
counting deletions; ``sigma`` turns a parking function into a parking
set by spending its values as deletion budgets.  Each run returns a full
trace (deletions and fixations with global step numbers) so tests can
replay the execution.

The working state is recomputed per iteration rather than maintained
incrementally; at desk scale this keeps the code aligned with the step
structure of the algorithms.
"""

from dataclasses import dataclass

from .systems import (
    _checked_function,
    _checked_set,
    exactly_one_sets,
    is_parking_function,
    is_parking_set,
)


@dataclass(frozen=True)
class BijectionTrace:
    """Execution record of one mapping run.

    pi is the sequence of set indices fixed at each fixation, chosen the
    elements fixed alongside them, and deletions / fixations carry
    (step, set index, element) triples where step is the global 1-based
    loop-iteration number.
    """
    pi: tuple
    chosen: tuple
    deletions: tuple
    fixations: tuple

    def events(self):
        """All events merged in step order."""
        merged = [("DEL",) + d for d in self.deletions]
        merged += [("FIX",) + f for f in self.fixations]
        merged.sort(key=lambda ev: ev[1])
        return tuple(merged)

    def lines(self):
        """One-line-per-event serialization: ``KIND step set elem``."""
        return [f"{kind} {step} {index} {element}"
                for kind, step, index, element in self.events()]


def rho(system, elements, trusted=False):
    """Map a parking set to a parking function.

    Repeatedly takes the lightest element of the exactly-one set of the
    active subfamily: elements outside the input set are deleted from
    their owning set (incrementing that set's counter), elements inside
    it fix their owning set and retire it.  Returns the counter vector
    and the trace.

    With ``trusted`` the up-front membership check is skipped; a
    malformed input is then only caught when the exactly-one pool dries
    up mid-run.
    """
    chosen_input = _checked_set(system, elements)
    if not trusted and not is_parking_set(system, chosen_input):
        raise ValueError("input is not a parking set of the system")
    k = system.k
    working = {j: set(system.set_at(j)) for j in range(1, k + 1)}
    active = list(range(1, k + 1))
    counters = [0] * k
    unfixed = set(chosen_input)
    pi, chosen, deletions, fixations = [], [], [], []
    step = 0
    while active:
        step += 1
        pool = exactly_one_sets(working[j] for j in active)
        if not pool:
            raise ValueError(
                "exactly-one pool emptied mid-run: input is not a parking set")
        if unfixed.isdisjoint(pool):
            raise ValueError(
                "exactly-one pool avoids the remaining input elements: "
                "input is not a parking set")
        e = min(pool, key=system.weight)
        s = next(j for j in active if e in working[j])  # unique by construction
        if e not in chosen_input:
            working[s].remove(e)
            counters[s - 1] += 1
            deletions.append((step, s, e))
        else:
            pi.append(s)
            chosen.append(e)
            fixations.append((step, s, e))
            active.remove(s)
            unfixed.discard(e)
    assert frozenset(chosen) == chosen_input
    trace = BijectionTrace(tuple(pi), tuple(chosen),
                           tuple(deletions), tuple(fixations))
    return tuple(counters), trace


def sigma(system, values, trusted=False):
    """Map a parking function to a parking set.

    Same sweep as ``rho``, but the input values act as per-set deletion
    budgets: while the owning set still has budget, the lightest
    exactly-one element is deleted and the budget decremented; once the
    budget is spent, the element is fixed and the set retired.  Returns
    the set of fixed elements and the trace.
    """
    f = _checked_function(system, values)
    if not trusted and not is_parking_function(system, f):
        raise ValueError("input is not a parking function of the system")
    k = system.k
    working = {j: set(system.set_at(j)) for j in range(1, k + 1)}
    active = list(range(1, k + 1))
    budget = list(f)
    pi, chosen, deletions, fixations = [], [], [], []
    step = 0
    while active:
        step += 1
        pool = exactly_one_sets(working[j] for j in active)
        if not pool:
            raise ValueError(
                "exactly-one pool emptied mid-run: input is not a parking function")
        e = min(pool, key=system.weight)
        s = next(j for j in active if e in working[j])  # unique by construction
        if budget[s - 1] > 0:
            working[s].remove(e)
            budget[s - 1] -= 1
            deletions.append((step, s, e))
        else:
            pi.append(s)
            chosen.append(e)
            fixations.append((step, s, e))
            active.remove(s)
    assert len(set(chosen)) == k
    trace = BijectionTrace(tuple(pi), tuple(chosen),
                           tuple(deletions), tuple(fixations))
    return frozenset(chosen), trace

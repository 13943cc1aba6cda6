import random
from itertools import combinations, product

import pytest

from sparking import (
    Matroid,
    PreconditionError,
    cocircuit_union_subsets,
    corollary_full_cover,
    find_cocircuit_cover_families,
    parking_sets_vs_bases_circuit_side,
    parking_sets_vs_bases_cocircuit_side,
    theorem_bijection,
    uniform_matroid,
)
from sparking.graphs import complete_graph, graphic_matroid, star_sets


def _subsets(ground):
    elements = sorted(ground)
    for size in range(len(elements) + 1):
        yield from (frozenset(c) for c in combinations(elements, size))


# --- construction and structure --------------------------------------------

def test_uniform_matroid_counts():
    assert len(uniform_matroid(4, 2).bases) == 6
    assert uniform_matroid(3, 0).bases == (frozenset(),)
    assert uniform_matroid(3, 3).bases == (frozenset({1, 2, 3}),)
    with pytest.raises(ValueError):
        uniform_matroid(3, 4)


def test_exchange_validation_rejects_non_matroid():
    with pytest.raises(ValueError):
        Matroid({1, 2, 3, 4}, [{1, 2}, {3, 4}])


def test_bases_must_share_cardinality():
    with pytest.raises(ValueError):
        Matroid({1, 2, 3}, [{1}, {2, 3}])


def test_rank_examples(u42):
    assert u42.rank({1, 2, 3}) == 2
    assert u42.rank(set()) == 0
    assert u42.rank({1}) == 1
    with pytest.raises(ValueError):
        u42.rank({9})


def test_rank_monotone_and_submodular_exhaustively():
    for matroid in [uniform_matroid(4, 2), graphic_matroid(complete_graph(4)),
                    uniform_matroid(5, 3)]:
        ranks = {s: matroid.rank(s) for s in _subsets(matroid.ground)}
        subsets = list(ranks)
        for s in subsets:
            for t in subsets:
                if s <= t:
                    assert ranks[s] <= ranks[t]
                assert ranks[s | t] + ranks[s & t] <= ranks[s] + ranks[t]


def test_circuits_u42(u42):
    assert set(u42.circuits) == {frozenset(c) for c in combinations(range(1, 5), 3)}


def test_dual_involution_and_rank_sum():
    for matroid in [uniform_matroid(4, 2), uniform_matroid(5, 1),
                    graphic_matroid(complete_graph(4))]:
        assert matroid.dual.dual == matroid
        assert matroid.rank_value + matroid.dual.rank_value == len(matroid.ground)


def test_u42_is_self_dual(u42):
    assert u42.dual == u42
    assert set(u42.cocircuits) == set(u42.circuits)


def test_union_of_circuits(u42):
    assert u42.is_union_of_circuits({1, 2, 3})
    assert u42.is_union_of_circuits(set())
    assert not u42.is_union_of_circuits({1, 2})


def test_union_of_circuits_matches_direct_covering():
    for matroid in [uniform_matroid(4, 2), graphic_matroid(complete_graph(3)),
                    graphic_matroid(complete_graph(4))]:
        circuits = matroid.circuits
        for s in _subsets(matroid.ground):
            covered = frozenset(e for c in circuits if c <= s for e in c)
            assert matroid.is_union_of_circuits(s) == (covered == s)


def test_bases_containing(u42):
    assert u42.bases_containing({3, 4}) == [frozenset({3, 4})]
    assert len(u42.bases_containing(set())) == 6
    assert u42.bases_containing({1, 2, 3}) == []


def test_bracket_and_prime(u42):
    parts = [{1, 2, 3}, {1, 2, 4}]
    assert u42.bases_bracket(parts) == [frozenset({3, 4})]
    prime = u42.bases_prime(parts)
    assert len(prime) == 5
    assert frozenset({3, 4}) not in prime

    assert u42.bases_bracket([{1, 2, 3}]) == []
    assert set(u42.bases_prime([{1, 2, 3}])) == set(u42.bases)

    assert set(u42.bases_bracket([frozenset()])) == set(u42.bases)
    assert u42.bases_prime([frozenset()]) == []


# --- identity reports ---------------------------------------------------------

def test_circuit_side_u42(u42):
    report = parking_sets_vs_bases_circuit_side(u42, [{1, 2, 3}, {1, 2, 4}])
    assert report.equal
    assert report.parts_are_unions
    assert report.form == "complements-of-parking-sets"
    assert len(report.lhs) == 5


def test_circuit_side_rank_one():
    m = uniform_matroid(2, 1)
    report = parking_sets_vs_bases_circuit_side(m, [{1, 2}])
    assert report.equal
    assert report.lhs == frozenset({frozenset({1}), frozenset({2})})


def test_circuit_side_falls_back_without_unions(u42):
    report = parking_sets_vs_bases_circuit_side(u42, [{1, 2}, {1, 2, 4}])
    assert not report.parts_are_unions
    assert report.form == "bases-and-complements"
    assert report.equal


def test_circuit_side_k_precondition(u42):
    with pytest.raises(PreconditionError):
        parking_sets_vs_bases_circuit_side(u42, [{1, 2, 3}])


def test_cocircuit_side_k3_stars(k3):
    matroid = graphic_matroid(k3)
    report = parking_sets_vs_bases_cocircuit_side(matroid, star_sets(k3))
    assert report.equal
    assert report.form == "parking-sets"
    assert len(report.lhs) == 3


def test_cocircuit_side_u42(u42):
    report = parking_sets_vs_bases_cocircuit_side(u42, [{1, 2, 3}, {1, 2, 4}])
    assert report.equal
    assert len(report.lhs) == len(report.rhs) == 5


def test_cocircuit_side_with_empty_part(u42):
    report = parking_sets_vs_bases_cocircuit_side(u42, [frozenset(), {1, 2, 3}])
    assert report.lhs == frozenset()
    assert report.rhs == frozenset()
    assert report.equal


def test_cocircuit_side_k_precondition(u42):
    with pytest.raises(PreconditionError):
        parking_sets_vs_bases_cocircuit_side(u42, [{1, 2, 3}])


# --- theorem bijection ----------------------------------------------------------

def test_theorem_bijection_u42_table(u42):
    pairs = theorem_bijection(u42, [{1, 2, 3}, {1, 2, 4}], "circuit")
    assert pairs == [
        ((0, 0), frozenset({2, 4})),
        ((0, 1), frozenset({1, 4})),
        ((0, 2), frozenset({1, 2})),
        ((1, 0), frozenset({2, 3})),
        ((2, 0), frozenset({1, 3})),
    ]


def test_theorem_bijection_k3_stars(k3):
    matroid = graphic_matroid(k3)
    pairs = theorem_bijection(matroid, star_sets(k3), "cocircuit")
    assert {b for _, b in pairs} == set(matroid.bases)
    assert len(pairs) == 3


def test_theorem_bijection_rank_one_circuit_side():
    m = uniform_matroid(2, 1)
    pairs = theorem_bijection(m, [{1, 2}], "circuit")
    assert pairs == [((0,), frozenset({2})), ((1,), frozenset({1}))]


def test_theorem_bijection_with_custom_weights(u42):
    # a different weight order changes the pairing but still bijects
    # onto the same surviving bases
    parts = [{1, 2, 3}, {1, 2, 4}]
    weights = {1: 4, 2: 3, 3: 2, 4: 1}
    reweighted = theorem_bijection(u42, parts, "circuit", weights=weights)
    default = theorem_bijection(u42, parts, "circuit")
    assert {b for _, b in reweighted} == {b for _, b in default}
    assert reweighted != default


def test_theorem_bijection_names_failed_condition(u42):
    with pytest.raises(PreconditionError, match="k = "):
        theorem_bijection(u42, [{1, 2, 3}], "circuit")
    with pytest.raises(PreconditionError, match="part 1"):
        theorem_bijection(u42, [{1, 2}, {1, 2, 4}], "circuit")
    with pytest.raises(PreconditionError, match="cocircuit"):
        theorem_bijection(u42, [{1, 2}, {1, 2, 4}], "cocircuit")
    with pytest.raises(ValueError):
        theorem_bijection(u42, [{1, 2, 3}, {1, 2, 4}], "sideways")


def test_full_cover(u42, k3):
    matroid = graphic_matroid(k3)
    assert corollary_full_cover(matroid, star_sets(k3), "cocircuit") is True
    assert corollary_full_cover(u42, [{1, 2, 3}, {1, 2, 4}], "circuit") is False
    single_circuit = uniform_matroid(3, 2)
    assert corollary_full_cover(single_circuit, [{1, 2, 3}], "circuit") is True


# --- identity sweeps -----------------------------------------------------------------

def _circuit_union_subsets(matroid):
    return [s for s in _subsets(matroid.ground) if matroid.is_union_of_circuits(s)]


def test_intersection_identity_arbitrary_parts_small_uniform():
    rng = random.Random(2)
    for n in range(1, 5):
        for r in range(n + 1):
            matroid = uniform_matroid(n, r)
            k = n - r
            pool = list(_subsets(matroid.ground))
            tuples = (list(product(pool, repeat=k)) if len(pool) ** k <= 600
                      else [tuple(rng.choice(pool) for _ in range(k))
                            for _ in range(120)])
            for parts in tuples:
                assert parking_sets_vs_bases_circuit_side(matroid, parts).equal


def test_union_identity_circuit_union_parts(u42):
    matroid = graphic_matroid(complete_graph(3))
    for m in [u42, matroid]:
        pool = _circuit_union_subsets(m)
        k = len(m.ground) - m.rank_value
        for parts in product(pool, repeat=k):
            report = parking_sets_vs_bases_circuit_side(m, parts)
            assert report.parts_are_unions
            assert report.form == "complements-of-parking-sets"
            assert report.equal


# --- exploration aid ---------------------------------------------------------------

def test_cocircuit_union_subsets_k3(k3):
    matroid = graphic_matroid(k3)
    unions = cocircuit_union_subsets(matroid)
    assert frozenset({1, 2}) in unions          # vertex star at the root
    assert frozenset({1}) not in unions


def test_search_finds_star_family_for_graphs(k3):
    matroid = graphic_matroid(k3)
    families = find_cocircuit_cover_families(matroid)
    assert families
    family = families[0]
    assert len(family) == matroid.rank_value
    assert corollary_full_cover(matroid, family, "cocircuit")


def test_search_finds_nothing_for_u42(u42):
    assert find_cocircuit_cover_families(u42, limit=3) == []

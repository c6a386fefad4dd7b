from itertools import combinations, permutations, product

import pytest

from enchain.errors import CycleDetected, LabelOutOfRange, NotAnIdeal, SizeLimit
from enchain.posets import (
    Poset,
    all_natural_posets,
    antichains,
    comparability_orientations,
    ideal_lattice,
    linear_extensions,
    make_ideal,
    maximal_chains,
    poset_from_covers,
    poset_predicates,
    star,
)


def chain(n):
    return poset_from_covers(n, [(i, i + 1) for i in range(1, n)])


def antichain(n):
    return poset_from_covers(n, [])


V = poset_from_covers(3, [(1, 3), (2, 3)])


class TestConstruction:
    def test_v_is_natural(self):
        assert V.naturally_labeled
        assert V.pairs == {(1, 3), (2, 3)}

    def test_transitive_closure(self):
        p = poset_from_covers(3, [(1, 2), (2, 3)])
        assert p.less(1, 3)
        assert p.covers() == ((1, 2), (2, 3))

    def test_reversed_two_chain(self):
        p = poset_from_covers(2, [(2, 1)])
        assert not p.naturally_labeled
        assert p.natural_relabeling == (2, 1)
        assert p.canonicalized().pairs == {(1, 2)}

    def test_cycle(self):
        with pytest.raises(CycleDetected):
            poset_from_covers(2, [(1, 2), (2, 1)])

    def test_self_loop(self):
        with pytest.raises(CycleDetected):
            poset_from_covers(2, [(1, 1)])

    def test_label_out_of_range(self):
        with pytest.raises(LabelOutOfRange):
            poset_from_covers(2, [(1, 3)])

    def test_relabel_roundtrip(self):
        q = V.relabeled((3, 1, 2))
        assert q.pairs == {(2, 1), (3, 1)}
        assert q.canonicalized().n == 3


class TestAntichains:
    def test_two_chain(self):
        assert antichains(chain(2)) == [(), (1,), (2,)]

    def test_two_antichain(self):
        assert antichains(antichain(2)) == [(), (1,), (2,), (1, 2)]

    def test_v(self):
        assert antichains(V) == [(), (1,), (2,), (3,), (1, 2)]

    def test_independent_sets_of_comparability_graph(self):
        for n in range(1, 5):
            for poset in all_natural_posets(n):
                edges = set(poset_predicates(poset).comparability_edges)
                expected = sorted(
                    (
                        tuple(s)
                        for k in range(n + 1)
                        for s in combinations(range(1, n + 1), k)
                        if not any(
                            (min(a, b), max(a, b)) in edges for a, b in combinations(s, 2)
                        )
                    ),
                    key=lambda a: (len(a), a),
                )
                assert antichains(poset) == expected


class TestMaximalChains:
    def test_two_chain(self):
        assert maximal_chains(chain(2)) == [(1, 2)]

    def test_v(self):
        assert maximal_chains(V) == [(1, 3), (2, 3)]

    def test_three_antichain(self):
        assert maximal_chains(antichain(3)) == [(1,), (2,), (3,)]


class TestLinearExtensions:
    def test_chain_has_one(self):
        for n in (1, 3, 5):
            assert linear_extensions(chain(n)) == [tuple(range(1, n + 1))]

    def test_two_antichain(self):
        assert linear_extensions(antichain(2)) == [(1, 2), (2, 1)]

    def test_v(self):
        assert linear_extensions(V) == [(1, 2, 3), (2, 1, 3)]

    def test_guard(self):
        with pytest.raises(SizeLimit):
            linear_extensions(antichain(11))

    def test_exhaustive_against_filter(self):
        for n in range(1, 5):
            for poset in all_natural_posets(n):
                expected = [
                    w
                    for w in permutations(range(1, n + 1))
                    if all(w.index(a) < w.index(b) for a, b in poset.pairs)
                ]
                assert linear_extensions(poset) == sorted(expected)


class TestIdeals:
    def test_two_chain_lattice(self):
        ideals = ideal_lattice(chain(2))
        assert [sorted(i.elements) for i in ideals] == [[], [1], [1, 2]]

    def test_star_of_disjoint_singletons(self):
        p = antichain(2)
        result = star(p, frozenset({1}), frozenset({2}))
        assert result.elements == frozenset()

    def test_not_an_ideal(self):
        with pytest.raises(NotAnIdeal):
            make_ideal(chain(2), {2})

    def test_star_of_nested_is_smaller(self):
        for n in range(1, 6):
            for poset in all_natural_posets(n):
                ideals = ideal_lattice(poset)
                for i, j in product(ideals, repeat=2):
                    if i.elements <= j.elements:
                        assert star(poset, i, j).elements == i.elements

    def test_star_inside_intersection(self):
        for n in range(1, 6):
            for poset in all_natural_posets(n):
                ideals = ideal_lattice(poset)
                for i, j in combinations(ideals, 2):
                    assert star(poset, i, j).elements <= i.elements & j.elements

    def test_ideals_biject_with_antichains(self):
        for n in range(1, 6):
            for poset in all_natural_posets(n):
                ideals = ideal_lattice(poset)
                assert len(ideals) == len(antichains(poset))
                maxima = sorted(
                    (i.max_elements for i in ideals), key=lambda a: (len(a), a)
                )
                assert maxima == antichains(poset)


class TestPredicates:
    def test_v(self):
        pred = poset_predicates(V)
        assert pred.comparability_edges == ((1, 3), (2, 3))
        assert pred.width == 2 and pred.narrow

    def test_three_antichain(self):
        pred = poset_predicates(antichain(3))
        assert pred.comparability_edges == ()
        assert pred.width == 3 and not pred.narrow

    def test_three_chain(self):
        pred = poset_predicates(chain(3))
        assert pred.comparability_edges == ((1, 2), (1, 3), (2, 3))
        assert pred.width == 1 and pred.narrow


class TestGenerators:
    def test_natural_poset_counts(self):
        # independent brute force: subsets of increasing pairs, checked
        # transitively closed with a direct triple loop
        for n in range(1, 5):
            pair_list = [(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
            count = 0
            for mask in range(1 << len(pair_list)):
                rel = {p for bit, p in enumerate(pair_list) if mask >> bit & 1}
                if all(
                    (a, d) in rel
                    for a, b in rel
                    for c, d in rel
                    if b == c
                ):
                    count += 1
            assert len(all_natural_posets(n)) == count

    def test_known_sizes(self):
        assert [len(all_natural_posets(n)) for n in (1, 2, 3, 4, 5)] == [
            1,
            2,
            7,
            40,
            357,
        ]

    def test_orientations_share_comparability(self):
        for n in range(1, 5):
            for poset in all_natural_posets(n):
                edges = poset_predicates(poset).comparability_edges
                others = comparability_orientations(poset)
                assert poset in others
                for q in others:
                    assert poset_predicates(q).comparability_edges == edges

    def test_total_order_orientations(self):
        # the complete comparability graph admits one orientation per
        # permutation
        assert len(comparability_orientations(chain(3))) == 6

    def test_poset_hashable(self):
        assert len({Poset(2, {(1, 2)}), Poset(2, {(1, 2)})}) == 1

from fractions import Fraction
from itertools import product

import pytest

from enchain.errors import SizeLimit
from enchain.geometry import (
    EhrhartData,
    count_dilation,
    dilation_counts,
    ehrhart_polynomial,
    hstar_and_gamma,
    in_chain_polytope,
    in_enriched_polytope,
    lattice_points_ep,
    membership_oracle,
    volume_and_reflexivity,
)
from enchain.polynomials import IntPolynomial, RatPolynomial
from enchain.posets import all_natural_posets, antichains, poset_from_covers

chain2 = poset_from_covers(2, [(1, 2)])
anti2 = poset_from_covers(2, [])
V = poset_from_covers(3, [(1, 3), (2, 3)])
single = poset_from_covers(1, [])


class TestLatticePoints:
    def test_two_chain(self):
        assert lattice_points_ep(chain2) == [
            (-1, 0),
            (0, -1),
            (0, 0),
            (0, 1),
            (1, 0),
        ]

    def test_two_antichain(self):
        assert lattice_points_ep(anti2) == sorted(product((-1, 0, 1), repeat=2))

    def test_single_element(self):
        assert lattice_points_ep(single) == [(-1,), (0,), (1,)]

    def test_supports_are_antichains_and_complete(self):
        for n in range(1, 5):
            for poset in all_natural_posets(n):
                points = set(lattice_points_ep(poset))
                chains = set(antichains(poset))
                # every point's support is an antichain, every signed
                # antichain vector occurs, and the set is centrally symmetric
                for p in points:
                    support = tuple(i + 1 for i, c in enumerate(p) if c)
                    assert support in chains
                    assert tuple(-c for c in p) in points
                assert len(points) == sum(2 ** len(a) for a in chains)
                # agrees with the membership test over the full box
                box = {
                    p
                    for p in product((-1, 0, 1), repeat=n)
                    if in_enriched_polytope(poset, p, 1)
                }
                assert points == box


class TestCounting:
    def test_examples(self):
        assert count_dilation(chain2, 1) == 5
        assert count_dilation(anti2, 2) == 25
        assert count_dilation(chain2, 2) == 13

    def test_zero_dilation(self):
        assert count_dilation(V, 0) == 1

    def test_brute_force_signed_scan(self):
        for n in range(1, 5):
            for poset in all_natural_posets(n):
                for m in range(1, 4):
                    brute = sum(
                        1
                        for p in product(range(-m, m + 1), repeat=n)
                        if in_enriched_polytope(poset, p, m)
                    )
                    assert count_dilation(poset, m) == brute

    def test_guard(self):
        with pytest.raises(SizeLimit):
            count_dilation(V, 3, guard_points=10)
        with pytest.raises(SizeLimit):
            count_dilation(V, 1, max_n=2)

    def test_order_independence(self):
        # a non-naturally labeled orientation counts the same points
        flipped = poset_from_covers(3, [(3, 1), (3, 2)])
        for m in (1, 2, 3):
            assert count_dilation(flipped, m) == count_dilation(V, m)


class TestMembershipOracle:
    def test_vertices(self):
        for poset in (chain2, V):
            for a in antichains(poset):
                point = [0] * poset.n
                for e in a:
                    point[e - 1] = 1
                assert membership_oracle(poset, point)

    def test_outside(self):
        assert not membership_oracle(chain2, [1, 1])

    def test_half_point_on_v(self):
        point = [Fraction(1, 2)] * 3
        assert membership_oracle(V, point) == in_chain_polytope(V, point)

    def test_agreement_on_small_denominators(self):
        grid = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1)]
        for n in (1, 2, 3):
            for poset in all_natural_posets(n):
                for point in product(grid, repeat=n):
                    assert membership_oracle(poset, point) == in_chain_polytope(
                        poset, point
                    )

    def test_agreement_on_selected_four_element_posets(self):
        grid = [Fraction(0), Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(1)]
        selected = [
            poset_from_covers(4, []),
            poset_from_covers(4, [(1, 2), (2, 3), (3, 4)]),
            poset_from_covers(4, [(1, 3), (2, 3), (3, 4)]),
            poset_from_covers(4, [(1, 3), (2, 4)]),
        ]
        for poset in selected:
            for point in product(grid, repeat=4):
                assert membership_oracle(poset, point) == in_chain_polytope(
                    poset, point
                )


class TestEhrhart:
    def test_single(self):
        assert ehrhart_polynomial(single) == RatPolynomial([1, 2])

    def test_two_chain(self):
        assert ehrhart_polynomial(chain2) == RatPolynomial([1, 2, 2])

    def test_two_antichain(self):
        # (2m+1)^2
        assert ehrhart_polynomial(anti2) == RatPolynomial([1, 4, 4])

    def test_counts_match_polynomial(self):
        for n in range(1, 5):
            for poset in all_natural_posets(n):
                poly = ehrhart_polynomial(poset)
                for m, count in enumerate(dilation_counts(poset, n + 2)):
                    assert poly(m) == count


class TestHstarGamma:
    def test_three_antichain(self):
        data = hstar_and_gamma(poset_from_covers(3, []))
        assert data.hstar == IntPolynomial([1, 23, 23, 1])
        assert data.gamma == (1, 20)

    def test_chains_give_binomial(self):
        for n in range(1, 6):
            poset = poset_from_covers(n, [(i, i + 1) for i in range(1, n)])
            data = hstar_and_gamma(poset)
            from math import comb

            assert data.hstar == IntPolynomial([comb(n, k) for k in range(n + 1)])
            assert data.gamma == (1,) + (0,) * (n // 2)

    def test_v(self):
        data = hstar_and_gamma(V)
        assert data.hstar == IntPolynomial([1, 7, 7, 1])
        assert data.gamma == (1, 4)

    def test_is_ehrhart_data(self):
        data = hstar_and_gamma(chain2)
        assert isinstance(data, EhrhartData)
        assert data.volume == data.hstar(1)

    def test_palindromic_nonnegative_everywhere(self):
        for n in range(1, 5):
            for poset in all_natural_posets(n):
                data = hstar_and_gamma(poset)
                assert data.hstar.is_palindromic(n)
                assert all(c >= 0 for c in data.hstar.coeffs)
                assert all(g >= 0 for g in data.gamma)


class TestVolume:
    def test_two_antichain(self):
        result = volume_and_reflexivity(anti2)
        assert result.volume == 8 and result.reflexive

    def test_v(self):
        result = volume_and_reflexivity(V)
        assert result.volume == 16 and result.reflexive

    def test_single(self):
        result = volume_and_reflexivity(single)
        assert result.volume == 2 and result.reflexive

from itertools import permutations

import pytest

from enchain.errors import MalformedResult, SizeLimit
from enchain.gamma_complex import (
    DecoratedPermutation,
    build_complex,
    cover_reduce,
    decorate,
    grave_acute,
    iso_check,
    phi_face_map,
    s_p,
    vertex_adjacent,
)
from enchain.partitions import peak_polynomials
from enchain.polynomials import IntPolynomial
from enchain.posets import all_natural_posets, linear_extensions, poset_from_covers

anti2 = poset_from_covers(2, [])
anti3 = poset_from_covers(3, [])
anti4 = poset_from_covers(4, [])
V = poset_from_covers(3, [(1, 3), (2, 3)])


def left_peaks_oracle(word):
    # independent in-test reimplementation with the leading-zero sentinel
    padded = (0,) + tuple(word)
    return [
        i
        for i in range(1, len(word))
        if padded[i - 1] < padded[i] > padded[i + 1]
    ]


class TestDecorate:
    def test_descent_pair(self):
        decs = decorate((2, 1))
        assert len(decs) == 4
        assert {d.bars for d in decs} == {((1, c),) for c in range(4)}

    def test_identity_word(self):
        assert len(decorate((1, 2))) == 1
        assert decorate((1, 2))[0].bars == ()

    def test_nine_letter_example(self):
        word = (3, 2, 4, 1, 5, 7, 6, 8, 9)
        decs = decorate(word)
        assert len(decs) == 4 ** 3
        wanted = DecoratedPermutation(word, ((1, 2), (3, 1), (6, 0)))
        assert wanted in decs
        assert wanted.text() == "3|^2 24|^1 157|^0 689"

    def test_counts_match_left_peaks(self):
        for word in permutations(range(1, 5)):
            assert len(decorate(word)) == 4 ** len(left_peaks_oracle(word))

    def test_invalid_bars_rejected(self):
        with pytest.raises(MalformedResult):
            DecoratedPermutation((1, 2), ((1, 0),))
        with pytest.raises(MalformedResult):
            DecoratedPermutation((2, 1), ())


class TestGraveAcute:
    def test_examples(self):
        assert grave_acute((2, 4)) == ((2,), (4,))
        assert grave_acute((2,)) == ((2,), ())
        assert grave_acute((3, 2, 5, 6)) == ((3,), (2, 5, 6))
        assert grave_acute((3, 2, 1, 5, 6)) == ((3, 2), (1, 5, 6))

    def test_rejects_interior_peak(self):
        with pytest.raises(MalformedResult):
            grave_acute((1, 3, 2))


class TestCoverReduce:
    def test_middle_bar_of_running_example(self):
        d = DecoratedPermutation((3, 2, 4, 1, 5, 7, 6, 8, 9), ((1, 2), (3, 1), (6, 0)))
        reduced = cover_reduce(d, 2)
        assert reduced.word == (3, 2, 1, 4, 5, 7, 6, 8, 9)
        assert reduced.bars == ((1, 2), (6, 0))
        assert reduced.text() == "3|^2 21457|^0 689"

    def test_only_bar_of_two_one(self):
        d = DecoratedPermutation((2, 1), ((1, 3),))
        with pytest.raises(MalformedResult):
            cover_reduce(d, 1)

    def test_only_bar_of_one_three_two(self):
        d = DecoratedPermutation((1, 3, 2), ((2, 1),))
        reduced = cover_reduce(d, 1)
        assert reduced.word == (1, 2, 3) and reduced.bars == ()

    def test_well_formed_covers_stay_in_sp(self):
        for n in (2, 3, 4):
            for poset in all_natural_posets(n):
                elements = set(s_p(poset))
                for d in elements:
                    for i in range(1, d.bar_count() + 1):
                        try:
                            reduced = cover_reduce(d, i)
                        except MalformedResult:
                            continue
                        assert reduced in elements

    def test_grading_drops_by_one(self):
        d = DecoratedPermutation((2, 1, 4, 3), ((1, 0), (3, 1)))
        assert cover_reduce(d, 2).bar_count() == 1


class TestAdjacency:
    def test_splice_across_prefix_lengths(self):
        u = DecoratedPermutation((2, 1, 3, 4), ((1, 0),))
        v = DecoratedPermutation((1, 2, 4, 3), ((3, 1),))
        assert vertex_adjacent(u, v)
        assert vertex_adjacent(v, u)

    def test_repeated_letters_block_adjacency(self):
        u = DecoratedPermutation((2, 1, 3), ((1, 0),))
        v = DecoratedPermutation((1, 3, 2), ((2, 1),))
        assert not vertex_adjacent(u, v)

    def test_equal_prefix_lengths(self):
        u = DecoratedPermutation((2, 1), ((1, 0),))
        v = DecoratedPermutation((2, 1), ((1, 1),))
        assert not vertex_adjacent(u, v)

    def test_absorbed_letter_pair(self):
        # the pair arising from 3|24|1, where the left vertex's decreasing
        # run claims a letter of the right vertex's block
        u = DecoratedPermutation((3, 2, 1, 4), ((1, 0),))
        v = DecoratedPermutation((2, 3, 4, 1), ((3, 1),))
        assert vertex_adjacent(u, v)


class TestComplex:
    def test_two_antichain(self):
        complex_ = build_complex(anti2)
        assert complex_.f_vector == (1, 4)
        assert complex_.edges == ()
        assert [v.text() for v in complex_.vertices] == [
            "2|^0 1",
            "2|^1 1",
            "2|^2 1",
            "2|^3 1",
        ]

    def test_v_poset(self):
        complex_ = build_complex(V)
        assert complex_.f_vector == (1, 4)

    def test_four_antichain_against_permutation_scan(self):
        one_peak = sum(
            1 for w in permutations(range(1, 5)) if len(left_peaks_oracle(w)) == 1
        )
        two_peak = sum(
            1 for w in permutations(range(1, 5)) if len(left_peaks_oracle(w)) == 2
        )
        assert (one_peak, two_peak) == (18, 5)
        complex_ = build_complex(anti4)
        assert complex_.f_vector == (1, 4 * one_peak, 16 * two_peak)
        assert complex_.f_vector == (1, 72, 80)
        assert complex_.kruskal_katona

    def test_f_polynomial_is_scaled_left_peak(self):
        for n in (1, 2, 3, 4):
            for poset in all_natural_posets(n):
                complex_ = build_complex(poset)
                expected = peak_polynomials(poset).left_peak.scale_powers(4)
                assert complex_.f_polynomial == expected

    def test_decoration_count_identity(self):
        # sum over decorated extensions of x^bars equals W_left(4x)
        for n in (1, 2, 3, 4):
            for poset in all_natural_posets(n):
                counts = {}
                for d in s_p(poset):
                    counts[d.bar_count()] = counts.get(d.bar_count(), 0) + 1
                poly = IntPolynomial(
                    [counts.get(k, 0) for k in range(max(counts) + 1)]
                )
                assert poly == peak_polynomials(poset).left_peak.scale_powers(4)

    def test_guard(self):
        with pytest.raises(SizeLimit):
            build_complex(poset_from_covers(7, []), max_n=6)


class TestPhi:
    def test_two_bar_example(self):
        d = DecoratedPermutation((2, 1, 4, 3), ((1, 0), (3, 1)))
        image = phi_face_map(d)
        assert [v.text() for v in image] == ["2|^0 134", "124|^1 3"]

    def test_no_bars_empty_face(self):
        assert phi_face_map(DecoratedPermutation((1, 2, 3), ())) == []

    def test_single_bar_fixed_point(self):
        d = DecoratedPermutation((2, 1), ((1, 2),))
        assert phi_face_map(d) == [d]

    def test_iso_small(self):
        for n in (1, 2, 3, 4):
            for poset in all_natural_posets(n):
                report = iso_check(poset)
                assert report.bijective
                assert report.grade_preserving
                assert report.covers_consistent
                assert report.element_count == report.face_count

    def test_malformed_frequency_reported(self):
        report = iso_check(anti2)
        assert report.malformed_covers == 4 and report.total_covers == 4

    def test_full_antichain_uses_every_extension(self):
        # for the antichain the decorated extensions are all of Dec_n
        for n in (2, 3):
            poset = poset_from_covers(n, [])
            assert len(linear_extensions(poset)) == len(
                list(permutations(range(1, n + 1)))
            )
            total = sum(
                4 ** len(left_peaks_oracle(w))
                for w in permutations(range(1, n + 1))
            )
            assert len(s_p(poset)) == total

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lineargames import (
    Coalition,
    CoalitionError,
    build_m_poset,
    format_coalition,
    parse_coalition,
    rank_generating_coefficients,
)
from lineargames.coalitions import shift_leq, shift_leq_masks

from oracles import brute_shift_leq


def members_of(n, mask):
    return [i + 1 for i in range(n) if mask >> i & 1]


class TestShiftOrder:
    def test_matches_definition_exhaustively(self):
        for n in range(1, 7):
            for a in range(1 << n):
                for b in range(1 << n):
                    expected = brute_shift_leq(members_of(n, a), members_of(n, b))
                    assert shift_leq_masks(a, b, n) == expected

    def test_known_pairs(self):
        a = Coalition.from_members(5, [3, 2, 1])
        b = Coalition.from_members(5, [4, 2, 1])
        assert shift_leq(a, b)
        c = Coalition.from_members(5, [4, 3])
        # incomparable: sizes prevent one direction, entries the other
        assert not shift_leq(c, a)
        assert not shift_leq(a, c)

    @given(st.integers(1, 7), st.data())
    def test_partial_order_axioms(self, n, data):
        a = data.draw(st.integers(0, (1 << n) - 1))
        b = data.draw(st.integers(0, (1 << n) - 1))
        c = data.draw(st.integers(0, (1 << n) - 1))
        assert shift_leq_masks(a, a, n)  # reflexive
        if shift_leq_masks(a, b, n) and shift_leq_masks(b, a, n):
            assert a == b  # antisymmetric
        if shift_leq_masks(a, b, n) and shift_leq_masks(b, c, n):
            assert shift_leq_masks(a, c, n)  # transitive


class TestCoalitionPoset:
    def test_m3_structure(self):
        p = build_m_poset(3)
        assert (1 << p.n) == 8
        c2 = Coalition.from_members(3, [2]).mask
        c3 = Coalition.from_members(3, [3]).mask
        c21 = Coalition.from_members(3, [2, 1]).mask
        c31 = Coalition.from_members(3, [3, 1]).mask
        assert set(p.covers[c2]) == {c3, c21}
        assert c31 in p.covers[c3]
        assert c31 in p.covers[c21]

    def test_covers_equal_transitive_reduction(self):
        # Oracle: covers of the order relation computed set-theoretically.
        for n in range(1, 6):
            p = build_m_poset(n)
            for a in range(1 << n):
                expected = set()
                for b in range(1 << n):
                    if b == a or not shift_leq_masks(a, b, n):
                        continue
                    if not any(
                        c != a and c != b
                        and shift_leq_masks(a, c, n)
                        and shift_leq_masks(c, b, n)
                        for c in range(1 << n)
                    ):
                        expected.add(b)
                assert set(p.covers[a]) == expected, (n, a)

    def test_rank_is_member_sum(self):
        for n in range(1, 7):
            for m in range(1 << n):
                assert Coalition(n, m).rank() == sum(members_of(n, m))

    def test_rank_generating_function(self):
        # Independent oracle: histogram of coalition member-index sums.
        for n in range(1, 9):
            hist = [0] * (n * (n + 1) // 2 + 1)
            for m in range(1 << n):
                hist[sum(members_of(n, m))] += 1
            assert rank_generating_coefficients(n) == hist

    def test_rank_coefficients_unimodal(self):
        for n in range(1, 9):
            coeffs = rank_generating_coefficients(n)
            peak = coeffs.index(max(coeffs))
            assert all(coeffs[i] <= coeffs[i + 1] for i in range(peak))
            assert all(
                coeffs[i] >= coeffs[i + 1] for i in range(peak, len(coeffs) - 1)
            )


class TestTextForms:
    def test_digit_round_trip(self):
        for n in range(1, 10):
            rnd = random.Random(n)
            for _ in range(50):
                m = rnd.randint(1, (1 << n) - 1)
                c = Coalition(n, m)
                assert parse_coalition(format_coalition(c), n) == c

    def test_braced_form(self):
        c = Coalition.from_members(12, [12, 10, 3])
        text = format_coalition(c)
        assert "{" in text
        assert parse_coalition(text, 12) == c

    def test_rejects_garbage(self):
        with pytest.raises(CoalitionError):
            parse_coalition("90", 5)  # voter out of range
        with pytest.raises(CoalitionError):
            parse_coalition("122", 5)  # repeated voter
        with pytest.raises(CoalitionError):
            parse_coalition("123", 5)  # not strictly decreasing

    @settings(max_examples=60)
    @given(st.integers(1, 9), st.data())
    def test_parse_format_identity(self, n, data):
        m = data.draw(st.integers(0, (1 << n) - 1))
        c = Coalition(n, m)
        assert parse_coalition(format_coalition(c), n) == c


class TestCoverStructure:
    def test_cover_moves(self):
        # Covers are: add voter 1, or bump a member into the free slot above.
        p = build_m_poset(4)
        a = Coalition.from_members(4, [3, 2]).mask
        ups = {
            tuple(sorted(members_of(4, b), reverse=True)) for b in p.covers[a]
        }
        assert ups == {(4, 2), (3, 2, 1)}

    def test_graded_by_rank(self):
        for n in range(1, 7):
            p = build_m_poset(n)
            for a in range(1 << n):
                for b in p.covers[a]:
                    assert Coalition(n, b).rank() == Coalition(n, a).rank() + 1

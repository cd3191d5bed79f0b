"""Array-code tests: syndromes, burst-erasure decoding, bounded deletions."""

from itertools import product

import pytest

from syndef.array_code import (
    ArrayCodeParams,
    array_bounded_decode,
    array_erasure_decode,
    array_single_bounded_decode,
    array_syndromes,
    is_member,
)
from syndef.binary import vt_syndrome
from syndef.core import DecodeFailure, ParameterError


def b(text):
    return tuple(int(c) for c in text)


def all_words(n):
    return product((0, 1), repeat=n)


def erase(word, bursts):
    out = list(word)
    for s, l in bursts:
        for pos in range(s, s + l):
            out[pos - 1] = None
    return out


def delete2(word, d1, d2):
    lo, hi = sorted((d1, d2))
    return word[:lo - 1] + word[lo:hi - 1] + word[hi:]


class TestSyndromes:
    def test_hand_evaluated(self):
        p = array_syndromes(b("1010"), 2)
        assert p.row_sums == (2, 0)
        assert p.weighted_vt == 3
        assert p.modulus == 36

    def test_zero_word(self):
        p = array_syndromes((0,) * 9, 3)
        assert p.row_sums == (0, 0, 0)
        assert p.weighted_vt == 0

    def test_two_evaluation_paths_agree(self):
        # direct formula vs. materialised row extraction
        P = 2
        for x in all_words(8):
            p = array_syndromes(x, P)
            rows = [x[i::P] for i in range(P)]
            assert p.row_sums == tuple(sum(r) % 3 for r in rows)
            assert p.weighted_vt == sum(
                3 ** i * vt_syndrome(r) for i, r in enumerate(rows)) % (9 * 8)

    def test_padding(self):
        p = array_syndromes(b("10110"), 3)
        assert p.padded == 6 and p.cols == 2


class TestErasureDecode:
    def test_no_erasure_identity(self):
        x = b("10110100")
        p = array_syndromes(x, 2)
        assert array_erasure_decode(list(x), [(1, 2), (5, 2)], p) == x

    def test_exhaustive_roundtrip_n8_p2(self):
        P, n = 2, 8
        for x in all_words(n):
            p = array_syndromes(x, P)
            for s1 in range(1, n - P + 2):
                for s2 in range(s1, n - P + 2):
                    bursts = [(s1, P), (s2, P)]
                    assert array_erasure_decode(erase(x, bursts), bursts, p) == x

    def test_unique_ambiguous_assignment(self):
        # whenever rows are ambiguous, exactly one assignment matches the
        # weighted residue: every wrong assignment has a nonzero discriminant
        from syndef.array_code import _normalize_windows
        P, n = 2, 8
        checked = 0
        for x in all_words(n):
            p = array_syndromes(x, P)
            for s1 in range(1, n - P + 2):
                for s2 in range(s1 + P, n - P + 2):
                    windows = _normalize_windows([(s1, P), (s2, P)], P, p.padded)
                    erased = {pos for s, l in windows for pos in range(s, s + l)}
                    count = 0
                    for y in all_words(n):
                        if (all(yb == xb for i, (yb, xb) in enumerate(zip(y, x), 1)
                                if i not in erased) and is_member(y, p)):
                            count += 1
                    assert count == 1
                    checked += 1
            if checked > 400:
                break

    def test_short_bursts_widened(self):
        x = b("110101001011")
        p = array_syndromes(x, 3)
        bursts = [(2, 1), (7, 2)]
        assert array_erasure_decode(erase(x, bursts), bursts, p) == x

    def test_overlapping_bursts_merged(self):
        x = b("110101001011")
        p = array_syndromes(x, 3)
        bursts = [(4, 3), (5, 3)]
        assert array_erasure_decode(erase(x, bursts), bursts, p) == x

    def test_erasure_outside_burst_rejected(self):
        x = b("10110100")
        p = array_syndromes(x, 2)
        bad = erase(x, [(1, 2)])
        with pytest.raises(ParameterError):
            array_erasure_decode(bad, [(4, 2), (7, 2)], p)


class TestBoundedDecode:
    def test_exhaustive_roundtrip_n8_p2(self):
        P, n = 2, 8
        for x in all_words(n):
            p = array_syndromes(x, P)
            for d1 in range(1, n + 1):
                for d2 in range(d1 + 1, n + 1):
                    s1 = min(d1, n - P + 1)
                    s2 = min(d2, n - P + 1)
                    got = array_bounded_decode(
                        delete2(x, d1, d2), [(s1, P), (s2, P)], p)
                    assert got == x

    def test_interval_beyond_word_rejected(self):
        p = array_syndromes((0,) * 8, 2)
        with pytest.raises(ParameterError):
            array_bounded_decode((0,) * 6, [(1, 2), (8, 2)], p)

    def test_wrong_received_length(self):
        p = array_syndromes((0,) * 8, 2)
        with pytest.raises(ParameterError):
            array_bounded_decode((0,) * 5, [(1, 2), (4, 2)], p)

    def test_best_residue_redundancy(self):
        # the largest syndrome class at n=12, P=2 meets the pigeonhole bound
        import math
        n, P = 12, 2
        counts = {}
        for x in all_words(n):
            p = array_syndromes(x, P)
            key = (p.row_sums, p.weighted_vt)
            counts[key] = counts.get(key, 0) + 1
        best = max(counts.values())
        redundancy = n - math.log2(best)
        assert redundancy <= math.log2(n) + 2 * P * math.log2(3) + 1e-9


class TestSingleBoundedDecode:
    def test_roundtrip_with_window(self):
        P, n = 3, 12
        for x in list(all_words(n))[::37]:
            p = array_syndromes(x, P)
            for d in range(1, n + 1):
                s = max(1, min(d - 1, n - P + 1))
                assert array_single_bounded_decode(
                    x[:d - 1] + x[d:], (s, P), p) == x

    def test_inconsistent_row_rejected(self):
        x = b("11111111")
        p = array_syndromes(x, 2)
        with pytest.raises(DecodeFailure):
            # received from a different strand family; rows cannot balance
            array_single_bounded_decode(b("0000000"), (1, 2), p)

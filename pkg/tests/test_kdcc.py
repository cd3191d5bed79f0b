"""Known-defect code tests: constructions, decoders, and the code property."""

from itertools import combinations

import pytest

from syndef.core import DecodeFailure, ParameterError, all_strands, apply_defects, cycles, signature
from syndef.kdcc import (
    KdccSpec,
    KnownDefectInstance,
    algorithm1_recover,
    array2_params,
    best_residues,
    decode,
    decode_array2,
    decode_sum1,
    decode_svt1,
    enumerate_codebook,
    even_position_sum,
    membership,
    spec_for_strand,
)


def s(text):
    return tuple(int(c) for c in text)


class TestMembership:
    def test_sum1_hand_case(self):
        x = s("12341")
        assert even_position_sum(x) == 6
        assert membership(KdccSpec("sum1", 5, {"a": 2}), x)
        assert not membership(KdccSpec("sum1", 5, {"a": 1}), x)

    def test_svt1_nondecreasing_strand(self):
        from syndef.binary import vt_syndrome
        n = 6
        x = (1, 2, 3, 4, 4, 4)
        sig = signature(x)
        assert sig == (1,) * (n - 1)
        a = vt_syndrome(sig) % 5
        assert membership(KdccSpec("svt1", n, {"a": a, "b": (n - 1) % 2}), x)

    def test_sum1_n1_vacuous(self):
        assert membership(KdccSpec("sum1", 1, {"a": 0}), (3,))
        assert not membership(KdccSpec("sum1", 1, {"a": 1}), (3,))

    def test_small_n_rejected_for_signature_families(self):
        with pytest.raises(ParameterError):
            KdccSpec("svt1", 2, {"a": 0, "b": 0})
        with pytest.raises(ParameterError):
            KdccSpec("array2", 1, {"a": [0] * 9, "b": 0})


class TestDecodeSum1:
    def test_paper_single_option(self):
        # 2231 with cycle 5 defective admits exactly one reinsertion 21231
        x = s("21231")
        spec = spec_for_strand("sum1", x)
        inst = KnownDefectInstance(received=s("2231"), delta=(5,), n=5)
        assert decode_sum1(inst, spec.residues["a"]) == x

    def test_full_length_identity(self):
        inst = KnownDefectInstance(received=s("12341"), delta=(9,), n=5)
        assert decode_sum1(inst, 2) == s("12341")

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_roundtrip_exhaustive(self, n):
        for x in all_strands(n):
            spec = spec_for_strand("sum1", x)
            for d in cycles(x):
                inst = KnownDefectInstance(apply_defects(x, {d}), (d,), n)
                assert decode_sum1(inst, spec.residues["a"]) == x


class TestAlgorithm1:
    def test_paper_two_defect_walkthrough(self):
        x = tuple((i % 4) + 1 if (i % 4) + 1 <= 4 else 0 for i in range(18))
        x = tuple((i % 4) + 1 for i in range(18))
        assert cycles(x) == tuple(range(1, 19))
        delta = (5, 17)
        received = apply_defects(x, set(delta))
        assert len(received) == 16
        assert algorithm1_recover(received, delta, signature(x)) == x

    def test_empty_delta_identity(self):
        assert algorithm1_recover(s("1234"), (), (1, 1, 1)) == s("1234")

    @pytest.mark.parametrize("n", [3, 4])
    def test_exhaustive_small(self, n):
        # single defects always recover; interacting double defects can be
        # ambiguous even with the full signature in hand (see the twin test)
        for x in all_strands(n):
            sig = signature(x)
            sched = cycles(x)
            for t in (1, 2):
                for delta in combinations(sched, t):
                    received = apply_defects(x, set(delta))
                    if t == 1 or two_defect_twins(x, delta) == {x}:
                        assert algorithm1_recover(received, delta, sig) == x
                    else:
                        with pytest.raises(DecodeFailure):
                            algorithm1_recover(received, delta, sig)

    def test_inconsistent_input_fails(self):
        # the only cycle-1 insertion into 11 gives 111 with signature 11
        with pytest.raises(DecodeFailure):
            algorithm1_recover(s("11"), (1,), (0, 0))


class TestDecodeSvt1:
    def test_full_length_identity(self):
        x = (1, 2, 4, 1, 3)
        spec = spec_for_strand("svt1", x)
        inst = KnownDefectInstance(x, (12,), 5)
        assert decode_svt1(inst, spec.residues["a"], spec.residues["b"]) == x

    @pytest.mark.parametrize("n", [4, 5])
    def test_roundtrip_exhaustive(self, n):
        for x in all_strands(n):
            spec = spec_for_strand("svt1", x)
            a, bb = spec.residues["a"], spec.residues["b"]
            for d in cycles(x):
                inst = KnownDefectInstance(apply_defects(x, {d}), (d,), n)
                assert decode_svt1(inst, a, bb) == x

    def test_code_size_bound(self):
        spec, size = best_residues("svt1", 6)
        assert size >= 4 ** 6 / 10


def two_defect_twins(x, delta):
    """Oracle: all strands indistinguishable from x under delta even given the
    full signature (the code's syndromes are signature-bound).  Built on the
    confusable ball, which test_core checks against a full alphabet scan."""
    from syndef.core import confusable_ball
    sig = signature(x)
    return {y for y in confusable_ball(x, set(delta)) if signature(y) == sig}


def test_twin_oracle_matches_full_scan_n4():
    for x in list(all_strands(4))[17::41]:
        sig = signature(x)
        for delta in combinations(cycles(x), 2):
            target = apply_defects(x, set(delta))
            full = {y for y in all_strands(4)
                    if signature(y) == sig and apply_defects(y, set(delta)) == target}
            assert two_defect_twins(x, delta) == full


class TestDecodeArray2:
    @pytest.mark.parametrize("n", [4, 5])
    def test_roundtrip_where_information_permits(self, n):
        # two interacting defects can be information-theoretically ambiguous
        # (distinct strands sharing signature and channel output); the decoder
        # must recover exactly the unambiguous cases and fail closed otherwise
        ambiguous_seen = 0
        for x in all_strands(n):
            spec = spec_for_strand("array2", x)
            params = array2_params(spec)
            sched = cycles(x)
            for delta in combinations(range(1, 4 * n + 1), 2):
                if not (set(delta) & set(sched)):
                    continue
                inst = KnownDefectInstance(apply_defects(x, set(delta)), delta, n)
                twins = two_defect_twins(x, delta)
                if twins == {x}:
                    assert decode_array2(inst, params) == x
                else:
                    ambiguous_seen += 1
                    with pytest.raises(DecodeFailure):
                        decode_array2(inst, params)
        if n == 4:
            assert ambiguous_seen > 0  # the flaw is real, not hypothetical

    def test_known_ambiguous_twin_pair(self):
        # 1212 and 2211 share signature 101 and the same output under
        # defects {2, 6}; no signature-based syndrome can separate them
        x, y, delta = s("1212"), s("2211"), (2, 6)
        assert signature(x) == signature(y) == (1, 0, 1)
        assert apply_defects(x, set(delta)) == apply_defects(y, set(delta)) == (1, 1)
        assert array2_params(spec_for_strand("array2", x)) == \
            array2_params(spec_for_strand("array2", y))

    def test_both_defects_missing_identity(self):
        x = (1, 1, 1, 1)  # cycles 1, 5, 9, 13
        spec = spec_for_strand("array2", x)
        inst = KnownDefectInstance(x, (2, 3), 4)
        assert decode_array2(inst, array2_params(spec)) == x

    def test_partial_hit_dispatch(self):
        x = (2, 3, 1, 4, 1)
        sched = cycles(x)
        spec = spec_for_strand("array2", x)
        d_hit = sched[2]
        d_miss = next(d for d in range(1, 21) if d not in sched)
        delta = tuple(sorted((d_hit, d_miss)))
        inst = KnownDefectInstance(apply_defects(x, set(delta)), delta, 5)
        assert decode_array2(inst, array2_params(spec)) == x


class TestBestResidues:
    def test_sum1_partition(self):
        n = 3
        sizes = []
        for a in range(4):
            sizes.append(len(enumerate_codebook(KdccSpec("sum1", n, {"a": a}))))
        assert sum(sizes) == 4 ** n
        assert max(sizes) >= 4 ** n // 4

    def test_sum1_n1_partition(self):
        sizes = [len(enumerate_codebook(KdccSpec("sum1", 1, {"a": a})))
                 for a in range(4)]
        assert sum(sizes) == 4

    def test_best_sum1(self):
        spec, size = best_residues("sum1", 3)
        assert size >= 16

    def test_sampled_mode_deterministic(self):
        a = best_residues("svt1", 8, sample=300, seed=9)
        b = best_residues("svt1", 8, sample=300, seed=9)
        assert a == b


class TestCodeProperty:
    @pytest.mark.parametrize("family", ["sum1", "svt1"])
    def test_single_defect_disjointness(self, family):
        # no two codewords may look alike after any one defective cycle
        n = 5 if family == "sum1" else 5
        spec, _ = best_residues(family, n)
        members = enumerate_codebook(spec)
        seen = {}
        for x in members:
            for d in cycles(x):
                key = (d, apply_defects(x, {d}))
                assert key not in seen or seen[key] == x
                seen[key] = x

    def test_decode_is_left_inverse(self):
        n = 5
        spec, _ = best_residues("svt1", n)
        for x in enumerate_codebook(spec)[::7]:
            for d in cycles(x):
                inst = KnownDefectInstance(apply_defects(x, {d}), (d,), n)
                assert decode(spec, inst) == x

"""Known-defect correcting codes: the defective cycles are side information,
and each family pins down the lost symbols through a different syndrome.

Three families are implemented.  ``sum1`` constrains the sum of even-position
symbols mod 4 and corrects one defect.  ``svt1`` sends the signature into a
shifted VT code with window 5, again for one defect.  ``array2`` sends the
signature into the 9-row array code and corrects two defects.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .array_code import (
    ArrayCodeParams,
    array_bounded_decode,
    array_single_bounded_decode,
    array_syndromes,
)
from .binary import SvtParams, svt_decode, svt_member
from .core import (
    DecodeFailure,
    ParameterError,
    Strand,
    _insert_slot_positions,
    _insertions_at_cycle,
    all_strands,
    apply_defects,
    as_strand,
    cycles,
    signature,
    smod4,
)

FAMILIES = ("sum1", "svt1", "array2")
ARRAY2_ROWS = 9


@dataclass(frozen=True)
class KdccSpec:
    """Codebook descriptor: family name, strand length, residue vector."""

    family: str
    n: int
    residues: dict

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")
        if self.family in ("svt1", "array2") and self.n < 3:
            raise ParameterError(f"family {self.family} needs n >= 3")

    def to_json(self) -> dict:
        return {"family": self.family, "n": self.n, "residues": self.residues}

    @staticmethod
    def from_json(data) -> "KdccSpec":
        return KdccSpec(family=data["family"], n=data["n"], residues=data["residues"])


@dataclass(frozen=True)
class KnownDefectInstance:
    """Decoder input: the shortened strand, the defective cycles, and the
    original length."""

    received: Strand
    delta: tuple[int, ...]
    n: int

    def __post_init__(self):
        if len(self.received) < self.n - len(self.delta):
            raise ParameterError("received strand shorter than the defect count allows")


def even_position_sum(strand) -> int:
    return sum(strand[1::2])


def array2_params(spec: KdccSpec) -> ArrayCodeParams:
    return ArrayCodeParams(rows=ARRAY2_ROWS, length=spec.n - 1,
                           row_sums=tuple(spec.residues["a"]),
                           weighted_vt=spec.residues["b"])


def membership(spec: KdccSpec, strand) -> bool:
    """Does the strand satisfy the family's syndrome constraints?"""
    strand = as_strand(strand)
    if len(strand) != spec.n:
        return False
    if spec.family == "sum1":
        return even_position_sum(strand) % 4 == spec.residues["a"] % 4
    sig = signature(strand)
    if spec.family == "svt1":
        return svt_member(sig, SvtParams(a=spec.residues["a"],
                                         b=spec.residues["b"], window=5))
    other = array_syndromes(sig, ARRAY2_ROWS)
    target = array2_params(spec)
    return (other.row_sums == target.row_sums
            and other.weighted_vt == target.weighted_vt)


def spec_for_strand(family: str, strand) -> KdccSpec:
    """The residue class containing a given strand."""
    strand = as_strand(strand)
    n = len(strand)
    if family == "sum1":
        return KdccSpec("sum1", n, {"a": even_position_sum(strand) % 4})
    sig = signature(strand)
    if family == "svt1":
        from .binary import vt_syndrome, weight
        return KdccSpec("svt1", n, {"a": vt_syndrome(sig) % 5, "b": weight(sig) % 2})
    p = array_syndromes(sig, ARRAY2_ROWS)
    return KdccSpec("array2", n, {"a": list(p.row_sums), "b": p.weighted_vt})


def _insert_slots(word, delta: int) -> list[int]:
    """1-based positions where a symbol can be inserted so that it is
    synthesised at cycle ``delta``; at most four, and consecutive."""
    return _insert_slot_positions(word, delta)


def decode_sum1(instance: KnownDefectInstance, a: int) -> Strand:
    """Single known defect: at most four cycle-consistent insertions exist and
    the even-position sum mod 4 separates them."""
    if len(instance.delta) != 1:
        raise ParameterError("sum1 corrects exactly one defective cycle")
    received, n = instance.received, instance.n
    if len(received) == n:
        return received
    if len(received) != n - 1:
        raise ParameterError("received length incompatible with one defect")
    (d,) = instance.delta
    found = {y for y in _insertions_at_cycle(received, d)
             if even_position_sum(y) % 4 == a % 4}
    if len(found) != 1:
        raise DecodeFailure(f"{len(found)} insertions match the even-position sum")
    return found.pop()


def algorithm1_recover(received, delta, sig) -> Strand:
    """Reinstate defect-deleted symbols one cycle at a time, guided by the
    original signature.

    Candidate slots per defect come from the cycle structure (at most four,
    consecutive); the monotonicity pattern recorded in the signature singles
    out one completion, which is verified against the inputs before returning.
    """
    received = as_strand(received) if received else tuple(received)
    delta = tuple(sorted(set(delta)))
    sig = tuple(sig)
    if not delta:
        return received
    frontier = {received}
    for d in delta:
        grown = set()
        for w in frontier:
            grown.update(_insertions_at_cycle(w, d))
        frontier = grown
    hit = set(delta)
    final = {y for y in frontier
             if signature(y) == sig and apply_defects(y, hit) == received}
    if not final:
        raise DecodeFailure("no signature-consistent reinsertion exists")
    if len(final) > 1:
        raise DecodeFailure("signature does not single out one reinsertion")
    return final.pop()


def decode_svt1(instance: KnownDefectInstance, a: int, b: int) -> Strand:
    """Single known defect via the signature: the defect confines the missing
    signature bit to a five-wide window, which the shifted VT code corrects."""
    if len(instance.delta) != 1:
        raise ParameterError("svt1 corrects exactly one defective cycle")
    received, n = instance.received, instance.n
    if n < 3:
        raise ParameterError("svt1 needs n >= 3")
    if len(received) == n:
        return received
    if len(received) != n - 1:
        raise ParameterError("received length incompatible with one defect")
    (d,) = instance.delta
    slots = _insert_slots(received, d)
    if not slots:
        raise DecodeFailure("no cycle-consistent insertion for the defective cycle")
    window_start = max(1, min(slots) - 1)
    sig = svt_decode(signature(received), window_start,
                     SvtParams(a=a, b=b, window=5))
    return algorithm1_recover(received, (d,), sig)


def _signature_windows(received, d1: int, d2: int, sig_len: int):
    """Intervals in signature coordinates covering the two missing signature
    bits, derived from the cycle-consistent insertion slots.

    The first symbol reinserts at index i1 within a run of at most four
    consecutive slots and removes signature bit i1-1 or i1; the second lands
    at i2 in the once-grown word and removes a bit in [i2-2, i2].  The
    resulting windows are at most 5 and 9 wide.
    """
    first = _insert_slots(received, d1)
    if not first:
        raise DecodeFailure("no cycle-consistent insertion for the first defect")
    second = set()
    value = smod4(d1)
    for p in first:
        inter = received[:p - 1] + (value,) + received[p - 1:]
        second.update(_insert_slots(inter, d2))
    if not second:
        raise DecodeFailure("no cycle-consistent insertion for the second defect")

    def window(lo, hi, cap):
        lo, hi = max(1, lo), min(hi, sig_len)
        if hi - lo + 1 > cap:
            raise DecodeFailure("signature window exceeds its guaranteed width")
        return lo, hi - lo + 1

    w1 = window(min(first) - 1, max(first), 5)
    w2 = window(min(second) - 2, max(second), 9)
    return w1, w2


def decode_array2(instance: KnownDefectInstance, params: ArrayCodeParams) -> Strand:
    """Two known defects: signature windows of widths 5 and 9 feed the array
    code, and the cycle structure reinstates the symbols.

    Defective cycles that missed the strand are dispatched by trying every
    subset of the right size; the code property guarantees a unique outcome.
    """
    if len(instance.delta) != 2:
        raise ParameterError("array2 corrects exactly two defective cycles")
    received, n = instance.received, instance.n
    if n < 3:
        raise ParameterError("array2 needs n >= 3")
    k = n - len(received)
    if k not in (0, 1, 2):
        raise ParameterError("received length incompatible with two defects")
    if k == 0:
        return received
    delta = tuple(sorted(instance.delta))
    full = set(delta)

    if k == 1:
        found = set()
        for d in delta:
            slots = _insert_slots(received, d)
            if not slots:
                continue
            width = min(5, len(signature(received)) + 1)
            start = max(1, min(min(slots) - 1, len(signature(received)) - width + 2))
            try:
                sig = array_single_bounded_decode(
                    signature(received), (start, width), params)
                y = algorithm1_recover(received, (d,), sig)
            except DecodeFailure:
                continue
            if apply_defects(y, full) == received:
                found.add(y)
        if len(found) != 1:
            raise DecodeFailure(f"{len(found)} strands consistent with one hit")
        return found.pop()

    d1, d2 = delta
    w1, w2 = _signature_windows(received, d1, d2, n - 1)
    sig = array_bounded_decode(signature(received), (w1, w2), params)
    y = algorithm1_recover(received, delta, sig)
    if apply_defects(y, full) != received:
        raise DecodeFailure("reinserted strand does not reproduce the received word")
    return y


def decode(spec: KdccSpec, instance: KnownDefectInstance) -> Strand:
    if spec.family == "sum1":
        return decode_sum1(instance, spec.residues["a"])
    if spec.family == "svt1":
        return decode_svt1(instance, spec.residues["a"], spec.residues["b"])
    return decode_array2(instance, array2_params(spec))


def _syndrome_key(family: str, strand):
    if family == "sum1":
        return even_position_sum(strand) % 4
    sig = signature(strand)
    if family == "svt1":
        from .binary import vt_syndrome, weight
        return vt_syndrome(sig) % 5, weight(sig) % 2
    p = array_syndromes(sig, ARRAY2_ROWS)
    return p.row_sums, p.weighted_vt


def best_residues(family: str, n: int, sample=None, seed: int = 0):
    """Residues maximising the codebook size.

    Exhaustive over Sigma^n by default; with ``sample`` given, scans that many
    seeded random strands instead and reports the best observed class size.
    """
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}")
    if family != "sum1" and n < 3:
        raise ParameterError(f"family {family} needs n >= 3")
    counts: dict = {}
    if sample is None:
        for x in all_strands(n):
            key = _syndrome_key(family, x)
            counts[key] = counts.get(key, 0) + 1
    else:
        from .rng import SplitMix
        rng = SplitMix(seed)
        for i in range(sample):
            x = tuple(rng.randrange(1, 5) for _ in range(n))
            key = _syndrome_key(family, x)
            counts[key] = counts.get(key, 0) + 1
    key, size = max(counts.items(), key=lambda kv: (kv[1], str(kv[0])))
    if family == "sum1":
        residues = {"a": key}
    elif family == "svt1":
        residues = {"a": key[0], "b": key[1]}
    else:
        residues = {"a": list(key[0]), "b": key[1]}
    return KdccSpec(family, n, residues), size


def enumerate_codebook(spec: KdccSpec) -> list[Strand]:
    """All members of the residue class, in lexicographic order."""
    return [x for x in all_strands(spec.n) if membership(spec, x)]

"""Binary Varshamov-Tenengolts machinery: plain VT codes and their shifted,
window-localised variant."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Bits, DecodeFailure, ParameterError


def vt_syndrome(bits) -> int:
    """Position-weighted sum over 1-based positions."""
    return sum(i * b for i, b in enumerate(bits, start=1))


def weight(bits) -> int:
    return sum(bits)


def as_bits(bits) -> Bits:
    word = tuple(int(b) for b in bits)
    if any(b not in (0, 1) for b in word):
        raise ParameterError("binary word expected")
    return word


def insertions(word: Bits, position_range=None, values=(0, 1)) -> set[Bits]:
    """Distinct single-bit insertions into ``word``; positions are 1-based
    final coordinates, optionally restricted."""
    word = tuple(word)
    positions = range(1, len(word) + 2) if position_range is None else position_range
    out = set()
    for p in positions:
        if not 1 <= p <= len(word) + 1:
            continue
        for v in values:
            out.add(word[:p - 1] + (v,) + word[p - 1:])
    return out


def vt_decode(received, a: int, n: int, modulus: int | None = None) -> Bits:
    """Recover the unique word of length ``n`` with VT syndrome ``a`` (mod
    ``modulus``, default n+1) that yields ``received`` under one deletion."""
    received = as_bits(received)
    if len(received) != n - 1:
        raise ParameterError(f"expected length {n - 1}, got {len(received)}")
    m = (n + 1) if modulus is None else modulus
    matches = {w for w in insertions(received) if vt_syndrome(w) % m == a % m}
    if len(matches) != 1:
        raise DecodeFailure(f"{len(matches)} candidates consistent with VT residue {a} mod {m}")
    return matches.pop()


@dataclass(frozen=True)
class SvtParams:
    """Residues of a shifted VT code correcting one deletion inside a known
    window of ``window`` consecutive positions."""

    a: int
    b: int
    window: int

    def __post_init__(self):
        if self.window < 1 or not 0 <= self.a < self.window or self.b not in (0, 1):
            raise ParameterError("invalid shifted-VT parameters")


def svt_member(bits, params: SvtParams) -> bool:
    return (vt_syndrome(bits) % params.window == params.a
            and weight(bits) % 2 == params.b)


def svt_decode(received, window_start: int, params: SvtParams) -> Bits:
    """Recover the unique shifted-VT codeword whose single deletion lies in
    [window_start, window_start + window - 1]."""
    received = as_bits(received)
    lo = max(1, window_start)
    hi = min(len(received) + 1, window_start + params.window - 1)
    if lo > hi:
        raise DecodeFailure("deletion window does not meet the received word")
    matches = {w for w in insertions(received, range(lo, hi + 1)) if svt_member(w, params)}
    if len(matches) != 1:
        raise DecodeFailure(
            f"{len(matches)} shifted-VT candidates in window [{lo}, {hi}]")
    return matches.pop()

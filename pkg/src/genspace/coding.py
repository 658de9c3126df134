"""Prefix codes read off the generic space, plus an independent Huffman oracle.

When the generic dimension D and every count are powers of two, write the
D uniform generic-space outcomes as fixed-length binary words and group
them by collapsed symbol (largest group first).  Within a group only the
leading bits are shared, and since the group members are indistinguishable
after collapse, the shared prefix of length log2(D / count) IS the symbol's
codeword.  The blocks tile the code space, so the Kraft sum is exactly 1
and the average length meets the Shannon entropy exactly.

Outside the dyadic case that construction has no exact analogue; we fall
back to Shannon lengths ceil(log2(D / count)) assigned canonically, which
keeps the code prefix-free with average length within one bit of entropy.
"""

from __future__ import annotations

import heapq
import struct
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .distribution import ExactDistribution, GenericSpace
from .entropy import shannon_entropy

__all__ = [
    "PrefixCode",
    "CodeStats",
    "DecodeError",
    "build_generic_code",
    "encode",
    "decode",
    "average_length",
    "huffman_oracle",
    "frame_bits",
    "unframe_bits",
    "format_code_table",
    "parse_code_table",
]

STREAM_MAGIC = b"GSC1"

MODES = ("exact", "fallback", "huffman")


class DecodeError(ValueError):
    """A bit stream does not decode under the given code or framing."""


@dataclass(frozen=True)
class PrefixCode:
    """An ordered symbol -> bitstring map, checked prefix-free on construction.

    mode "exact" promises a complete code (Kraft sum exactly 1) built from
    a dyadic generic space; "fallback" carries Shannon lengths with Kraft
    sum <= 1; "huffman" marks oracle-built codes.
    """

    codewords: tuple[str, ...]
    mode: str

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown code mode {self.mode!r}")
        if not self.codewords:
            raise ValueError("code needs at least one codeword")
        for i, word in enumerate(self.codewords):
            if set(word) - {"0", "1"}:
                raise ValueError(f"codeword {i} is not a bitstring: {word!r}")
            if word == "" and len(self.codewords) > 1:
                raise ValueError("empty codeword only allowed in a one-symbol code")
        ordered = sorted(self.codewords)
        for shorter, longer in zip(ordered, ordered[1:]):
            if longer.startswith(shorter):
                raise ValueError(
                    f"not prefix-free: {shorter!r} is a prefix of {longer!r}"
                )
        # Prefix-freeness already forces the Kraft sum <= 1; exact mode
        # additionally promises completeness.
        if self.mode == "exact" and self.kraft_sum() != 1:
            raise ValueError(f"exact code must have Kraft sum 1, got {self.kraft_sum()}")

    @property
    def size(self) -> int:
        return len(self.codewords)

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.codewords)

    def kraft_sum(self) -> Fraction:
        return sum(Fraction(1, 2 ** len(w)) for w in self.codewords)


@dataclass(frozen=True)
class CodeStats:
    """Exact average codeword length and its gap above the entropy."""

    average_length: Fraction
    entropy_gap: float


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _ceil_log2_ratio(numerator: int, denominator: int) -> int:
    """ceil(log2(numerator / denominator)) for positive integers, exactly."""
    length = 0
    while (denominator << length) < numerator:
        length += 1
    return length


def _canonical_codewords(lengths: Sequence[int]) -> tuple[str, ...]:
    """Assign codewords canonically: shortest first, lexicographic within length.

    Ties between equal lengths keep original symbol order.  Requires the
    lengths to satisfy the Kraft inequality.
    """
    order = sorted(range(len(lengths)), key=lambda i: (lengths[i], i))
    words: list[str] = [""] * len(lengths)
    code = 0
    prev_len = 0
    for i in order:
        length = lengths[i]
        code <<= length - prev_len
        if length > 0 and code >> length:
            raise ValueError("codeword lengths violate the Kraft inequality")
        words[i] = format(code, f"0{length}b") if length > 0 else ""
        code += 1
        prev_len = length
    return tuple(words)


def build_generic_code(space: GenericSpace) -> PrefixCode:
    """Derive a prefix code from a generic space.

    Dyadic spaces (dimension and all counts powers of two) get the exact
    construction: symbols sorted by descending count claim consecutive
    blocks of the fixed-length generic codewords, and each symbol's
    codeword is its block's shared prefix of length log2(D / count).
    Everything else gets canonical Shannon lengths ceil(log2(D / count)).
    Codewords are returned in original symbol order.
    """
    d = space.dimension
    counts = space.counts
    if _is_power_of_two(d) and all(_is_power_of_two(c) for c in counts):
        total_bits = d.bit_length() - 1
        order = sorted(range(len(counts)), key=lambda i: (-counts[i], i))
        words: list[str] = [""] * len(counts)
        offset = 0
        for i in order:
            length = total_bits - (counts[i].bit_length() - 1)
            # offset is a multiple of counts[i] here, so the block of
            # counts[i] consecutive words shares exactly this prefix.
            prefix = offset >> (total_bits - length)
            words[i] = format(prefix, f"0{length}b") if length > 0 else ""
            offset += counts[i]
        return PrefixCode(tuple(words), mode="exact")
    lengths = [_ceil_log2_ratio(d, c) for c in counts]
    return PrefixCode(_canonical_codewords(lengths), mode="fallback")


def encode(code: PrefixCode, symbols: Sequence[int]) -> str:
    """Concatenate the codewords of a symbol-index sequence."""
    words = code.codewords
    n = len(words)
    for s in symbols:
        if not 0 <= s < n:
            raise ValueError(f"symbol index {s} out of range for a {n}-symbol code")
    return "".join(words[s] for s in symbols)


def decode(code: PrefixCode, bits: str) -> list[int]:
    """Recover the unique symbol sequence from concatenated codewords.

    Raises :class:`DecodeError` on bits that match no codeword or on a
    truncated final codeword.
    """
    if set(bits) - {"0", "1"}:
        raise DecodeError("stream contains characters other than 0 and 1")
    table = {w: i for i, w in enumerate(code.codewords) if w}
    if not table and bits:
        raise DecodeError("zero-length codeword is not uniquely decodable")
    max_len = max((len(w) for w in code.codewords), default=0)
    out: list[int] = []
    current = ""
    for bit in bits:
        current += bit
        symbol = table.get(current)
        if symbol is not None:
            out.append(symbol)
            current = ""
        elif len(current) >= max_len:
            raise DecodeError(f"bits {current!r} match no codeword")
    if current:
        raise DecodeError(f"incomplete codeword {current!r} at end of stream")
    return out


def average_length(code: PrefixCode, dist: ExactDistribution) -> CodeStats:
    """Exact expected codeword length and its gap above the Shannon entropy."""
    if code.size != dist.size:
        raise ValueError(
            f"dimension mismatch: code has {code.size} symbols, distribution {dist.size}"
        )
    avg = sum(
        (p * length for p, length in zip(dist.probs, code.lengths())),
        start=Fraction(0),
    )
    return CodeStats(average_length=avg, entropy_gap=float(avg) - shannon_entropy(dist, 2))


def huffman_oracle(dist: ExactDistribution) -> PrefixCode:
    """Textbook Huffman code over the exact rational weights.

    Deterministic: weight ties are broken by merging the subtrees holding
    the lowest original indices first, and the resulting lengths are
    assigned canonically.  Serves as the independent optimality reference
    for :func:`build_generic_code`.
    """
    n = dist.size
    if n == 1:
        return PrefixCode(("",), mode="huffman")
    # (weight, lowest original index in subtree, tree); the index is unique
    # per node so the tree itself is never compared.
    heap: list[tuple[Fraction, int, object]] = [
        (p, i, i) for i, p in enumerate(dist.probs)
    ]
    heapq.heapify(heap)
    while len(heap) > 1:
        w1, i1, t1 = heapq.heappop(heap)
        w2, i2, t2 = heapq.heappop(heap)
        heapq.heappush(heap, (w1 + w2, min(i1, i2), (t1, t2)))
    lengths = [0] * n

    stack: list[tuple[object, int]] = [(heap[0][2], 0)]
    while stack:
        node, depth = stack.pop()
        if isinstance(node, tuple):
            stack.append((node[0], depth + 1))
            stack.append((node[1], depth + 1))
        else:
            lengths[node] = depth
    return PrefixCode(_canonical_codewords(lengths), mode="huffman")


def frame_bits(bits: str) -> bytes:
    """Pack a bitstring into the stream container.

    Layout: magic "GSC1", unsigned 64-bit little-endian bit count, then the
    payload packed most-significant-bit-first with a zero-padded final byte.
    """
    if set(bits) - {"0", "1"}:
        raise ValueError("stream contains characters other than 0 and 1")
    payload = bytearray()
    for i in range(0, len(bits), 8):
        chunk = bits[i : i + 8]
        payload.append(int(chunk.ljust(8, "0"), 2))
    return STREAM_MAGIC + struct.pack("<Q", len(bits)) + bytes(payload)


def unframe_bits(blob: bytes) -> str:
    """Inverse of :func:`frame_bits`, with strict container validation."""
    if len(blob) < 12 or blob[:4] != STREAM_MAGIC:
        raise DecodeError("missing GSC1 stream header")
    (bit_count,) = struct.unpack("<Q", blob[4:12])
    payload = blob[12:]
    expected_bytes = (bit_count + 7) // 8
    if len(payload) != expected_bytes:
        raise DecodeError(
            f"payload holds {len(payload)} bytes, header declares {bit_count} bits"
        )
    bits = "".join(format(byte, "08b") for byte in payload)
    if any(b == "1" for b in bits[bit_count:]):
        raise DecodeError("nonzero padding bits in final byte")
    return bits[:bit_count]


def format_code_table(code: PrefixCode) -> str:
    """One "index<TAB>bitstring" line per symbol."""
    return "".join(f"{i}\t{w}\n" for i, w in enumerate(code.codewords))


def parse_code_table(text: str) -> PrefixCode:
    """Load a code table; mode is inferred from the Kraft sum.

    A complete table (Kraft sum exactly 1) loads as "exact", anything else
    as "fallback".
    """
    entries: dict[int, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index<TAB>bitstring'")
        try:
            index = int(parts[0])
        except ValueError:
            raise ValueError(f"line {lineno}: malformed index {parts[0]!r}") from None
        if index in entries:
            raise ValueError(f"line {lineno}: duplicate symbol index {index}")
        entries[index] = parts[1].strip()
    if not entries:
        raise ValueError("empty code table")
    size = len(entries)
    if sorted(entries) != list(range(size)):
        raise ValueError(f"table must cover indices 0..{size - 1} exactly once")
    words = tuple(entries[i] for i in range(size))
    kraft = sum(Fraction(1, 2 ** len(w)) for w in words)
    return PrefixCode(words, mode="exact" if kraft == 1 else "fallback")

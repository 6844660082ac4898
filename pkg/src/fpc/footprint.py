"""One-pass compression with a bounded recency list per context.

The codec keeps, for every length-l context seen so far, a list of the
up-to-k most recently coded distinct symbols of that context.  The first
l symbols are written raw (ceil(log2 n) bits each).  Every later symbol
is coded against its context's list: if present at 1-based position p,
emit flag 1 plus the delta code of p and promote it to the front; if
absent, emit flag 0 plus the raw symbol, insert it at the front and drop
the least recent entry once the list would exceed k.  Model memory is
therefore capped at (number of contexts) * k symbols regardless of input
length, and the decoder mirrors the list updates exactly, so the scheme
is lossless given the symbol count.

Lists start empty and are allocated only when a context first occurs,
which makes the per-context codeword stream identical, bit for bit, to
running the order-0 codec on that context's follower string.
"""

from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from math import floor
from typing import Sequence

from .bitio import (
    BitReader,
    BitWriter,
    as_reader,
    delta_decode,
    delta_length,
    write_delta,
)
from .errors import CorruptStreamError


@dataclass(frozen=True)
class CodecParams:
    """Alphabet size n, context order, and per-context list capacity."""

    n: int
    order: int
    capacity: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("alphabet size must be >= 2")
        if self.order < 0:
            raise ValueError("context order must be >= 0")
        if not 1 <= self.capacity <= self.n:
            raise ValueError("capacity must be in [1, n]")

    @property
    def raw_width(self) -> int:
        """Bits of a raw symbol, ceil(log2 n)."""
        return (self.n - 1).bit_length()

    @property
    def context_count(self) -> int:
        return self.n ** self.order


class BoundedMtfList:
    """Recency list of distinct symbols, capped at ``capacity`` entries."""

    __slots__ = ("entries", "capacity")

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError("capacity must be >= 1")
        self.entries: list[int] = []
        self.capacity = capacity

    def __len__(self) -> int:
        return len(self.entries)

    def push(self, symbol: int) -> int:
        """Code ``symbol``: return its 1-based position and promote it,
        or 0 if absent, in which case it is inserted at the front and the
        last entry is evicted once the capacity would be exceeded."""
        e = self.entries
        if symbol in e:
            i = e.index(symbol)
            if i:
                del e[i]
                e.insert(0, symbol)
            return i + 1
        e.insert(0, symbol)
        if len(e) > self.capacity:
            e.pop()
        return 0

    def select(self, position: int) -> int:
        """Decoder side of a hit: fetch the entry at ``position`` and promote."""
        e = self.entries
        if position < 1 or position > len(e):
            raise CorruptStreamError(
                f"hit position {position} exceeds list length {len(e)}"
            )
        s = e[position - 1]
        if position > 1:
            del e[position - 1]
            e.insert(0, s)
        return s

    def admit(self, symbol: int) -> None:
        """Decoder side of a miss: insert at front, evict if over capacity."""
        e = self.entries
        e.insert(0, symbol)
        if len(e) > self.capacity:
            e.pop()


@dataclass(frozen=True)
class Codeword:
    """One traced coding decision: context, kind, and emitted bit count."""

    context: tuple[int, ...] | None
    kind: str  # "raw" | "hit" | "miss"
    position: int | None
    symbol: int
    length: int


@dataclass
class FootprintReport:
    """Model-memory and payload accounting for one compression run."""

    params: CodecParams
    symbol_count: int
    payload_bits: int
    raw_prefix_bits: int
    hit_count: int
    miss_count: int
    hit_bits: int
    miss_bits: int
    allocated_contexts: int

    @property
    def model_bits_actual(self) -> int:
        return self.allocated_contexts * self.params.capacity * self.params.raw_width

    @property
    def model_bits_budget(self) -> int:
        return self.params.context_count * self.params.capacity * self.params.raw_width

    @property
    def index_overhead_bits(self) -> int:
        # sparse-map keys: one order-tuple per materialized context
        return self.allocated_contexts * self.params.order * self.params.raw_width


def _context_tuple(key: int, n: int, order: int) -> tuple[int, ...]:
    out = []
    for _ in range(order):
        key, s = divmod(key, n)
        out.append(s)
    return tuple(reversed(out))


def compress(
    params: CodecParams,
    symbols: Sequence[int],
    sink: BitWriter,
    trace: list[Codeword] | None = None,
) -> FootprintReport:
    """Single left-to-right pass; writes the payload into ``sink``.

    Rejects an out-of-range symbol before emitting anything for it.  When
    ``trace`` is given, one Codeword per input symbol is appended to it.
    """
    n = params.n
    order = params.order
    cap = params.capacity
    rw = params.raw_width
    span = params.context_count
    lists: dict[int, BoundedMtfList] = {}
    key = 0
    hits = misses = hit_bits = miss_bits = prefix_bits = 0
    for i, s in enumerate(symbols):
        if s < 0 or s >= n:
            raise ValueError(f"symbol {s} at position {i} outside [0, {n})")
        if i < order:
            sink.write_bits(s, rw)
            prefix_bits += rw
            if trace is not None:
                trace.append(Codeword(None, "raw", None, s, rw))
            key = key * n + s
            continue
        q = lists.get(key)
        if q is None:
            q = BoundedMtfList(cap)
            lists[key] = q
        pos = q.push(s)
        if pos:
            sink.write_bit(1)
            write_delta(sink, pos)
            nbits = 1 + delta_length(pos)
            hits += 1
            hit_bits += nbits
            if trace is not None:
                trace.append(
                    Codeword(_context_tuple(key, n, order), "hit", pos, s, nbits)
                )
        else:
            sink.write_bit(0)
            sink.write_bits(s, rw)
            nbits = 1 + rw
            misses += 1
            miss_bits += nbits
            if trace is not None:
                trace.append(
                    Codeword(_context_tuple(key, n, order), "miss", None, s, nbits)
                )
        key = (key * n + s) % span
    return FootprintReport(
        params=params,
        symbol_count=len(symbols),
        payload_bits=prefix_bits + hit_bits + miss_bits,
        raw_prefix_bits=prefix_bits,
        hit_count=hits,
        miss_count=misses,
        hit_bits=hit_bits,
        miss_bits=miss_bits,
        allocated_contexts=len(lists),
    )


def codeword_trace(params: CodecParams, symbols: Sequence[int]) -> list[Codeword]:
    """Per-symbol coding decisions; traced lengths concatenate to the payload."""
    trace: list[Codeword] = []
    compress(params, symbols, BitWriter(), trace)
    return trace


def decompress(
    params: CodecParams, bits: BitReader | BitWriter | bytes, m: int
) -> list[int]:
    """Exact inverse of ``compress`` for the same params and symbol count."""
    if m < 0:
        raise ValueError("symbol count must be >= 0")
    reader = as_reader(bits)
    n = params.n
    order = params.order
    cap = params.capacity
    rw = params.raw_width
    span = params.context_count
    lists: dict[int, BoundedMtfList] = {}
    key = 0
    out: list[int] = []
    for i in range(m):
        if i < order:
            s = reader.read_bits(rw)
            if s >= n:
                raise CorruptStreamError(f"raw symbol {s} outside [0, {n})")
            out.append(s)
            key = key * n + s
            continue
        q = lists.get(key)
        if q is None:
            q = BoundedMtfList(cap)
            lists[key] = q
        if reader.read_bit():
            s = q.select(delta_decode(reader))
        else:
            s = reader.read_bits(rw)
            if s >= n:
                raise CorruptStreamError(f"raw symbol {s} outside [0, {n})")
            q.admit(s)
        out.append(s)
        key = (key * n + s) % span
    return out


def _floor_root(value: int, degree: int) -> int:
    """Largest r with r**degree <= value, exact integer arithmetic."""
    if degree == 1:
        return value
    r = floor(value ** (1.0 / degree)) if value < (1 << 52) else 1 << (
        value.bit_length() // degree
    )
    while r > 0 and r ** degree > value:
        r -= 1
    while (r + 1) ** degree <= value:
        r += 1
    return r


def derive_capacity(n: int, epsilon) -> int:
    """min(floor(n**epsilon), n) with an exact floor at the boundaries.

    For epsilon whose binary expansion is short (all the usual 0.5, 0.25,
    0.75, ... cases) the floor is computed by integer powering, so perfect
    powers never round the wrong way.  Otherwise a 60-digit comparison
    decides the boundary; a float epsilon that fine cannot make n**epsilon
    an exact integer for any n below 2**64, so that comparison is safe.
    """
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    try:
        frac = Fraction(epsilon)
    except (TypeError, OverflowError) as exc:
        raise ValueError(f"epsilon must be a finite positive real, got {epsilon!r}") from exc
    if frac <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")
    if frac >= 1:
        return n
    if frac.denominator <= 64:
        k = _floor_root(n ** frac.numerator, frac.denominator)
    else:
        with localcontext() as ctx:
            ctx.prec = 60
            target = Decimal(frac.numerator) / Decimal(frac.denominator) * Decimal(n).ln()
            k = floor(n ** float(frac))
            while Decimal(k + 1).ln() <= target:
                k += 1
            while k > 1 and Decimal(k).ln() > target:
                k -= 1
    return max(1, min(k, n))

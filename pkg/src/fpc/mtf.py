"""Classical full-list move-to-front coding over the alphabet [0, n).

The list starts in identity order 0..n-1.  Each symbol is coded as its
current 1-based list position with the delta code, then promoted to the
front.  Besides being a usable codec this is the reference the bounded
context codec is checked against.
"""

from typing import Iterator, Sequence

from .bitio import BitReader, BitWriter, as_reader, delta_decode, write_delta
from .errors import CorruptStreamError


def _ranks(symbols: Sequence[int], n: int) -> Iterator[int]:
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    order = list(range(n))
    for s in symbols:
        if s < 0 or s >= n:
            raise ValueError(f"symbol {s} outside [0, {n})")
        pos = order.index(s)
        if pos:
            del order[pos]
            order.insert(0, s)
        yield pos + 1


def mtf_rank_trace(symbols: Sequence[int], n: int) -> list[int]:
    """The 1-based list position emitted for each symbol, front = 1."""
    return list(_ranks(symbols, n))


def mtf_encode(symbols: Sequence[int], n: int) -> BitWriter:
    """Delta-coded move-to-front positions for ``symbols``."""
    sink = BitWriter()
    for pos in _ranks(symbols, n):
        write_delta(sink, pos)
    return sink


def mtf_decode(bits: BitReader | BitWriter | bytes, n: int, m: int) -> list[int]:
    """Inverse transform: read ``m`` positions and replay the list moves."""
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    reader = as_reader(bits)
    order = list(range(n))
    out = []
    for _ in range(m):
        pos = delta_decode(reader)
        if pos > n:
            raise CorruptStreamError(f"position {pos} exceeds list length {n}")
        s = order[pos - 1]
        if pos > 1:
            del order[pos - 1]
            order.insert(0, s)
        out.append(s)
    return out

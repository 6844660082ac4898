"""Order-l empirical entropy of integer strings.

``h0`` is the plain zeroth-order entropy of the symbol frequencies.  For
l >= 1, every position with a full l-symbol left context is grouped by
that context, and ``hl`` is the length-weighted average of the follower
strings' h0 values, normalized by the whole string length.  The follower
table itself is exposed because the bounded-context codec is, context by
context, an order-0 coder running on exactly these strings.
"""

from collections import Counter
from dataclasses import dataclass, field
from math import log2
from typing import Sequence

Symbols = Sequence[int]


def h0(symbols: Symbols) -> float:
    """Zeroth-order empirical entropy in bits per symbol (0.0 if empty)."""
    m = len(symbols)
    if m == 0:
        return 0.0
    counts = Counter(symbols)
    return sum(c * log2(m / c) for c in counts.values()) / m


def extract_contexts(symbols: Symbols, order: int) -> dict[tuple[int, ...], list[int]]:
    """Group each symbol by its length-``order`` left context.

    Position i (0-based, i >= order) contributes symbols[i] to the entry
    for the tuple symbols[i-order:i], in increasing i order.  The first
    ``order`` positions have no full context and contribute nothing, so
    the follower lengths sum to len(symbols) - order.  A context that is
    only a suffix of the string gets no entry.
    """
    if order < 1:
        raise ValueError("context order must be >= 1")
    table: dict[tuple[int, ...], list[int]] = {}
    for i in range(order, len(symbols)):
        ctx = tuple(symbols[i - order:i])
        followers = table.get(ctx)
        if followers is None:
            table[ctx] = [symbols[i]]
        else:
            followers.append(symbols[i])
    return table


def hl(symbols: Symbols, order: int) -> float:
    """Order-``order`` empirical entropy in bits per symbol."""
    if order < 0:
        raise ValueError("entropy order must be >= 0")
    if order == 0:
        return h0(symbols)
    m = len(symbols)
    if m == 0:
        return 0.0
    table = extract_contexts(symbols, order)
    return sum(len(f) * h0(f) for f in table.values()) / m


@dataclass
class EntropyReport:
    """Per-order entropies plus the context breakdown behind them."""

    length: int
    alphabet_size: int
    distinct_symbols: int
    values: list[tuple[int, float]]
    # order -> rows of (context, follower count, h0 of followers)
    breakdown: dict[int, list[tuple[tuple[int, ...], int, float]]] = field(
        default_factory=dict
    )

    def value(self, order: int) -> float:
        for o, v in self.values:
            if o == order:
                return v
        raise KeyError(order)

    def weighted_sum(self, order: int) -> float:
        """Sum of |followers| * h0(followers), which must equal length * hl."""
        return sum(count * ent for _, count, ent in self.breakdown[order])


def profile(symbols: Symbols, max_order: int, alphabet_size: int | None = None) -> EntropyReport:
    """Compute h0..h_max_order and the per-context rows for each order."""
    if max_order < 0:
        raise ValueError("max_order must be >= 0")
    m = len(symbols)
    distinct = len(set(symbols))
    if alphabet_size is None:
        alphabet_size = max(2, (max(symbols) + 1) if m else 2)
    values = [(0, h0(symbols))]
    breakdown: dict[int, list[tuple[tuple[int, ...], int, float]]] = {}
    for order in range(1, max_order + 1):
        table = extract_contexts(symbols, order)
        rows = [(ctx, len(f), h0(f)) for ctx, f in sorted(table.items())]
        breakdown[order] = rows
        total = sum(count * ent for _, count, ent in rows)
        values.append((order, total / m if m else 0.0))
    return EntropyReport(m, alphabet_size, distinct, values, breakdown)

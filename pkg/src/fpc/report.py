"""Output-size bounds and the report emitted next to a compressed stream.

Both codecs come with a concrete bits-budget a run is expected to stay
under.  The baseline move-to-front budget charges its unknown additive
constant as one maximal-length codeword per alphabet symbol.  The
bounded-context budget multiplies the entropy term by 1/epsilon, where
epsilon is how the list capacity relates to the alphabet size
(capacity ~ n**epsilon), and charges capacity * (raw_width + 2) bits per
possible context for list warm-up.  The multiplier is floored at 1: once
the capacity covers the whole alphabet the codec is plain MTF plus one
flag bit per symbol, and a sub-1 multiplier would claim an impossible
budget (see tests for the alternating two-symbol counterexample).
"""

from dataclasses import dataclass
from math import log2

from .footprint import CodecParams, FootprintReport

FIXED_KEYS = (
    "payload_bits",
    "bound_bits",
    "model_bits_actual",
    "model_bits_budget",
    "hits",
    "misses",
)


def mtf_additive_bits(n: int) -> int:
    """Pinned additive term: n codewords of the largest possible length."""
    w = (n - 1).bit_length()
    return n * (w + 2 * (w).bit_length() + 1) if False else n * (
        w + 2 * ((w + 1) - 1).bit_length() + 1
    )


def mtf_bound_bits(n: int, m: int, h0_value: float) -> float:
    """(h0 + 2*log2(h0+1) + 1) * m plus the pinned additive term."""
    return (h0_value + 2.0 * log2(h0_value + 1.0) + 1.0) * m + mtf_additive_bits(n)


def epsilon_effective(n: int, capacity: int) -> float:
    """The exponent such that capacity + 1 = n**epsilon, used for reporting."""
    return log2(capacity + 1) / log2(n)


def footprint_bound_bits(params: CodecParams, m: int, h_order: float) -> float:
    """Budget for a bounded-context run at the given order-l entropy."""
    eps = epsilon_effective(params.n, params.capacity)
    mult = max(1.0, 1.0 / eps)
    linear = mult * (h_order + 2.0 * log2(h_order + 1.0) + 3.0) * m
    additive = params.context_count * params.capacity * (params.raw_width + 2)
    return linear + additive + params.order * params.raw_width


@dataclass
class BoundReport:
    """Everything needed to recheck a run: sizes, entropies, model memory."""

    codec: str
    n: int
    order: int
    capacity: int
    length: int
    raw_width: int
    entropies: list[tuple[int, float]]
    payload_bits: int
    payload_bytes: int
    epsilon_eff: float
    bound_bits: float
    model_bits_actual: int
    model_bits_budget: int
    hits: int
    misses: int
    raw_prefix_bits: int
    index_overhead_bits: int
    footprint: FootprintReport | None = None

    @property
    def padding_bits(self) -> int:
        return self.payload_bytes * 8 - self.payload_bits

    @property
    def bits_per_symbol(self) -> float:
        return self.payload_bits / self.length if self.length else 0.0

    @property
    def passed(self) -> bool:
        return self.payload_bits <= self.bound_bits

    def to_dict(self) -> dict:
        d = {
            "codec": self.codec,
            "n": self.n,
            "order": self.order,
            "capacity": self.capacity,
            "length": self.length,
            "raw_width": self.raw_width,
            "payload_bits": self.payload_bits,
            "payload_bytes": self.payload_bytes,
            "padding_bits": self.padding_bits,
            "bits_per_symbol": self.bits_per_symbol,
            "epsilon_eff": self.epsilon_eff,
            "bound_bits": self.bound_bits,
            "bound_pass": int(self.passed),
            "model_bits_actual": self.model_bits_actual,
            "model_bits_budget": self.model_bits_budget,
            "hits": self.hits,
            "misses": self.misses,
            "raw_prefix_bits": self.raw_prefix_bits,
            "index_overhead_bits": self.index_overhead_bits,
        }
        for order, value in self.entropies:
            d[f"h{order}"] = value
        return d

    def lines(self) -> list[str]:
        """Line-oriented ``key value`` rendering."""
        d = self.to_dict()
        keys = ["codec", "n", "order", "capacity", "length", "raw_width"]
        keys += [f"h{o}" for o, _ in self.entropies]
        keys += [
            "payload_bits",
            "payload_bytes",
            "padding_bits",
            "bits_per_symbol",
            "bound_bits",
            "bound_pass",
            "epsilon_eff",
            "model_bits_actual",
            "model_bits_budget",
            "hits",
            "misses",
            "raw_prefix_bits",
            "index_overhead_bits",
        ]
        out = []
        for k in keys:
            v = d[k]
            out.append(f"{k} {v:.6f}" if isinstance(v, float) else f"{k} {v}")
        return out

    def render(self) -> str:
        return "\n".join(self.lines()) + "\n"

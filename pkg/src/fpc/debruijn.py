"""Linear de Bruijn sequences: generation, validation, exhaustive counting.

A linear de Bruijn sequence of order l over the alphabet [0, n) has
length n**l + l - 1, contains every l-tuple exactly once as a substring,
and its first and last l-1 characters coincide.  Its n**l-prefix,
repeated, is the canonical stress input for context models of order l:
each context there determines its successor, so the order-l empirical
entropy of any repetition is exactly zero.
"""

from itertools import product
from math import factorial
from typing import Sequence

DEFAULT_LIMIT = 1 << 24
ENUMERATION_LIMIT = 16


def generate(n: int, order: int, limit: int = DEFAULT_LIMIT) -> list[int]:
    """Deterministic linear de Bruijn sequence of order ``order``.

    Walks an Eulerian circuit on the graph of (order-1)-tuples, taking the
    lowest unused edge symbol first (Hierholzer), starting from the
    all-zero node.  Rejects instances with n**order above ``limit``.
    """
    if n < 2:
        raise ValueError("alphabet size must be >= 2")
    if order < 1:
        raise ValueError("order must be >= 1")
    if n ** order > limit:
        raise ValueError(f"n**order = {n ** order} exceeds the budget {limit}")
    start = (0,) * (order - 1)
    next_sym: dict[tuple[int, ...], int] = {}
    node_stack = [start]
    edge_stack: list[int] = []
    circuit: list[int] = []
    while node_stack:
        node = node_stack[-1]
        i = next_sym.get(node, 0)
        if i < n:
            next_sym[node] = i + 1
            node_stack.append(node[1:] + (i,))
            edge_stack.append(i)
        else:
            node_stack.pop()
            if edge_stack:
                circuit.append(edge_stack.pop())
    circuit.reverse()
    return list(start) + circuit


def validate(seq: Sequence[int], n: int, order: int) -> bool:
    """True iff ``seq`` is a linear de Bruijn sequence of the given shape."""
    if n < 2 or order < 1:
        return False
    total = n ** order
    if len(seq) != total + order - 1:
        return False
    if any(s < 0 or s >= n for s in seq):
        return False
    if order > 1 and tuple(seq[: order - 1]) != tuple(seq[-(order - 1):]):
        return False
    windows = {tuple(seq[i: i + order]) for i in range(total)}
    return len(windows) == total


def expected_count(n: int, order: int) -> int:
    """Closed-form number of n-ary linear de Bruijn sequences of ``order``."""
    return factorial(n) ** (n ** (order - 1))


def enumerate_count(n: int, order: int) -> int:
    """Count the sequences by exhaustive search over Eulerian circuits.

    Serves as the independent check of ``expected_count``.  Each valid
    string corresponds to exactly one circuit from the node spelled by its
    first order-1 characters, so the total sums circuit counts over all
    start nodes.  Requires n**order <= ENUMERATION_LIMIT.
    """
    if n < 2 or order < 1:
        raise ValueError("need n >= 2 and order >= 1")
    edge_total = n ** order
    if edge_total > ENUMERATION_LIMIT:
        raise ValueError(
            f"n**order = {edge_total} too large for exhaustive enumeration"
        )

    def circuits_from(start: tuple[int, ...]) -> int:
        used: set[tuple[tuple[int, ...], int]] = set()

        def dfs(node: tuple[int, ...], depth: int) -> int:
            if depth == edge_total:
                return 1 if node == start else 0
            total = 0
            for s in range(n):
                edge = (node, s)
                if edge not in used:
                    used.add(edge)
                    total += dfs(node[1:] + (s,), depth + 1)
                    used.remove(edge)
            return total

        return dfs(start, 0)

    return sum(circuits_from(node) for node in product(range(n), repeat=order - 1))


def adversarial_power(
    n: int, order: int, repetitions: int, limit: int = DEFAULT_LIMIT
) -> list[int]:
    """The n**order-prefix of generate(n, order), repeated ``repetitions`` times."""
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    prefix = generate(n, order, limit)[: n ** order]
    return prefix * repetitions

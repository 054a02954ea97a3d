"""Vertex sets as plain Python ints used as bit masks.

Bit v of a mask is vertex v. Arbitrary-precision ints give word-packed
set operations for free, which is what makes block flips and flipped BFS
cheap.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_from(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    """Set bits of *mask* in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def full_mask(n: int) -> int:
    return (1 << n) - 1


def lowest_bits(mask: int, k: int) -> int:
    """The k lowest set bits of *mask* (all of them if it has fewer)."""
    out = 0
    while mask and k > 0:
        low = mask & -mask
        out |= low
        mask ^= low
        k -= 1
    return out

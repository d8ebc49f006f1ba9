"""Vertex sets are plain ints used as bit masks.

The integer itself is the canonical encoding used as a dictionary key by
every subset DP in this package; bit i set means vertex i is in the set.
"""

from collections.abc import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m

"""Subsets of {0..n-1} as int bitmasks (bit i set = element i present)."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subset_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Canonical sort key: by size, then by member list."""
    return (mask.bit_count(), members(mask))

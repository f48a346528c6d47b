"""Vertex sets packed into Python integers, bit ``v`` standing for vertex ``v``."""
# Import built-in modules
from typing import Iterable
from typing import Tuple


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for vertex in vertices:
        mask |= 1 << vertex
    return mask


def members(mask: int) -> Tuple[int, ...]:
    """tuple: The set bits of ``mask`` in increasing order."""
    result = []
    vertex = 0
    while mask:
        if mask & 1:
            result.append(vertex)
        mask >>= 1
        vertex += 1
    return tuple(result)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def has_two(mask: int) -> bool:
    """bool: Whether at least two bits are set."""
    return bool(mask & (mask - 1))


def is_subset(inner: int, outer: int) -> bool:
    return inner & ~outer == 0

"""Koszul signs, signatures and shuffle enumeration.

Permutations are 0-based sequences: ``perm`` lists, for each new slot, the
original slot it takes its symbol from, so the rearranged word is
``x[perm[0]], x[perm[1]], ...``.
"""

from itertools import combinations
from typing import Callable, Hashable, Sequence

from .degrees import Degree


def _check_permutation(perm: Sequence[int], size: int | None = None):
    if size is not None and len(perm) != size:
        raise ValueError(
            f"Permutation of {len(perm)} slots used with {size} degrees"
        )
    if sorted(perm) != list(range(len(perm))):
        raise ValueError(f"{tuple(perm)} is not a permutation")


def koszul_sign(perm: Sequence[int], degrees: Sequence[Degree]) -> int:
    """Sign e with x[perm[0]]...x[perm[n-1]] = e * x[0]...x[n-1]."""
    _check_permutation(perm, len(degrees))
    odd = 0
    for a in range(len(perm)):
        if degrees[perm[a]] & 1 == 0:
            continue
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b] and degrees[perm[b]] & 1:
                odd ^= 1
    return -1 if odd else 1


def permutation_sign(perm: Sequence[int]) -> int:
    _check_permutation(perm)
    odd = 0
    for a in range(len(perm)):
        for b in range(a + 1, len(perm)):
            if perm[a] > perm[b]:
                odd ^= 1
    return -1 if odd else 1


def shuffles(i: int, j: int, fix_first: bool = False) -> list[tuple[int, ...]]:
    """All (i,j)-shuffles: perm[:i] and perm[i:] are both increasing.

    With ``fix_first`` only the shuffles with perm[0] == 0 are returned.
    """
    if i < 0 or j < 0:
        raise ValueError("Shuffle block sizes must be non-negative")
    n = i + j
    result = []
    for head in combinations(range(n), i):
        if fix_first and (i == 0 or head[0] != 0):
            continue
        chosen = set(head)
        result.append(head + tuple(k for k in range(n) if k not in chosen))
    return result


def unshuffle_blocks(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    """Permutations increasing on each consecutive block of the given sizes."""
    n = sum(sizes)

    def _walk(remaining: tuple[int, ...], index: int):
        if index == len(sizes):
            yield ()
            return
        for head in combinations(remaining, sizes[index]):
            rest = tuple(k for k in remaining if k not in head)
            for tail in _walk(rest, index + 1):
                yield head + tail

    return list(_walk(tuple(range(n)), 0))


def koszul_sort(
    items: Sequence[Hashable],
    key: Callable[[Hashable], object],
    degree: Callable[[Hashable], Degree],
    antisymmetric: bool = False,
) -> tuple[tuple, int]:
    """Sort graded symbols, returning the sorted word and its sign.

    In a graded-commutative context (default) the sign is the Koszul sign and
    a repeated odd symbol gives 0. With ``antisymmetric`` the signature enters
    as well and a repeated even symbol gives 0.
    """
    perm = sorted(range(len(items)), key=lambda k: key(items[k]))
    word = tuple(items[k] for k in perm)
    degrees = [degree(item) for item in items]
    vanishing_parity = 0 if antisymmetric else 1
    for a in range(1, len(word)):
        if word[a] == word[a - 1] and degree(word[a]) & 1 == vanishing_parity:
            return word, 0
    sign = koszul_sign(perm, degrees)
    if antisymmetric:
        sign *= permutation_sign(perm)
    return word, sign

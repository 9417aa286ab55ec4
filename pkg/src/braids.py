# braids.py – permutations of wire positions and their reduced words

"""
Permutations are stored in "image" form: ``perm[q]`` is the position, at the top
of a braid run, of the wire that starts at position ``q`` at the bottom.

A braid run is written as the sequence of indices ``i`` of its elementary
transpositions, bottom slice first; index ``i`` swaps positions ``i`` and ``i+1``.
The canonical word of a permutation is its lexicographically least reduced
word, found greedily: at every step swap the leftmost adjacent pair that is
still out of order relative to the target.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


Perm = tuple[int, ...]


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(perm: Sequence[int]) -> bool:
    return all(perm[i] == i for i in range(len(perm)))


def run_permutation(indices: Sequence[int], n: int) -> Perm:
    """
    Permutation realized by a run of elementary swaps.

    >>> run_permutation([0], 2)
    (1, 0)
    >>> run_permutation([1, 0], 3)
    (1, 2, 0)
    """
    current = np.arange(n)
    for i in indices:
        if not 0 <= i < n - 1:
            raise ValueError(f"swap index {i} out of range for {n} wires")
        current[[i, i + 1]] = current[[i + 1, i]]
    # current[pos] = wire now at pos, so the image of a wire is its argsort position
    return tuple(int(x) for x in np.argsort(current))


def inverse(perm: Sequence[int]) -> Perm:
    return tuple(int(x) for x in np.argsort(np.asarray(perm, dtype=int)))


def compose(first: Sequence[int], then: Sequence[int]) -> Perm:
    """Apply ``first`` and then ``then``."""
    return tuple(int(then[first[q]]) for q in range(len(first)))


def length(perm: Sequence[int]) -> int:
    """Number of inversions, i.e. the length of any reduced word."""
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])


def reduced_word(perm: Sequence[int]) -> tuple[int, ...]:
    """
    Lexicographically least reduced word of ``perm``.

    >>> reduced_word((1, 2, 0))
    (1, 0)
    >>> reduced_word((2, 0, 1))
    (0, 1)
    >>> reduced_word((0, 1))
    ()
    """
    current = list(range(len(perm)))
    word: list[int] = []
    while True:
        for i in range(len(current) - 1):
            if perm[current[i]] > perm[current[i + 1]]:
                current[i], current[i + 1] = current[i + 1], current[i]
                word.append(i)
                break
        else:
            return tuple(word)


def block_swap(p: int, q: int) -> Perm:
    """Permutation moving a block of p wires past a block of q wires."""
    return tuple(q + i for i in range(p)) + tuple(range(q))


def block_image(perm: Sequence[int], start: int, size: int) -> int | None:
    """
    Where the block ``[start, start+size)`` lands, if it lands contiguously and
    in order; otherwise None.
    """
    if size <= 0:
        return None
    p = perm[start]
    for t in range(size):
        if perm[start + t] != p + t:
            return None
    return p


def block_preimage(perm: Sequence[int], start: int, size: int) -> int | None:
    """Where the block landing on ``[start, start+size)`` came from, if contiguous."""
    return block_image(inverse(perm), start, size)


def transport(perm: Sequence[int], src: int, old: int, new: int, dst: int) -> Perm:
    """
    Re-express ``perm`` after the block ``[src, src+old)`` (which ``perm`` sends
    intact to ``[dst, dst+old)``) is resized to ``new`` wires.

    The other wires keep their relative arrangement; the resized block goes
    from ``src`` to ``dst``.
    """

    def before(q: int) -> int:
        return q if q < src else q - old + new

    def after(t: int) -> int:
        return t if t < dst else t - old + new

    n = len(perm) - old + new
    image = [0] * n
    for q in range(len(perm)):
        if src <= q < src + old:
            continue
        image[before(q)] = after(perm[q])
    for j in range(new):
        image[src + j] = dst + j
    return tuple(image)

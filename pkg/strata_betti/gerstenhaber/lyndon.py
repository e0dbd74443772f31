# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

from __future__ import annotations

from collections.abc import Sequence

Word = tuple[int, ...]


def is_lyndon(word: Sequence[int]) -> bool:
    """Return True if the word is strictly smaller than all its proper rotations."""
    if not word:
        return False
    word = tuple(word)
    return all(word < word[shift:] + word[:shift] for shift in range(1, len(word)))


def lyndon_words(
    n: int, max_leaves: int, multidegree_cap: Sequence[int] | None = None
) -> list[Word]:
    """List Lyndon words over the letters 1..n.

    Words are grown letter by letter as prenecklaces, tracking the period of the longest
    Lyndon prefix; a prenecklace is Lyndon when its period equals its length. Branches that
    exceed the length bound or the letter counts are cut.

    Parameters
    ----------
    n : int
        Alphabet size, >= 1.
    max_leaves : int
        Maximal word length.
    multidegree_cap : Sequence[int] | None, optional
        Maximal number of occurrences of every letter, by default unbounded.

    Returns
    -------
    list[Word]
        The words sorted by length, then lexicographically.
    """
    if n < 1:
        msg = f"n must be >= 1, got {n}."
        raise ValueError(msg)
    cap = list(multidegree_cap) if multidegree_cap is not None else [max_leaves] * n
    if len(cap) < n:
        cap += [0] * (n - len(cap))

    found: list[Word] = []
    word: list[int] = []
    counts = [0] * (n + 1)

    def _extend(period: int) -> None:
        if word and period == len(word):
            found.append(tuple(word))
        if len(word) == max_leaves:
            return
        smallest = word[len(word) - period] if word else 1
        for letter in range(smallest, n + 1):
            if counts[letter] >= cap[letter - 1]:
                continue
            next_period = period if word and letter == smallest else len(word) + 1
            word.append(letter)
            counts[letter] += 1
            _extend(next_period)
            counts[letter] -= 1
            word.pop()

    _extend(1)
    return sorted(found, key=lambda w: (len(w), w))


def standard_factorization(word: Sequence[int]) -> tuple[Word, Word]:
    """Split a Lyndon word of length >= 2 as uv with v its longest proper Lyndon suffix."""
    word = tuple(word)
    if len(word) < 2 or not is_lyndon(word):  # noqa: PLR2004
        msg = f"{word} is not a Lyndon word of length >= 2."
        raise ValueError(msg)
    for split in range(1, len(word)):
        if is_lyndon(word[split:]):
            return word[:split], word[split:]
    msg = f"{word} has no Lyndon suffix."
    raise AssertionError(msg)


def standard_bracketing(word: Sequence[int]) -> str:
    """Render the bracket of a Lyndon word through its standard factorization.

    ``(1, 1, 2)`` becomes ``[x1,[x1,x2]]``.
    """
    word = tuple(word)
    if len(word) == 1:
        return f"x{word[0]}"
    left, right = standard_factorization(word)
    return f"[{standard_bracketing(left)},{standard_bracketing(right)}]"

# Copyright strata-betti contributors
# SPDX-License-Identifier: MIT

import itertools

import pytest

from strata_betti.gerstenhaber import (
    is_lyndon,
    lyndon_words,
    standard_bracketing,
    standard_factorization,
)


def _brute_force(n, max_leaves, cap):
    found = []
    for length in range(1, max_leaves + 1):
        for word in itertools.product(range(1, n + 1), repeat=length):
            if all(word.count(letter) <= cap[letter - 1] for letter in range(1, n + 1)):
                if all(word < word[s:] + word[:s] for s in range(1, length)):
                    found.append(word)
    return sorted(found, key=lambda w: (len(w), w))


def test_lyndon_words__single_letter():
    assert lyndon_words(1, 3) == [(1,)]


def test_lyndon_words__capped():
    assert lyndon_words(2, 3, (2, 1)) == [(1,), (2,), (1, 2), (1, 1, 2)]
    assert lyndon_words(2, 2, (1, 1)) == [(1,), (2,), (1, 2)]


def test_lyndon_words__uncapped_counts():
    # necklace counts for binary words of length 1..5
    words = lyndon_words(2, 5)
    assert [sum(1 for w in words if len(w) == k) for k in range(1, 6)] == [2, 1, 2, 3, 6]


@pytest.mark.parametrize(
    ("n", "max_leaves", "cap"),
    [(2, 6, (6, 6)), (3, 5, (3, 2, 1)), (3, 6, (4, 1, 1)), (4, 4, (2, 2, 2, 2))],
)
def test_lyndon_words__agree_with_rotation_criterion(n, max_leaves, cap):
    assert lyndon_words(n, max_leaves, cap) == _brute_force(n, max_leaves, cap)


def test_lyndon_words__zero_cap_drops_letter():
    assert lyndon_words(2, 4, (0, 1)) == [(2,)]


def test_lyndon_words__invalid_alphabet():
    with pytest.raises(ValueError):
        lyndon_words(0, 3)


def test_is_lyndon():
    assert is_lyndon((1, 1, 2))
    assert not is_lyndon((1, 2, 1))
    assert not is_lyndon((1, 1))
    assert not is_lyndon(())


def test_standard_factorization():
    assert standard_factorization((1, 1, 2)) == ((1,), (1, 2))
    assert standard_factorization((1, 2, 2)) == ((1, 2), (2,))
    with pytest.raises(ValueError):
        standard_factorization((2, 1))


def test_standard_bracketing():
    assert standard_bracketing((1,)) == "x1"
    assert standard_bracketing((1, 2)) == "[x1,x2]"
    assert standard_bracketing((1, 1, 2)) == "[x1,[x1,x2]]"
    assert standard_bracketing((1, 2, 2)) == "[[x1,x2],x2]"


if __name__ == "__main__":
    pytest.main([__file__, "--disable-pytest-warnings", "--cache-clear", "-v"])

import itertools

import numpy as np

from johnsonfilt import Word

SEED = 20100


def random_word(n, length, rng):
    """random (not necessarily reduced) word of the given rank"""

    gens = rng.integers(1, n + 1, size=length)
    signs = rng.choice([-1, 1], size=length)
    return Word(n, zip(gens.tolist(), signs.tolist()))


def random_words(n, length, count, seed=SEED):

    rng = np.random.default_rng(seed)
    return [random_word(n, int(rng.integers(0, length + 1)), rng) for _ in range(count)]


def brute_force_lyndon_count(q, s):
    """number of words strictly smaller than all their proper rotations"""

    count = 0
    for word in itertools.product(range(1, q + 1), repeat=s):
        if all(word < word[i:] + word[:i] for i in range(1, s)):
            count += 1
    return count


def x(n, i, sign=1):
    return Word.generator(n, i, sign)

"""Degeneracy words and monotone maps between finite ordinals.

A simplex is stored as ``(generator, surjection)`` where the surjection
``[n] -> [k]`` is a nondecreasing tuple hitting every value of ``[k]``.  The
Eilenberg-Zilber normal form ``s_{i1} ... s_{ik}`` (``i1 > ... > ik``) is the
set of positions ``j`` with ``sigma[j] == sigma[j+1]``, listed in decreasing
order.  Both encodings are exposed; internally surjections are used because
composition is plain tuple indexing.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

Surj = tuple  # nondecreasing onto tuple
Word = tuple  # strictly decreasing degeneracy indices


def identity(k: int) -> Surj:
    return tuple(range(k + 1))


def is_identity(sigma: Surj) -> bool:
    return sigma[-1] == len(sigma) - 1


def word_to_surj(word: Word, k: int) -> Surj:
    """Surjection of the degenerate simplex ``s_word(y)`` for ``y`` of dimension ``k``."""
    if any(a <= b for a, b in zip(word, word[1:])):
        raise ValueError(f"degeneracy word {word!r} is not strictly decreasing")
    n = k + len(word)
    if word and word[0] >= n:
        raise ValueError(f"degeneracy index {word[0]} out of range for dimension {n}")
    rep = set(word)
    out = [0]
    for j in range(n):
        out.append(out[-1] if j in rep else out[-1] + 1)
    return tuple(out)


def surj_to_word(sigma: Surj) -> Word:
    return tuple(j for j in range(len(sigma) - 2, -1, -1) if sigma[j] == sigma[j + 1])


def normalize_word(word) -> Word:
    """Rewrite an arbitrary composite ``s_{a1} s_{a2} ...`` (applied right to left) in normal form."""
    word = tuple(word)
    # apply rightmost first, tracking the surjection from the current top down to [k]
    sigma = None
    for j in reversed(word):
        if sigma is None:
            sigma = (0,)
        if not 0 <= j < len(sigma):
            raise ValueError(f"degeneracy s_{j} undefined in dimension {len(sigma) - 1}")
        sigma = sigma[: j + 1] + sigma[j:]
    return () if sigma is None else surj_to_word(sigma)


def compose(outer: Surj, inner) -> tuple:
    """``outer o inner`` for monotone maps given as tuples."""
    return tuple(outer[i] for i in inner)


def compose_words(a: Word, b: Word, k: int) -> Word:
    """Normal form of ``s_a s_b`` acting on a ``k``-simplex (``b`` applied first)."""
    sb = word_to_surj(b, k)
    sa = word_to_surj(a, len(sb) - 1)
    return surj_to_word(compose(sb, sa))


@lru_cache(maxsize=None)
def surjections(n: int, k: int) -> tuple:
    """All surjections ``[n] -> [k]`` in lexicographic order."""
    out = []
    for steps in combinations(range(n), k):
        st = set(steps)
        s = [0]
        for j in range(n):
            s.append(s[-1] + 1 if j in st else s[-1])
        out.append(tuple(s))
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def coface(n: int, i: int) -> tuple:
    """``delta^i : [n-1] -> [n]`` skipping ``i``."""
    return tuple(j if j < i else j + 1 for j in range(n))


@lru_cache(maxsize=None)
def codegeneracy(n: int, j: int) -> tuple:
    """``sigma^j : [n+1] -> [n]`` hitting ``j`` twice."""
    return tuple(t if t <= j else t - 1 for t in range(n + 2))


def factor(mu) -> tuple[tuple, tuple]:
    """Epi-mono factorisation of a monotone map: ``mu = image[surj]``."""
    image = tuple(sorted(set(mu)))
    pos = {v: p for p, v in enumerate(image)}
    return tuple(pos[v] for v in mu), image

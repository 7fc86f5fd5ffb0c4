"""Symmetric discrete interval exchanges and their word encodings.

A composition (c_1, ..., c_k) of n cuts {1, ..., n} into consecutive blocks
I_1, ..., I_k of sizes c_1, ..., c_k and, independently, into blocks
J_1, ..., J_k of the reversed sizes c_k, ..., c_1.  The exchange is the
permutation translating each I_h increasingly onto J_{k+1-h}; reading off
which block the orbit of a point visits turns a single-cycle exchange into a
word, and those words are exactly the perfectly clustering ones.
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import combinations

from .bwt import is_perfectly_clustering
from .words import Alphabet, Word, default_alphabet

__all__ = [
    "IntervalExchange",
    "all_compositions",
    "compositions",
    "iet_of_word",
]


class IntervalExchange:
    """The symmetric block-exchange permutation of a composition.

    ``sigma`` is the image tuple: ``sigma[x - 1]`` is where x goes.  On the
    h-th block the map is the translation by ``translations[h - 1]``.
    """

    __slots__ = ("parts", "n", "k", "translations", "sigma", "_cuts")

    def __init__(self, parts):
        parts = tuple(parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(not isinstance(c, int) or c < 1 for c in parts):
            raise ValueError(f"composition parts must be positive integers, got {parts}")
        self.parts = parts
        self.k = len(parts)
        n = sum(parts)
        self.n = n
        prefix = [0]
        for c in parts:
            prefix.append(prefix[-1] + c)
        # translation on block h: elements above h minus elements below h
        self.translations = tuple(
            n - prefix[h] - prefix[h - 1] for h in range(1, self.k + 1)
        )
        sigma = []
        for h in range(1, self.k + 1):
            t = self.translations[h - 1]
            sigma.extend(x + t for x in range(prefix[h - 1] + 1, prefix[h] + 1))
        self.sigma = tuple(sigma)
        self._cuts = tuple(prefix[1:])
        if sorted(sigma) != list(range(1, n + 1)):
            raise AssertionError(f"block images of {parts} do not form a permutation")

    def __repr__(self):
        return f"IntervalExchange({self.parts!r})"

    def minima(self) -> tuple[int, ...]:
        """Smallest element of each block: 1 + c_1 + ... + c_{h-1}."""
        out = []
        start = 1
        for c in self.parts:
            out.append(start)
            start += c
        return tuple(out)

    def intervals(self) -> list[range]:
        """The blocks I_1, ..., I_k as ranges of 1-based points."""
        out = []
        start = 1
        for c in self.parts:
            out.append(range(start, start + c))
            start += c
        return out

    def j_intervals(self) -> list[range]:
        """The target blocks J_1, ..., J_k, sized by the reversed composition."""
        out = []
        start = 1
        for c in reversed(self.parts):
            out.append(range(start, start + c))
            start += c
        return out

    def apply(self, x: int) -> int:
        if not 1 <= x <= self.n:
            raise ValueError(f"point {x} out of range 1..{self.n}")
        return self.sigma[x - 1]

    def block_of(self, x: int) -> int:
        """1-based index of the block containing x."""
        if not 1 <= x <= self.n:
            raise ValueError(f"point {x} out of range 1..{self.n}")
        return bisect_left(self._cuts, x) + 1

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element."""
        seen = [False] * self.n
        out = []
        for start in range(1, self.n + 1):
            if seen[start - 1]:
                continue
            cycle = []
            x = start
            while not seen[x - 1]:
                seen[x - 1] = True
                cycle.append(x)
                x = self.sigma[x - 1]
            out.append(tuple(cycle))
        return out

    def is_circular(self) -> bool:
        """True when the permutation is a single n-cycle."""
        x = self.sigma[0]
        steps = 1
        while x != 1:
            x = self.sigma[x - 1]
            steps += 1
        return steps == self.n

    def encoding(self, start: int = 1, alphabet: Alphabet | None = None) -> Word:
        """Word reading off the block of each orbit point from ``start``.

        Only defined for single-cycle exchanges; position p of the result is
        the letter of the block containing the p-th orbit point.
        """
        if not self.is_circular():
            raise ValueError(f"{self!r} has several cycles; encodings need one")
        if not 1 <= start <= self.n:
            raise ValueError(f"start point {start} out of range 1..{self.n}")
        if alphabet is None:
            alphabet = default_alphabet(self.k)
        elif alphabet.size < self.k:
            raise ValueError(f"alphabet {alphabet!r} too small for {self.k} blocks")
        idx = []
        x = start
        for _ in range(self.n):
            idx.append(self.block_of(x) - 1)
            x = self.sigma[x - 1]
        return Word(alphabet, tuple(idx))


def iet_of_word(w: Word) -> tuple[IntervalExchange, int]:
    """Exchange and start point that encode a perfectly clustering word.

    The composition is the occurrence-count vector of the word's letters, and
    the start point equals the word's 1-based rank among its sorted rotations.
    """
    if not w.is_primitive() or not is_perfectly_clustering(w):
        raise ValueError(f"{w} is not perfectly clustering; it encodes no exchange")
    counts = w.parikh()
    parts = tuple(c for c in counts if c)
    exchange = IntervalExchange(parts)
    rank = w.conjugates_sorted().index(w) + 1
    return exchange, rank


def compositions(n: int, k: int):
    """All k-tuples of positive integers summing to n, lexicographically."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    for cuts in combinations(range(1, n), k - 1):
        bounds = (0, *cuts, n)
        yield tuple(b - a for a, b in zip(bounds, bounds[1:]))


def all_compositions(max_n: int, max_k: int):
    """Compositions of every n up to ``max_n`` into at most ``max_k`` parts."""
    for n in range(1, max_n + 1):
        for k in range(1, min(n, max_k) + 1):
            yield from compositions(n, k)

"""The Burrows-Wheeler transform and the run structure of its output.

The transform of a primitive word is the word formed by the last letters of
its lexicographically sorted rotations.  A word *clusters* when every letter
of the transform forms a single run; it clusters *perfectly* when the runs
appear in decreasing alphabet order, i.e. the transform is weakly decreasing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import groupby
from math import gcd

from .words import Alphabet, InconsistencyError, Word

__all__ = [
    "BWMatrix",
    "Clustering",
    "RowPairDecomposition",
    "bw_matrix",
    "bwt",
    "christoffel",
    "clustering_permutation",
    "is_perfectly_clustering",
    "row_pair_decompose",
    "sorted_rotations",
    "weakly_decreasing_transform",
]


def sorted_rotations(indices: tuple) -> list[tuple]:
    """Rotation tuples of a raw letter tuple, lexicographically increasing."""
    n = len(indices)
    doubled = indices * 2
    return sorted(doubled[i:i + n] for i in range(n))


def weakly_decreasing_transform(indices: tuple) -> bool:
    """Transform-is-weakly-decreasing check on a raw letter tuple.

    Assumes the word is primitive; no validation is done.
    """
    last = [row[-1] for row in sorted_rotations(indices)]
    return all(a >= b for a, b in zip(last, last[1:]))


@dataclass(frozen=True)
class BWMatrix:
    """Sorted rotations of a primitive word, with its first and last columns."""

    source: Word
    rows: tuple[Word, ...]
    last_column: Word
    first_column: Word

    def __str__(self):
        return "\n".join(str(row) for row in self.rows)


def bw_matrix(w: Word) -> BWMatrix:
    """Full rotation matrix of a primitive word; the last column is its transform."""
    if not w.is_primitive():
        raise ValueError(f"{w} is not primitive; its rotation matrix would repeat rows")
    rows_t = sorted_rotations(w.indices)
    rows = tuple(Word(w.alphabet, t) for t in rows_t)
    last = Word(w.alphabet, tuple(t[-1] for t in rows_t))
    first = Word(w.alphabet, tuple(t[0] for t in rows_t))
    return BWMatrix(w, rows, last, first)


def bwt(w: Word) -> Word:
    """Last letters of the sorted rotations of a primitive word."""
    if not w.is_primitive():
        raise ValueError(f"{w} is not primitive; the transform needs distinct rotations")
    return Word(w.alphabet, tuple(t[-1] for t in sorted_rotations(w.indices)))


@dataclass(frozen=True)
class Clustering:
    """Run-order permutation of the transform, when each letter forms one run.

    ``pi`` lists, per run, the 1-based rank of the run letter among the word's
    occurring letters; ``None`` when some letter is split across several runs.
    ``perfect`` means ``pi`` is the order-reversing permutation.
    """

    pi: tuple[int, ...] | None
    perfect: bool


def clustering_permutation(w: Word) -> Clustering:
    """Classify the transform of ``w`` over its occurring letters."""
    last = bwt(w).indices
    support = sorted(set(w.indices))
    runs = [letter for letter, _ in groupby(last)]
    if len(runs) != len(support) or len(set(runs)) != len(runs):
        return Clustering(None, False)
    position = {letter: i for i, letter in enumerate(support)}
    pi = tuple(position[letter] + 1 for letter in runs)
    return Clustering(pi, pi == tuple(range(len(support), 0, -1)))


def is_perfectly_clustering(w: Word) -> bool:
    """True when the transform of ``w`` is weakly decreasing in the alphabet order."""
    if not w.is_primitive():
        raise ValueError(f"{w} is not primitive; clustering is undefined")
    return weakly_decreasing_transform(w.indices)


@dataclass(frozen=True)
class RowPairDecomposition:
    """Two consecutive matrix rows written as y m x and y (reversed m) x.

    ``x + y`` equals gap number ``palindrome_index`` of the factorization of
    the smallest row (see :mod:`pcwords.factorization`).
    """

    y: Word
    m: Word
    x: Word
    palindrome_index: int


def row_pair_decompose(matrix: BWMatrix, i: int) -> RowPairDecomposition:
    """Decompose rows ``i`` and ``i + 1`` (1-based) of a perfectly clustering matrix.

    ``y`` is the longest common prefix and ``x`` the longest common suffix of
    the two rows; the middles are mutual reversals and ``x + y`` is one of the
    palindromic gaps of the top row's factorization.
    """
    n = len(matrix.rows)
    if not 1 <= i < n:
        raise ValueError(f"row pair index {i} out of range 1..{n - 1}")
    if not is_perfectly_clustering(matrix.source):
        raise ValueError(f"{matrix.source} is not perfectly clustering")
    from .factorization import canonical_special_factorization

    top = matrix.rows[i - 1].indices
    bottom = matrix.rows[i].indices
    p = 0
    while top[p] == bottom[p]:
        p += 1
    s = 0
    while n - 1 - s > p and top[n - 1 - s] == bottom[n - 1 - s]:
        s += 1
    mid_top = top[p:n - s]
    mid_bottom = bottom[p:n - s]
    if mid_bottom != mid_top[::-1]:
        raise InconsistencyError(
            f"middles of rows {i},{i + 1} of {matrix.source} are not mutual reversals")
    support = sorted(set(matrix.source.indices))
    j = support.index(mid_top[0]) + 1
    if j >= len(support) or mid_bottom[0] != support[j]:
        raise InconsistencyError(
            f"rows {i},{i + 1} of {matrix.source} do not step to the next letter")
    fact = canonical_special_factorization(matrix.rows[0])
    gap = top[n - s:] + top[:p]
    if fact.gaps[j - 1].indices != gap:
        raise InconsistencyError(
            f"suffix+prefix of rows {i},{i + 1} of {matrix.source} is not gap {j}")
    alphabet = matrix.source.alphabet
    return RowPairDecomposition(
        Word(alphabet, top[:p]),
        Word(alphabet, mid_top),
        Word(alphabet, top[n - s:]),
        j,
    )


def christoffel(p: int, q: int, alphabet: Alphabet | None = None) -> Word:
    """Lower Christoffel word with ``p`` small letters and ``q`` large ones.

    Built by the floor-difference rule: position i carries the large letter
    exactly when floor(i q / (p + q)) increases.  Requires gcd(p, q) = 1.
    """
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError(f"need nonnegative counts with p + q >= 1, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"({p}, {q}) is not coprime")
    if alphabet is None:
        alphabet = Alphabet("ab")
    elif alphabet.size < 2:
        raise ValueError("a Christoffel word needs a two-letter alphabet")
    n = p + q
    idx = []
    prev = 0
    for i in range(1, n + 1):
        cur = (i * q) // n
        idx.append(0 if cur == prev else 1)
        prev = cur
    return Word(alphabet, tuple(idx))

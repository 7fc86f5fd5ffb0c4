"""Special factorizations and the characterizations they support.

A *special factorization* of a word w writes it as

    w = a_1 g_1 a_2 g_2 ... g_{k-1} a_k

where a_1 < ... < a_k are exactly the letters occurring in w and the gap
words g_i may be empty.  The *reversed-skeleton* companion of such a
factorization is a_k g_{k-1} ... g_1 a_1;  when every gap is a palindrome the
companion equals the reversal of w.  Perfectly clustering Lyndon words are
characterized three ways: by their transform, by having a palindromic special
factorization together with a two-palindrome product decomposition, and by
having a special factorization whose companion is a rotation of the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .bwt import is_perfectly_clustering
from .words import Alphabet, InconsistencyError, Word

__all__ = [
    "DEFAULT_MARKING_CAP",
    "SpecialFactorization",
    "build_W",
    "canonical_special_factorization",
    "enumerate_special_factorizations",
    "satisfies_condition_ii",
    "satisfies_condition_iii",
    "split_conjugate_pair",
    "two_palindrome_split",
]

DEFAULT_MARKING_CAP = 1 << 20


@dataclass(frozen=True)
class SpecialFactorization:
    """A word written as a_1 g_1 a_2 ... g_{k-1} a_k over its occurring letters.

    ``letters`` are the alphabet ranks of a_1 < ... < a_k; ``gaps`` holds the
    k - 1 gap words.
    """

    alphabet: Alphabet
    letters: tuple[int, ...]
    gaps: tuple[Word, ...]

    def __post_init__(self):
        if len(self.gaps) != len(self.letters) - 1:
            raise ValueError("need exactly one gap between consecutive letters")
        if any(a >= b for a, b in zip(self.letters, self.letters[1:])):
            raise ValueError("marked letters must strictly increase")
        for gap in self.gaps:
            if gap.alphabet != self.alphabet:
                raise ValueError("gap words must share the factorization alphabet")

    @property
    def is_palindromic(self) -> bool:
        return all(gap.is_palindrome() for gap in self.gaps)

    def word(self) -> Word:
        """Reassemble the factorized word."""
        idx = [self.letters[0]]
        for gap, letter in zip(self.gaps, self.letters[1:]):
            idx.extend(gap.indices)
            idx.append(letter)
        return Word(self.alphabet, tuple(idx))

    def separated(self, sep: str = "|") -> str:
        """Render as a_1|g_1|a_2|...|a_k, e.g. ``a|cacac|b|bb|c``."""
        syms = self.alphabet.symbols
        pieces = [str(syms[self.letters[0]])]
        for gap, letter in zip(self.gaps, self.letters[1:]):
            pieces.append(str(gap))
            pieces.append(str(syms[letter]))
        return sep.join(pieces)


def build_W(f: SpecialFactorization) -> Word:
    """The reversed-skeleton word a_k g_{k-1} ... g_1 a_1.

    Gaps keep their own letter order; only the skeleton is reversed.  When all
    gaps are palindromes this equals the reversal of the factorized word.
    """
    idx = []
    k = len(f.letters)
    for t in range(k - 1, -1, -1):
        idx.append(f.letters[t])
        if t > 0:
            idx.extend(f.gaps[t - 1].indices)
    return Word(f.alphabet, tuple(idx))


def enumerate_special_factorizations(
    w: Word, max_markings: int = DEFAULT_MARKING_CAP
) -> list[SpecialFactorization]:
    """All special factorizations of ``w``, ordered by their marked positions.

    A factorization corresponds to marking one occurrence of each occurring
    letter at increasing positions, with the first letter marked at position 0
    and the last letter at the final position.  Empty when w does not start
    with its smallest letter or end with its largest.
    """
    idx = w.indices
    n = len(idx)
    if n == 0:
        return []
    support = w.support()
    k = len(support)
    if idx[0] != support[0] or idx[-1] != support[-1]:
        return []
    if k == 1:
        if n > 1:
            return []
        return [SpecialFactorization(w.alphabet, support, ())]
    middle_positions = [
        [p for p in range(1, n - 1) if idx[p] == letter] for letter in support[1:-1]
    ]
    candidates = prod(len(ps) for ps in middle_positions)
    if candidates > max_markings:
        raise ValueError(
            f"{candidates} candidate markings exceed the cap {max_markings}; "
            "pass a larger max_markings to search anyway")
    out = []
    for marks in product(*middle_positions):
        positions = (0, *marks, n - 1)
        if any(a >= b for a, b in zip(positions, positions[1:])):
            continue
        gaps = tuple(
            Word(w.alphabet, idx[positions[t] + 1:positions[t + 1]])
            for t in range(k - 1)
        )
        out.append(SpecialFactorization(w.alphabet, support, gaps))
    return out


def canonical_special_factorization(w: Word) -> SpecialFactorization:
    """The unique palindromic special factorization of a perfectly clustering Lyndon word.

    Each marked letter starts the lexicographically smallest suffix of w
    beginning with that letter; the resulting gaps are always palindromes.
    """
    if not (w.is_lyndon() and is_perfectly_clustering(w)):
        raise ValueError(f"{w} is not a perfectly clustering Lyndon word")
    idx = w.indices
    n = len(idx)
    support = w.support()
    positions = []
    for letter in support:
        best = min((p for p in range(n) if idx[p] == letter), key=lambda p: idx[p:])
        positions.append(best)
    if positions[0] != 0 or positions[-1] != n - 1 or any(
            a >= b for a, b in zip(positions, positions[1:])):
        raise InconsistencyError(f"smallest-suffix positions of {w} are not increasing")
    gaps = tuple(
        Word(w.alphabet, idx[positions[t] + 1:positions[t + 1]])
        for t in range(len(support) - 1)
    )
    for number, gap in enumerate(gaps, start=1):
        if not gap.is_palindrome():
            raise InconsistencyError(f"gap {number} of {w} is {gap}, not a palindrome")
    return SpecialFactorization(w.alphabet, support, gaps)


def two_palindrome_split(w: Word) -> tuple[Word, Word] | None:
    """First split of ``w`` into two palindromes, scanning cut points left to right.

    Either part may be empty; returns None when no split exists.  A word
    admits such a split exactly when it is a rotation of its reversal.
    """
    idx = w.indices
    for cut in range(len(idx) + 1):
        left, right = idx[:cut], idx[cut:]
        if left == left[::-1] and right == right[::-1]:
            return Word(w.alphabet, left), Word(w.alphabet, right)
    return None


def satisfies_condition_ii(
    w: Word,
) -> tuple[tuple[Word, Word], SpecialFactorization] | None:
    """Witness that ``w`` is a two-palindrome product with a palindromic factorization.

    Returns the split and the first all-palindromic special factorization, or
    None when either ingredient is missing.
    """
    if not w.is_primitive():
        raise ValueError(f"{w} is not primitive")
    split = two_palindrome_split(w)
    if split is None:
        return None
    for f in enumerate_special_factorizations(w):
        if f.is_palindromic:
            return split, f
    return None


def satisfies_condition_iii(w: Word) -> SpecialFactorization | None:
    """First special factorization whose reversed-skeleton word is a rotation of ``w``."""
    if not w.is_primitive():
        raise ValueError(f"{w} is not primitive")
    for f in enumerate_special_factorizations(w):
        if w.is_conjugate_to(build_W(f)):
            return f
    return None


def split_conjugate_pair(
    f: SpecialFactorization, i: int, cut: int
) -> tuple[Word, Word]:
    """The two rotations induced by cutting gap ``i`` (1-based) at ``cut``.

    Writing gap i as u v with u its first ``cut`` letters, the pair is

        v a_i g_{i-1} ... g_1 a_1 a_k g_{k-1} ... a_{i+1} u   (rotation of the
        reversed-skeleton word) and
        v a_{i+1} g_{i+1} ... g_{k-1} a_k a_1 g_1 ... a_i u   (rotation of the
        factorized word).

    The first is always lexicographically smaller: both start with v and then
    diverge on a_i versus a_{i+1}.
    """
    k = len(f.letters)
    if not 1 <= i <= k - 1:
        raise ValueError(f"gap index {i} out of range 1..{k - 1}")
    gap = f.gaps[i - 1].indices
    if not 0 <= cut <= len(gap):
        raise ValueError(f"cut {cut} out of range for gap of length {len(gap)}")
    u, v = gap[:cut], gap[cut:]

    descending = []  # a_i g_{i-1} a_{i-1} ... g_1 a_1
    for t in range(i - 1, -1, -1):
        descending.append(f.letters[t])
        if t > 0:
            descending.extend(f.gaps[t - 1].indices)
    tail = []  # a_k g_{k-1} ... g_{i+1} a_{i+1}
    for t in range(k - 1, i - 1, -1):
        tail.append(f.letters[t])
        if t > i:
            tail.extend(f.gaps[t - 1].indices)
    ascending_high = []  # a_{i+1} g_{i+1} ... g_{k-1} a_k
    for t in range(i, k):
        ascending_high.append(f.letters[t])
        if t < k - 1:
            ascending_high.extend(f.gaps[t].indices)
    ascending_low = []  # a_1 g_1 ... g_{i-1} a_i
    for t in range(i):
        ascending_low.append(f.letters[t])
        if t < i - 1:
            ascending_low.extend(f.gaps[t].indices)

    smaller = Word(f.alphabet, v + tuple(descending) + tuple(tail) + u)
    larger = Word(f.alphabet, v + tuple(ascending_high) + tuple(ascending_low) + u)
    return smaller, larger

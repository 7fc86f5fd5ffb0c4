"""Reduced words over signed letters and one-letter insertion automorphisms.

Group elements are kept in reduced form: factors are signed 1-based letter
ranks, +j for the j-th letter and -j for its inverse, with no adjacent
cancelling pair.  The two automorphism families insert a pivot letter next to
every other letter, on the side determined by comparing with the pivot; they
send short perfectly clustering words to longer ones.
"""

from __future__ import annotations

from .words import Alphabet, Word

__all__ = [
    "GroupWord",
    "apply_lambda",
    "apply_rho",
    "complement_antimorphism",
    "positive_image",
    "positivity_criterion",
]


def _reduce(factors) -> tuple[int, ...]:
    out = []
    for f in factors:
        if out and out[-1] == -f:
            out.pop()
        else:
            out.append(f)
    return tuple(out)


class GroupWord:
    """A free-group element over an ordered alphabet, in reduced form."""

    __slots__ = ("alphabet", "factors")

    def __init__(self, alphabet: Alphabet, factors=()):
        checked = []
        k = alphabet.size
        for f in factors:
            if not isinstance(f, int) or f == 0 or abs(f) > k:
                raise ValueError(f"factor {f!r} is not a signed letter rank of {alphabet!r}")
            checked.append(f)
        self.alphabet = alphabet
        self.factors = _reduce(checked)

    @classmethod
    def identity(cls, alphabet: Alphabet) -> "GroupWord":
        return cls(alphabet)

    @classmethod
    def from_word(cls, w: Word) -> "GroupWord":
        """Embed a plain word as a positive group element."""
        return cls(w.alphabet, tuple(i + 1 for i in w.indices))

    @classmethod
    def parse(cls, text: str, alphabet: Alphabet | None = None) -> "GroupWord":
        """Parse compact tokens: a letter, optionally followed by ``-`` for its inverse.

        ``"b-cab"`` is the inverse of b, then c, a, b.  ``"1"`` is the identity.
        """
        if text == "1":
            if alphabet is None:
                raise ValueError("the identity needs an explicit alphabet")
            return cls(alphabet)
        letters = [c for c in text if c != "-"]
        if alphabet is None:
            if not letters:
                raise ValueError("cannot infer an alphabet from an empty element")
            alphabet = Alphabet(sorted(set(letters)))
        factors = []
        pos = 0
        while pos < len(text):
            c = text[pos]
            if c == "-":
                raise ValueError(f"dangling inverse marker at position {pos} in {text!r}")
            rank = alphabet.rank(c) + 1
            pos += 1
            if pos < len(text) and text[pos] == "-":
                rank = -rank
                pos += 1
            factors.append(rank)
        return cls(alphabet, factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.alphabet == other.alphabet and self.factors == other.factors

    def __hash__(self):
        return hash((self.alphabet.symbols, self.factors))

    def __mul__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        if self.alphabet != other.alphabet:
            raise ValueError(f"mixed alphabets: {self.alphabet!r} vs {other.alphabet!r}")
        return GroupWord(self.alphabet, self.factors + other.factors)

    def inverse(self) -> "GroupWord":
        return GroupWord(self.alphabet, tuple(-f for f in reversed(self.factors)))

    __invert__ = inverse

    def reversal(self) -> "GroupWord":
        """Factors in reverse order, signs kept; fixes every single letter."""
        return GroupWord(self.alphabet, self.factors[::-1])

    def is_palindrome(self) -> bool:
        return self.factors == self.factors[::-1]

    def is_positive(self) -> bool:
        """True when the reduced form uses no inverse letters (identity included)."""
        return all(f > 0 for f in self.factors)

    def to_word(self) -> Word:
        if not self.is_positive():
            raise ValueError(f"{self} is not positive; it is no plain word")
        return Word(self.alphabet, tuple(f - 1 for f in self.factors))

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        syms = self.alphabet.symbols
        return "".join(
            str(syms[abs(f) - 1]) + ("-" if f < 0 else "") for f in self.factors
        )

    def pretty(self) -> str:
        if not self.factors:
            return "1"
        syms = self.alphabet.symbols
        return "".join(
            str(syms[abs(f) - 1]) + ("⁻¹" if f < 0 else "") for f in self.factors
        )

    def __repr__(self) -> str:
        return f"GroupWord({str(self)!r}, {''.join(map(str, self.alphabet.symbols))!r})"


def _as_group_word(g) -> GroupWord:
    return GroupWord.from_word(g) if isinstance(g, Word) else g


def _apply(rules, g: GroupWord) -> GroupWord:
    out = []
    for f in g.factors:
        image = rules[abs(f)]
        if f < 0:
            image = tuple(-x for x in reversed(image))
        out.extend(image)
    return GroupWord(g.alphabet, out)


def apply_lambda(letter, g) -> GroupWord:
    """Left insertion at pivot ``letter``: a -> a l^-1 below, l fixed, a -> l a above."""
    g = _as_group_word(g)
    pivot = g.alphabet.rank(letter) + 1
    rules = {}
    for a in range(1, g.alphabet.size + 1):
        if a < pivot:
            rules[a] = (a, -pivot)
        elif a == pivot:
            rules[a] = (a,)
        else:
            rules[a] = (pivot, a)
    return _apply(rules, g)


def apply_rho(letter, g) -> GroupWord:
    """Right insertion at pivot ``letter``: a -> a l below, l fixed, a -> l^-1 a above."""
    g = _as_group_word(g)
    pivot = g.alphabet.rank(letter) + 1
    rules = {}
    for a in range(1, g.alphabet.size + 1):
        if a < pivot:
            rules[a] = (a, pivot)
        elif a == pivot:
            rules[a] = (a,)
        else:
            rules[a] = (-pivot, a)
    return _apply(rules, g)


def positivity_criterion(w: Word, letter, side: str) -> bool:
    """Scan test for whether the image of a plain word stays positive.

    For ``rho``: every letter above the pivot must be immediately preceded by a
    letter at or below it.  For ``lambda``: every letter below the pivot must
    be immediately followed by a letter at or above it.
    """
    pivot = w.alphabet.rank(letter)
    idx = w.indices
    n = len(idx)
    if side == "rho":
        return all(p > 0 and idx[p - 1] <= pivot for p in range(n) if idx[p] > pivot)
    if side == "lambda":
        return all(p < n - 1 and idx[p + 1] >= pivot for p in range(n) if idx[p] < pivot)
    raise ValueError(f"side must be 'rho' or 'lambda', got {side!r}")


def positive_image(side: str, letter, w: Word) -> Word | None:
    """Image of a plain word under the chosen insertion, when it stays positive."""
    if side == "rho":
        g = apply_rho(letter, w)
    elif side == "lambda":
        g = apply_lambda(letter, w)
    else:
        raise ValueError(f"side must be 'rho' or 'lambda', got {side!r}")
    return g.to_word() if g.is_positive() else None


def complement_antimorphism(w: Word) -> Word:
    """Reverse the word and swap each letter with its mirror in the declared alphabet.

    Uses the full declared alphabet size, so words missing letters are mapped
    relative to the alphabet they were declared over, not their own support.
    Preserves perfect clustering.
    """
    k = w.alphabet.size
    return Word(w.alphabet, tuple(k - 1 - i for i in reversed(w.indices)))

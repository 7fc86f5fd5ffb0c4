"""Ordered alphabets and finite words over them.

Letters are stored as ranks into an explicitly ordered alphabet, so the
declared symbol order (not the character code) drives every lexicographic
comparison.  Words are immutable values; all operations return new words.
"""

from __future__ import annotations

from functools import total_ordering

__all__ = [
    "DEFAULT_SYMBOLS",
    "Alphabet",
    "InconsistencyError",
    "Word",
    "default_alphabet",
    "word",
]

DEFAULT_SYMBOLS = "abcdefghijklmnopqrstuvwxyz"


class InconsistencyError(RuntimeError):
    """A structural guarantee failed; this signals a bug, not bad input."""


class Alphabet:
    """A totally ordered alphabet of distinct symbols.

    The order is positional: ``Alphabet("bca")`` declares b < c < a.
    """

    __slots__ = ("symbols", "_ranks")

    def __init__(self, symbols):
        syms = tuple(symbols)
        if not syms:
            raise ValueError("an alphabet needs at least one symbol")
        if len(set(syms)) != len(syms):
            raise ValueError(f"alphabet symbols must be distinct, got {''.join(map(str, syms))!r}")
        self.symbols = syms
        self._ranks = {s: i for i, s in enumerate(syms)}

    @property
    def size(self) -> int:
        return len(self.symbols)

    def rank(self, symbol) -> int:
        """Position of ``symbol`` in the declared order (0-based)."""
        try:
            return self._ranks[symbol]
        except KeyError:
            raise ValueError(f"{symbol!r} is not a letter of {self!r}") from None

    def __contains__(self, symbol) -> bool:
        return symbol in self._ranks

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"Alphabet({''.join(map(str, self.symbols))!r})"


def default_alphabet(k: int) -> Alphabet:
    """The alphabet a < b < c < ... of size ``k``."""
    if not 1 <= k <= len(DEFAULT_SYMBOLS):
        raise ValueError(f"no default alphabet of size {k}")
    return Alphabet(DEFAULT_SYMBOLS[:k])


@total_ordering
class Word:
    """An immutable word over an :class:`Alphabet`.

    ``indices`` holds the letters as alphabet ranks; ``str(w)`` spells the word.
    The empty word is valid; operations that need letters reject it explicitly.
    """

    __slots__ = ("alphabet", "indices")

    def __init__(self, alphabet: Alphabet, indices=()):
        idx = tuple(indices)
        k = alphabet.size
        for i in idx:
            if not (isinstance(i, int) and 0 <= i < k):
                raise ValueError(f"letter rank {i!r} out of range for {alphabet!r}")
        self.alphabet = alphabet
        self.indices = idx

    @classmethod
    def from_str(cls, text, alphabet=None) -> "Word":
        """Parse ``text``; without an explicit alphabet, use its sorted distinct characters."""
        if alphabet is None:
            if not text:
                raise ValueError("an empty word needs an explicit alphabet")
            alphabet = Alphabet(sorted(set(text)))
        elif not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        return cls(alphabet, tuple(alphabet.rank(c) for c in text))

    def __len__(self) -> int:
        return len(self.indices)

    def __str__(self) -> str:
        syms = self.alphabet.symbols
        return "".join(str(syms[i]) for i in self.indices)

    def __repr__(self) -> str:
        return f"word({str(self)!r}, {''.join(map(str, self.alphabet.symbols))!r})"

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.alphabet == other.alphabet and self.indices == other.indices

    def __lt__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        self._require_same_alphabet(other)
        return self.indices < other.indices

    def __hash__(self):
        return hash((self.alphabet.symbols, self.indices))

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        self._require_same_alphabet(other)
        return Word(self.alphabet, self.indices + other.indices)

    def _require_same_alphabet(self, other: "Word"):
        if self.alphabet != other.alphabet:
            raise ValueError(f"mixed alphabets: {self.alphabet!r} vs {other.alphabet!r}")

    def reversal(self) -> "Word":
        return Word(self.alphabet, self.indices[::-1])

    def is_palindrome(self) -> bool:
        return self.indices == self.indices[::-1]

    def parikh(self) -> tuple[int, ...]:
        """Occurrence count of every alphabet letter, in alphabet order."""
        counts = [0] * self.alphabet.size
        for i in self.indices:
            counts[i] += 1
        return tuple(counts)

    def support(self) -> tuple[int, ...]:
        """Ranks of the letters that actually occur, increasing."""
        return tuple(sorted(set(self.indices)))

    def support_alphabet(self) -> Alphabet:
        """The sub-alphabet of occurring letters, in the same order."""
        syms = self.alphabet.symbols
        return Alphabet(tuple(syms[i] for i in self.support()))

    def is_primitive(self) -> bool:
        """True when the word is not a repetition of a strictly shorter block."""
        n = len(self.indices)
        if n == 0:
            raise ValueError("primitivity is undefined for the empty word")
        for d in range(1, n // 2 + 1):
            if n % d == 0 and self.indices[:d] * (n // d) == self.indices:
                return False
        return True

    def rotated(self, shift: int = 1) -> "Word":
        """Cyclic shift moving the first ``shift`` letters to the end.

        ``rotated(1)`` is the conjugation map sending a word a.u to u.a.
        """
        n = len(self.indices)
        if n == 0:
            raise ValueError("cannot rotate the empty word")
        s = shift % n
        return Word(self.alphabet, self.indices[s:] + self.indices[:s])

    def rotations(self) -> list["Word"]:
        """All cyclic shifts, starting from the word itself."""
        n = len(self.indices)
        if n == 0:
            raise ValueError("the empty word has no rotations")
        doubled = self.indices * 2
        return [Word(self.alphabet, doubled[i:i + n]) for i in range(n)]

    def conjugates_sorted(self) -> list["Word"]:
        """The n distinct rotations of a primitive word, lexicographically increasing."""
        if not self.is_primitive():
            raise ValueError(f"rotations of the non-primitive word {self} repeat")
        n = len(self.indices)
        doubled = self.indices * 2
        rows = sorted(doubled[i:i + n] for i in range(n))
        return [Word(self.alphabet, row) for row in rows]

    def is_lyndon(self) -> bool:
        """Primitive and strictly smallest among its rotations.

        Single letters count as Lyndon words.
        """
        if not self.is_primitive():
            return False
        n = len(self.indices)
        doubled = self.indices * 2
        return all(self.indices <= doubled[i:i + n] for i in range(1, n))

    def is_conjugate_to(self, other: "Word") -> bool:
        """True when the two words are cyclic rotations of each other."""
        if not isinstance(other, Word):
            raise TypeError(f"expected a Word, got {type(other).__name__}")
        self._require_same_alphabet(other)
        n = len(self.indices)
        if n != len(other.indices):
            return False
        if n == 0:
            return True
        doubled = self.indices * 2
        return any(doubled[i:i + n] == other.indices for i in range(n))


def word(text, alphabet=None) -> Word:
    """Shorthand for :meth:`Word.from_str`."""
    return Word.from_str(text, alphabet)

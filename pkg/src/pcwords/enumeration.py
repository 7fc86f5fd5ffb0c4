"""Two independent generators of perfectly clustering Lyndon words.

The brute-force generator walks all Lyndon words (Duval's successor rule) and
keeps those whose transform is weakly decreasing.  The closure generator
starts from the words of length at most two and repeatedly applies the
one-letter insertion automorphisms, keeping positive images only; every
perfectly clustering word is reachable this way from a shorter one.  The two
generators share no machinery past the word type, so their agreement is a
real check.
"""

from __future__ import annotations

import heapq
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .bwt import weakly_decreasing_transform
from .free_group import positive_image
from .words import Alphabet, Word, default_alphabet

__all__ = [
    "CrossValidationReport",
    "GenerationStep",
    "MAX_ALPHABET_CAP",
    "MAX_LENGTH_CAP",
    "cross_validate",
    "enumerate_brute",
    "enumerate_closure",
    "enumerate_closure_with_steps",
    "lyndon_tuples",
]

MAX_ALPHABET_CAP = 4
MAX_LENGTH_CAP = 16


def lyndon_tuples(k: int, max_len: int):
    """Rank tuples of every Lyndon word of length <= max_len over k letters.

    Duval's successor procedure; yields in lexicographic order across lengths.
    """
    state = [-1]
    while state:
        state[-1] += 1
        yield tuple(state)
        m = len(state)
        while len(state) < max_len:
            state.append(state[len(state) - m])
        while state and state[-1] == k - 1:
            state.pop()


def _check_caps(k, max_len, max_alphabet, max_length):
    if k < 1 or max_len < 1:
        raise ValueError("need an alphabet size and maximum length of at least 1")
    if k > max_alphabet:
        raise ValueError(
            f"alphabet size {k} exceeds the cap {max_alphabet}; "
            "pass max_alphabet= to search larger alphabets anyway")
    if max_len > max_length:
        raise ValueError(
            f"maximum length {max_len} exceeds the cap {max_length}; "
            "pass max_length= to search longer words anyway")


def _pcl_filter(batch):
    return [t for t in batch if weakly_decreasing_transform(t)]


def _resolve_alphabet(k, alphabet):
    if alphabet is None:
        return default_alphabet(k)
    if alphabet.size != k:
        raise ValueError(f"alphabet {alphabet!r} does not have {k} symbols")
    return alphabet


def enumerate_brute(
    k: int,
    max_len: int,
    full_alphabet: bool = False,
    alphabet: Alphabet | None = None,
    *,
    max_alphabet: int = MAX_ALPHABET_CAP,
    max_length: int = MAX_LENGTH_CAP,
    workers: int = 1,
) -> list[Word]:
    """All perfectly clustering Lyndon words of length <= max_len, (length, lex) order."""
    _check_caps(k, max_len, max_alphabet, max_length)
    alphabet = _resolve_alphabet(k, alphabet)
    candidates = lyndon_tuples(k, max_len)
    if full_alphabet:
        candidates = (t for t in candidates if len(set(t)) == k)
    if workers > 1:
        batches = []
        batch = []
        for t in candidates:
            batch.append(t)
            if len(batch) >= 4096:
                batches.append(batch)
                batch = []
        if batch:
            batches.append(batch)
        kept = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_pcl_filter, batches):
                kept.extend(part)
    else:
        kept = [t for t in candidates if weakly_decreasing_transform(t)]
    kept.sort(key=lambda t: (len(t), t))
    return [Word(alphabet, t) for t in kept]


@dataclass(frozen=True)
class GenerationStep:
    """One closure step: ``child`` is the positive image of ``parent``.

    ``side`` is ``"lambda"`` or ``"rho"``; ``letter`` the pivot.  The child is
    the raw image (some rotation of the recorded representative) and is always
    strictly longer than the parent.
    """

    parent: Word
    side: str
    letter: str
    child: Word


def enumerate_closure_with_steps(
    k: int,
    max_len: int,
    full_alphabet: bool = False,
    alphabet: Alphabet | None = None,
    *,
    max_alphabet: int = MAX_ALPHABET_CAP,
    max_length: int = MAX_LENGTH_CAP,
) -> tuple[list[Word], dict[Word, GenerationStep]]:
    """Closure enumeration plus one witness step per non-seed word found."""
    _check_caps(k, max_len, max_alphabet, max_length)
    alphabet = _resolve_alphabet(k, alphabet)
    seeds = enumerate_brute(
        k, min(2, max_len), alphabet=alphabet,
        max_alphabet=max_alphabet, max_length=max_length)
    found: dict[tuple, GenerationStep | None] = {w.indices: None for w in seeds}
    heap = [(len(t), t) for t in found]
    heapq.heapify(heap)
    while heap:
        _, rep = heapq.heappop(heap)
        parent_len = len(rep)
        rep_word = Word(alphabet, rep)
        for parent in rep_word.rotations():
            for side in ("lambda", "rho"):
                for letter in alphabet.symbols:
                    image = positive_image(side, letter, parent)
                    if image is None:
                        continue
                    if not parent_len < len(image) <= max_len:
                        continue
                    if not image.is_primitive():
                        continue
                    n = len(image.indices)
                    doubled = image.indices * 2
                    child_rep = min(doubled[i:i + n] for i in range(n))
                    if child_rep in found:
                        continue
                    found[child_rep] = GenerationStep(parent, side, letter, image)
                    heapq.heappush(heap, (n, child_rep))
    reps = sorted(found, key=lambda t: (len(t), t))
    if full_alphabet:
        reps = [t for t in reps if len(set(t)) == k]
    words = [Word(alphabet, t) for t in reps]
    steps = {
        Word(alphabet, t): step
        for t, step in found.items()
        if step is not None
    }
    return words, steps


def enumerate_closure(
    k: int,
    max_len: int,
    full_alphabet: bool = False,
    alphabet: Alphabet | None = None,
    *,
    max_alphabet: int = MAX_ALPHABET_CAP,
    max_length: int = MAX_LENGTH_CAP,
) -> list[Word]:
    """Closure enumeration; same output contract as :func:`enumerate_brute`."""
    words, _ = enumerate_closure_with_steps(
        k, max_len, full_alphabet, alphabet,
        max_alphabet=max_alphabet, max_length=max_length)
    return words


@dataclass
class CrossValidationReport:
    """Agreement report between the brute-force and closure generators."""

    alphabet_size: int
    max_length: int
    full_alphabet: bool
    words: tuple[Word, ...]
    brute_only: tuple[Word, ...]
    closure_only: tuple[Word, ...]
    counts_by_length: dict[int, int] = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return not self.brute_only and not self.closure_only


def cross_validate(
    k: int,
    max_len: int,
    full_alphabet: bool = False,
    alphabet: Alphabet | None = None,
    *,
    max_alphabet: int = MAX_ALPHABET_CAP,
    max_length: int = MAX_LENGTH_CAP,
    workers: int = 1,
) -> CrossValidationReport:
    """Run both generators and report every word one finds and the other misses."""
    brute = enumerate_brute(
        k, max_len, full_alphabet, alphabet,
        max_alphabet=max_alphabet, max_length=max_length, workers=workers)
    closure = enumerate_closure(
        k, max_len, full_alphabet, alphabet,
        max_alphabet=max_alphabet, max_length=max_length)
    brute_set = {w.indices for w in brute}
    closure_set = {w.indices for w in closure}
    counts: dict[int, int] = {}
    for w in brute:
        counts[len(w)] = counts.get(len(w), 0) + 1
    return CrossValidationReport(
        alphabet_size=k,
        max_length=max_len,
        full_alphabet=full_alphabet,
        words=tuple(brute),
        brute_only=tuple(w for w in brute if w.indices not in closure_set),
        closure_only=tuple(w for w in closure if w.indices not in brute_set),
        counts_by_length=counts,
    )

"""Executable statements of the library's theorems, scanned exhaustively.

Every check walks all instances up to explicit size caps and returns a
:class:`CheckResult` with the number of instances tried and any
counterexamples found; a correct implementation finds none.  The randomized
palindrome check is seeded and therefore reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .bwt import bw_matrix, is_perfectly_clustering, row_pair_decompose
from .enumeration import enumerate_brute, lyndon_tuples
from .factorization import (
    build_W,
    canonical_special_factorization,
    enumerate_special_factorizations,
    satisfies_condition_ii,
    satisfies_condition_iii,
    split_conjugate_pair,
)
from .free_group import (
    GroupWord,
    apply_lambda,
    apply_rho,
    positive_image,
    positivity_criterion,
)
from .interval_exchange import IntervalExchange, all_compositions, iet_of_word
from .words import InconsistencyError, Word, default_alphabet

__all__ = [
    "CheckResult",
    "check_consecutive_rows",
    "check_corollary1",
    "check_corollary2",
    "check_lemma1",
    "check_lemma2",
    "check_lemma4",
    "check_lemma5",
    "check_lemma7",
    "check_lemma8",
    "check_lemma9",
    "check_lemma10",
    "check_lemma11",
    "check_positivity_criterion",
    "check_theorem1",
    "check_theorem2",
    "run_all",
]


@dataclass
class CheckResult:
    name: str
    instances: int
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures

    def render(self, max_failures: int = 5) -> list[str]:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{self.name}: {status} ({self.instances} instances)"]
        for f in self.failures[:max_failures]:
            lines.append(f"    counterexample: {f}")
        hidden = len(self.failures) - max_failures
        if hidden > 0:
            lines.append(f"    ... {hidden} more")
        return lines


_PCL_CACHE: dict[tuple[int, int], tuple[Word, ...]] = {}


def _pcl_lyndon_words(k: int, max_n: int, workers: int = 1) -> tuple[Word, ...]:
    key = (k, max_n)
    if key not in _PCL_CACHE:
        _PCL_CACHE[key] = tuple(enumerate_brute(k, max_n, workers=workers))
    return _PCL_CACHE[key]


def check_theorem1(max_n: int = 12, composition_k: int = 4, word_k: int = 3,
                   workers: int = 1) -> CheckResult:
    """Single-cycle exchanges encode perfectly clustering words, and back."""
    failures = []
    instances = 0
    for parts in all_compositions(max_n, composition_k):
        exchange = IntervalExchange(parts)
        if not exchange.is_circular():
            continue
        encoded = exchange.encoding(1)
        instances += 1
        if not (encoded.is_primitive() and is_perfectly_clustering(encoded)):
            failures.append(f"encoding of {parts} from 1 is {encoded}, not perfectly clustering")
    for rep in _pcl_lyndon_words(word_k, max_n, workers):
        for w in rep.rotations():
            exchange, rank = iet_of_word(w)
            back = exchange.encoding(rank, alphabet=w.support_alphabet())
            instances += 1
            if str(back) != str(w):
                failures.append(f"{w} re-encodes as {back} from rank {rank}")
    return CheckResult(
        "Theorem 1 (perfectly clustering words = single-cycle exchange encodings)",
        instances, failures)


def check_theorem2(caps: dict[int, int] | None = None) -> CheckResult:
    """Three-way equivalence of the clustering, palindromic, and rotation conditions."""
    if caps is None:
        caps = {2: 10, 3: 8}
    failures = []
    instances = 0
    for k in sorted(caps):
        max_n = caps[k]
        alphabet = default_alphabet(k)
        for rep_t in lyndon_tuples(k, max_n):
            if len(set(rep_t)) != k:
                continue
            rep = Word(alphabet, rep_t)
            class_clusters = is_perfectly_clustering(rep)
            for w in rep.rotations():
                first = class_clusters and w.indices == rep_t
                second = satisfies_condition_ii(w) is not None
                third = satisfies_condition_iii(w) is not None
                instances += 1
                if not first == second == third:
                    failures.append(
                        f"{w}: clustering Lyndon={first}, palindromic={second}, rotation={third}")
    return CheckResult(
        "Theorem 2 (three characterizations of perfectly clustering Lyndon words)",
        instances, failures)


def check_lemma1(max_n: int = 12, max_k: int = 4) -> CheckResult:
    """A block minimum steps to the next one iff the composition balances there."""
    failures = []
    instances = 0
    for parts in all_compositions(max_n, max_k):
        exchange = IntervalExchange(parts)
        minima = exchange.minima()
        for h in range(1, exchange.k):
            steps = exchange.sigma[minima[h - 1] - 1] == minima[h]
            balanced = sum(parts[h:]) == sum(parts[:h])
            instances += 1
            if steps != balanced:
                failures.append(f"{parts}: h={h} steps={steps} balanced={balanced}")
    return CheckResult(
        "Lemma 1 (block minimum steps to the next iff the composition balances)",
        instances, failures)


def check_lemma2(max_n: int = 12, max_k: int = 4) -> CheckResult:
    """Encodings from increasing start points are lexicographically increasing."""
    failures = []
    instances = 0
    for parts in all_compositions(max_n, max_k):
        exchange = IntervalExchange(parts)
        if not exchange.is_circular():
            continue
        encodings = [exchange.encoding(r) for r in range(1, exchange.n + 1)]
        for r in range(exchange.n - 1):
            instances += 1
            if not encodings[r] < encodings[r + 1]:
                failures.append(f"{parts}: encoding({r + 1}) !< encoding({r + 2})")
    return CheckResult(
        "Lemma 2 (encodings follow the start-point order)", instances, failures)


def _random_palindrome(rng: random.Random, alphabet, max_len: int) -> GroupWord:
    k = alphabet.size
    signed = [j for j in range(1, k + 1)] + [-j for j in range(1, k + 1)]
    m = rng.randint(0, max_len)
    half, odd = divmod(m, 2)
    arm = []
    for _ in range(half):
        choices = [f for f in signed if not arm or f != -arm[-1]]
        arm.append(rng.choice(choices))
    if odd:
        center = rng.choice([f for f in signed if not arm or f != -arm[-1]])
        seq = arm + [center] + arm[::-1]
    else:
        seq = arm + arm[::-1]
    return GroupWord(alphabet, seq)


def check_lemma4(samples: int = 10000, max_len: int = 12, k: int = 3,
                 seed: int = 0) -> CheckResult:
    """For palindromic g, the left image times the pivot (and mirror) stays palindromic."""
    rng = random.Random(seed)
    alphabet = default_alphabet(k)
    failures = []
    instances = 0
    for _ in range(samples):
        g = _random_palindrome(rng, alphabet, max_len)
        for rank in range(k):
            letter = alphabet.symbols[rank]
            pivot = GroupWord(alphabet, (rank + 1,))
            left = apply_lambda(letter, g) * pivot
            right = pivot * apply_rho(letter, g)
            instances += 2
            if not left.is_palindrome():
                failures.append(f"lambda_{letter}({g}){letter} = {left} is not a palindrome")
            if not right.is_palindrome():
                failures.append(f"{letter}rho_{letter}({g}) = {right} is not a palindrome")
    return CheckResult(
        "Lemma 4 (insertion automorphisms preserve palindromes)", instances, failures)


def check_lemma5(max_n: int = 6, k: int = 3) -> CheckResult:
    """Palindromic factors before an above-pivot letter map to positive palindromes."""
    alphabet = default_alphabet(k)
    failures = []
    instances = 0
    for n in range(1, max_n + 1):
        for t in product(range(k), repeat=n):
            u = Word(alphabet, t)
            for rank in range(k):
                letter = alphabet.symbols[rank]
                if positive_image("rho", letter, u) is None:
                    continue
                for j in range(n):
                    if t[j] <= rank:
                        continue
                    for i in range(j):
                        factor = t[i:j]
                        if factor != factor[::-1]:
                            continue
                        image = apply_rho(
                            letter, GroupWord(alphabet, tuple(x + 1 for x in factor)))
                        result = image * GroupWord(alphabet, (-(rank + 1),))
                        instances += 1
                        if not (result.is_positive() and result.is_palindrome()):
                            failures.append(
                                f"u={u} pivot={letter} factor={Word(alphabet, factor)}: "
                                f"got {result}")
    return CheckResult(
        "Lemma 5 (palindromic factors map to positive palindromes)", instances, failures)


def check_lemma7(max_n: int = 12, max_k: int = 3, workers: int = 1) -> CheckResult:
    """Cutting a gap yields an ordered pair of rotations of the two skeleton words."""
    failures = []
    instances = 0
    for w in _pcl_lyndon_words(max_k, max_n, workers):
        f = canonical_special_factorization(w)
        companion = build_W(f)
        for i in range(1, len(f.letters)):
            for cut in range(len(f.gaps[i - 1]) + 1):
                smaller, larger = split_conjugate_pair(f, i, cut)
                instances += 1
                if not smaller < larger:
                    failures.append(f"{w}: gap {i} cut {cut}: {smaller} !< {larger}")
                elif not smaller.is_conjugate_to(companion):
                    failures.append(f"{w}: gap {i} cut {cut}: {smaller} not a rotation of {companion}")
                elif not larger.is_conjugate_to(w):
                    failures.append(f"{w}: gap {i} cut {cut}: {larger} not a rotation of {w}")
    return CheckResult(
        "Lemma 7 (gap cuts give ordered conjugate pairs)", instances, failures)


def check_lemma8(max_n: int = 12, max_k: int = 3, workers: int = 1) -> CheckResult:
    """Gap cuts produce exactly the consecutive row pairs; the matrix ends are w and its companion."""
    failures = []
    instances = 0
    for w in _pcl_lyndon_words(max_k, max_n, workers):
        f = canonical_special_factorization(w)
        companion = build_W(f)
        rows = bw_matrix(w).rows
        instances += 1
        if rows[0] != w or rows[-1] != companion:
            failures.append(f"{w}: matrix ends are {rows[0]}, {rows[-1]}")
            continue
        expected = {
            (rows[j].indices, rows[j + 1].indices) for j in range(len(rows) - 1)
        }
        built = set()
        for i in range(1, len(f.letters)):
            for cut in range(len(f.gaps[i - 1]) + 1):
                smaller, larger = split_conjugate_pair(f, i, cut)
                built.add((smaller.indices, larger.indices))
        if built != expected:
            failures.append(f"{w}: cut pairs differ from consecutive row pairs")
    return CheckResult(
        "Lemma 8 (consecutive rows are exactly the gap-cut pairs)", instances, failures)


def _suffix_from(f, i: int) -> list[int]:
    # a_i g_i ... g_{k-1} a_k as raw ranks
    idx = []
    k = len(f.letters)
    for t in range(i - 1, k):
        idx.append(f.letters[t])
        if t < k - 1:
            idx.extend(f.gaps[t].indices)
    return idx


def _prefix_before(f, i: int) -> list[int]:
    # a_1 g_1 ... a_{i-1} g_{i-1} as raw ranks
    idx = []
    for t in range(i - 1):
        idx.append(f.letters[t])
        idx.extend(f.gaps[t].indices)
    return idx


def check_lemma9(max_n: int = 12, max_k: int = 3, workers: int = 1) -> CheckResult:
    """Rotating the factorization at marked letter i gives the smallest row starting with it."""
    failures = []
    instances = 0
    for w in _pcl_lyndon_words(max_k, max_n, workers):
        f = canonical_special_factorization(w)
        rows = bw_matrix(w).rows
        for i in range(1, len(f.letters) + 1):
            target = tuple(_suffix_from(f, i) + _prefix_before(f, i))
            letter = f.letters[i - 1]
            smallest = next(r for r in rows if r.indices[0] == letter)
            instances += 1
            if smallest.indices != target:
                failures.append(
                    f"{w}: smallest row starting with letter {i} is {smallest}, "
                    f"expected {Word(w.alphabet, target)}")
    return CheckResult(
        "Lemma 9 (smallest rotation per starting letter)", instances, failures)


def check_lemma10(max_n: int = 12, max_k: int = 3, workers: int = 1) -> CheckResult:
    """An empty gap forces the letter counts to balance around it."""
    failures = []
    instances = 0
    for w in _pcl_lyndon_words(max_k, max_n, workers):
        f = canonical_special_factorization(w)
        counts = w.parikh()
        support_counts = [counts[a] for a in f.letters]
        for s in range(1, len(f.letters)):
            instances += 1
            if len(f.gaps[s - 1]) == 0 and sum(support_counts[:s]) != sum(support_counts[s:]):
                failures.append(f"{w}: gap {s} empty but counts unbalanced")
    return CheckResult(
        "Lemma 10 (an empty gap forces balanced counts)", instances, failures)


def check_lemma11(max_n: int = 12, max_k: int = 3, workers: int = 1) -> CheckResult:
    """With a positive right-insertion image, gaps at and above the pivot are nonempty.

    The gap at the pivot itself is only forced when the insertion strictly
    grows the word, i.e. the letters below the pivot outnumber those above;
    that is the regime in which the statement is applied.
    """
    failures = []
    instances = 0
    for w in _pcl_lyndon_words(max_k, max_n, workers):
        f = canonical_special_factorization(w)
        counts = w.parikh()
        support = f.letters
        k = len(support)
        for rank in range(w.alphabet.size):
            letter = w.alphabet.symbols[rank]
            if positive_image("rho", letter, w) is None:
                continue
            i = sum(1 for a in support if a <= rank)
            if i == 0:
                continue
            for j in range(i + 1, k):
                instances += 1
                if len(f.gaps[j - 1]) == 0:
                    failures.append(f"{w}: pivot {letter}, gap {j} empty above the pivot")
            below = sum(counts[a] for a in support if a < rank)
            above = sum(counts[a] for a in support if a > rank)
            if below > above and i <= k - 1:
                instances += 1
                if len(f.gaps[i - 1]) == 0:
                    failures.append(f"{w}: pivot {letter}, gap {i} empty at the pivot")
    return CheckResult(
        "Lemma 11 (gaps at and above the pivot are nonempty)", instances, failures)


def check_consecutive_rows(max_n: int = 12, max_k: int = 3, workers: int = 1) -> CheckResult:
    """Every consecutive row pair splits as y m x / y (reversed m) x with x y a gap."""
    failures = []
    instances = 0
    for w in _pcl_lyndon_words(max_k, max_n, workers):
        matrix = bw_matrix(w)
        gaps = [g.indices for g in canonical_special_factorization(w).gaps]
        for i in range(1, len(matrix.rows)):
            instances += 1
            try:
                d = row_pair_decompose(matrix, i)
            except InconsistencyError as exc:
                failures.append(f"{w}: rows {i},{i + 1}: {exc}")
                continue
            top = d.y + d.m + d.x
            bottom = d.y + d.m.reversal() + d.x
            glue = (d.x + d.y).indices
            if top != matrix.rows[i - 1] or bottom != matrix.rows[i]:
                failures.append(f"{w}: rows {i},{i + 1} do not reassemble")
            elif glue != gaps[d.palindrome_index - 1]:
                failures.append(f"{w}: rows {i},{i + 1}: x+y is not gap {d.palindrome_index}")
    return CheckResult(
        "Consecutive-rows theorem (rows split as y m x / y reversed-m x)",
        instances, failures)


def check_corollary1(max_n: int = 12, max_k: int = 3, workers: int = 1) -> CheckResult:
    """The palindromic factorization is unique and given by smallest suffixes."""
    failures = []
    instances = 0
    for w in _pcl_lyndon_words(max_k, max_n, workers):
        f = canonical_special_factorization(w)
        palindromic = [
            g for g in enumerate_special_factorizations(w) if g.is_palindromic
        ]
        instances += 1
        if len(palindromic) != 1 or palindromic[0] != f:
            failures.append(f"{w}: {len(palindromic)} palindromic factorizations")
            continue
        if f.word() != w:
            failures.append(f"{w}: factorization reassembles to {f.word()}")
            continue
        idx = w.indices
        for i in range(1, len(f.letters) + 1):
            letter = f.letters[i - 1]
            best = min(idx[p:] for p in range(len(idx)) if idx[p] == letter)
            if best != tuple(_suffix_from(f, i)):
                failures.append(f"{w}: marked letter {i} does not start the smallest suffix")
    return CheckResult(
        "Corollary 1 (the palindromic factorization is unique)", instances, failures)


def check_corollary2(max_n: int = 12, max_k: int = 3, workers: int = 1) -> CheckResult:
    """A gap is empty exactly when the letter counts balance around it."""
    failures = []
    instances = 0
    for w in _pcl_lyndon_words(max_k, max_n, workers):
        f = canonical_special_factorization(w)
        counts = w.parikh()
        support_counts = [counts[a] for a in f.letters]
        for s in range(1, len(f.letters)):
            empty = len(f.gaps[s - 1]) == 0
            balanced = sum(support_counts[:s]) == sum(support_counts[s:])
            instances += 1
            if empty != balanced:
                failures.append(f"{w}: gap {s} empty={empty} balanced={balanced}")
    return CheckResult(
        "Corollary 2 (empty gap iff balanced counts)", instances, failures)


def check_positivity_criterion(max_n: int = 8, k: int = 3) -> CheckResult:
    """The neighbor-scan test matches actual positivity of the insertion images."""
    alphabet = default_alphabet(k)
    failures = []
    instances = 0
    for n in range(1, max_n + 1):
        for t in product(range(k), repeat=n):
            w = Word(alphabet, t)
            for rank in range(k):
                letter = alphabet.symbols[rank]
                for side, apply in (("lambda", apply_lambda), ("rho", apply_rho)):
                    actual = apply(letter, w).is_positive()
                    predicted = positivity_criterion(w, letter, side)
                    instances += 1
                    if actual != predicted:
                        failures.append(
                            f"{w} pivot={letter} side={side}: "
                            f"image positive={actual}, scan={predicted}")
    return CheckResult(
        "Positivity criterion (neighbor scan = image positivity)", instances, failures)


def run_all(k: int = 3, max_len: int = 8, seed: int = 0, samples: int = 10000,
            workers: int = 1) -> list[CheckResult]:
    """Run every check at caps derived from one alphabet size and length bound."""
    theorem2_caps = {kk: max_len for kk in range(2, max(k, 2) + 1)}
    return [
        check_theorem1(max_len, k, min(k, 3), workers),
        check_theorem2(theorem2_caps),
        check_lemma1(max_len, k),
        check_lemma2(max_len, k),
        check_lemma4(samples=samples, seed=seed, k=min(k, 3)),
        check_lemma5(min(max_len, 6), min(k, 3)),
        check_lemma7(max_len, min(k, 3), workers),
        check_lemma8(max_len, min(k, 3), workers),
        check_lemma9(max_len, min(k, 3), workers),
        check_lemma10(max_len, min(k, 3), workers),
        check_lemma11(max_len, min(k, 3), workers),
        check_consecutive_rows(max_len, min(k, 3), workers),
        check_corollary1(max_len, min(k, 3), workers),
        check_corollary2(max_len, min(k, 3), workers),
        check_positivity_criterion(min(max_len, 8), min(k, 3)),
    ]

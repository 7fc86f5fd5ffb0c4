"""Perfectly clustering words.

A word clusters perfectly when its Burrows-Wheeler transform is weakly
decreasing.  This package classifies words by their transform, computes the
unique palindromic special factorization of perfectly clustering Lyndon
words, realizes them as encodings of symmetric discrete interval exchanges,
generates them through free-group insertion automorphisms, and verifies the
whole theory exhaustively at small sizes.
"""

from .bwt import (
    BWMatrix,
    Clustering,
    RowPairDecomposition,
    bw_matrix,
    bwt,
    christoffel,
    clustering_permutation,
    is_perfectly_clustering,
    row_pair_decompose,
)
from .enumeration import (
    CrossValidationReport,
    GenerationStep,
    cross_validate,
    enumerate_brute,
    enumerate_closure,
    enumerate_closure_with_steps,
    lyndon_tuples,
)
from .factorization import (
    SpecialFactorization,
    build_W,
    canonical_special_factorization,
    enumerate_special_factorizations,
    satisfies_condition_ii,
    satisfies_condition_iii,
    split_conjugate_pair,
    two_palindrome_split,
)
from .free_group import (
    GroupWord,
    apply_lambda,
    apply_rho,
    complement_antimorphism,
    positive_image,
    positivity_criterion,
)
from .interval_exchange import (
    IntervalExchange,
    all_compositions,
    compositions,
    iet_of_word,
)
from .verification import CheckResult, run_all
from .words import (
    Alphabet,
    InconsistencyError,
    Word,
    default_alphabet,
    word,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BWMatrix",
    "CheckResult",
    "Clustering",
    "CrossValidationReport",
    "GenerationStep",
    "GroupWord",
    "InconsistencyError",
    "IntervalExchange",
    "RowPairDecomposition",
    "SpecialFactorization",
    "Word",
    "all_compositions",
    "apply_lambda",
    "apply_rho",
    "build_W",
    "bw_matrix",
    "bwt",
    "canonical_special_factorization",
    "christoffel",
    "clustering_permutation",
    "complement_antimorphism",
    "compositions",
    "cross_validate",
    "default_alphabet",
    "enumerate_brute",
    "enumerate_closure",
    "enumerate_closure_with_steps",
    "enumerate_special_factorizations",
    "iet_of_word",
    "is_perfectly_clustering",
    "lyndon_tuples",
    "positive_image",
    "positivity_criterion",
    "row_pair_decompose",
    "run_all",
    "satisfies_condition_ii",
    "satisfies_condition_iii",
    "split_conjugate_pair",
    "two_palindrome_split",
    "word",
]

"""Symbolic arithmetic, centers and abelianizations for groups built from 1 and Z
by direct products and wreath products ``A wr_n Z``."""

from .analysis import (
    CommutatorWitness, abelianize, center_generators, commutator_witness,
    integer_rank, is_central, is_commutator_element,
)
from .element import (
    IntE, PairE, TrivE, WreathE, commutator, generating_set, identity, inverse,
    multiply, parse_element, print_element, random_element, typecheck,
)
from .word import (
    Prod, Triv, Wreath, Zed, beta1, enumerate_words, normalize, parse_word,
    print_word, word_length,
)

__version__ = "0.1.0"

"""DFA algebra, minimal distinguishing-automaton synthesis, and a
CNF-to-DFA-pair pipeline with an end-to-end satisfiability check."""

from .automata import (
    Alphabet,
    AlphabetError,
    AutomataError,
    Dfa,
    DfaParseError,
    Word,
    is_equivalent,
    is_subset,
    parse_dfa,
    product,
    serialize_dfa,
)
from .distinguish import (
    DistinguishingEncoding,
    Orientation,
    SynthOutcome,
    brute_force_min_distinguishing,
    encode_distinguishing,
    is_distinguishing,
    shortest_distinguishing_word,
    synth_min_distinguishing,
)
from .reduction import (
    Assignment,
    CnfFormula,
    FormulaError,
    LemmaReport,
    REDUCTION_ALPHABET,
    assignment_word,
    build_lower_dfa,
    build_upper_dfa,
    in_lower_language,
    in_upper_language,
    verify_lemma,
    witness_dfa,
    word_assignment,
)
from .satsolve import CnfInstance, DimacsParseError, Model, evaluate, parse_dimacs, solve

__all__ = [
    "Alphabet",
    "AlphabetError",
    "Assignment",
    "AutomataError",
    "CnfFormula",
    "CnfInstance",
    "Dfa",
    "DfaParseError",
    "DimacsParseError",
    "DistinguishingEncoding",
    "FormulaError",
    "LemmaReport",
    "Model",
    "Orientation",
    "REDUCTION_ALPHABET",
    "SynthOutcome",
    "Word",
    "assignment_word",
    "brute_force_min_distinguishing",
    "build_lower_dfa",
    "build_upper_dfa",
    "encode_distinguishing",
    "evaluate",
    "in_lower_language",
    "in_upper_language",
    "is_distinguishing",
    "is_equivalent",
    "is_subset",
    "parse_dfa",
    "parse_dimacs",
    "product",
    "serialize_dfa",
    "shortest_distinguishing_word",
    "solve",
    "synth_min_distinguishing",
    "verify_lemma",
    "witness_dfa",
    "word_assignment",
]

__version__ = "0.1.0"

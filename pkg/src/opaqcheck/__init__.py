"""Deciders for language-based information-flow properties of finite
transition systems: opacity of regular secrets under static and Orwellian
observers, non-interference (NI) and intransitive non-interference (INI),
together with executable translations between the three problems and a
brute-force evaluator for auditing every decider."""

from .automata import (
    SILENT,
    EpsilonNfa,
    Inclusion,
    InvalidModel,
    Lts,
    PartitionedAlphabet,
    State,
    Word,
    alphabet,
    complement,
    complete,
    determinize,
    downgrade_entry_states,
    entry_words,
    find_isomorphism,
    format_word,
    incorporate_secret,
    is_subset,
    lts_to_nfa,
    product,
    rebase,
    render_state,
    restrict,
    step,
    trim,
    with_alphabet,
    with_set,
    word,
)
from .interference import check_ini, check_ini_decomposed, check_ini_direct, check_ni
from .modelfile import ParseError, parse_model, render_model
from .observation import (
    Factorization,
    ObservationKind,
    factorize,
    project_language,
    project_natural,
    project_orwellian,
)
from .opacity import check_opacity_orwellian, check_opacity_static, disclosing_class
from .oracle import (
    BoundedLanguage,
    enumerate_language,
    exactness_bound,
    nonsecret_partner,
    oracle_check_opacity,
)
from .reductions import ReductionOutput, ini_to_opacity, opacity_to_ini, opacity_to_ni
from .regexlang import RegexError, compile_regex
from .verdicts import InterferenceVerdict, OpacityVerdict, SubCheck

__all__ = [
    "SILENT",
    "EpsilonNfa",
    "Factorization",
    "Inclusion",
    "InterferenceVerdict",
    "InvalidModel",
    "Lts",
    "ObservationKind",
    "OpacityVerdict",
    "ParseError",
    "PartitionedAlphabet",
    "ReductionOutput",
    "RegexError",
    "State",
    "SubCheck",
    "BoundedLanguage",
    "Word",
    "alphabet",
    "check_ini",
    "check_ini_decomposed",
    "check_ini_direct",
    "check_ni",
    "check_opacity_orwellian",
    "check_opacity_static",
    "compile_regex",
    "complement",
    "complete",
    "determinize",
    "disclosing_class",
    "downgrade_entry_states",
    "entry_words",
    "enumerate_language",
    "exactness_bound",
    "factorize",
    "find_isomorphism",
    "format_word",
    "incorporate_secret",
    "ini_to_opacity",
    "is_subset",
    "lts_to_nfa",
    "nonsecret_partner",
    "opacity_to_ini",
    "opacity_to_ni",
    "oracle_check_opacity",
    "parse_model",
    "product",
    "project_language",
    "project_natural",
    "project_orwellian",
    "rebase",
    "render_model",
    "render_state",
    "restrict",
    "step",
    "trim",
    "with_alphabet",
    "with_set",
    "word",
]

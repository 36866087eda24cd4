"""Sturmian sequences, lexicographic shift-extremal sets and expansions of 1
in non-integer bases, computed exactly."""
from .beta import (
    ExpansionDigits, NeedsRefinement, RationalInterval, RoundTrip, SelfSturmianReport,
    TargetWidthUnreachable, beta_from_expansion, certify_enclosure, greedy_expansion,
    greedy_expansion_exact, is_univoque_expansion, round_trip, self_sturmian_check,
)
from .harness import (
    SuiteReport, default_slopes, sturmian_diagnostics, verify_mirror_lemma, verify_prop1,
    verify_prop2, verify_prop3,
)
from .literals import LiteralError, parse_sequence, parse_slope, parse_surd
from .membership import (
    FailsAt, Holds, Inconclusive, Side, check, gamma1_exact, gamma1_prefix, gamma_exact,
    gamma_prefix, inf_of_shifts, mirror_prefix_completion, sup_of_shifts, xi_exact,
    xi_prefix, xi_v_exact, xi_v_prefix,
)
from .sturmian import (
    CFDirectives, Intercept, RationalSlopeError, Slope, characteristic_stream,
    mechanical_stream, standard_prefix, standard_word,
)
from .surd import QuadraticSurd
from .words import (
    BitWord, EventuallyPeriodicWord, Ordering3, SequenceStream, Undecided, complement,
    cosnard_forward, cosnard_inverse, factor_complexity, find_unbalanced_pair,
    lex_compare_exact, lex_compare_prefix, prepend, shift,
)

__version__ = "0.1.0"

"""Reductions and nesting index of double occurrence words."""

from .words import (
    ParsedWord,
    Span,
    WordError,
    ascending_relabel,
    canonical_form,
    format_word,
    is_inherent,
    letter_removal,
    parse_word,
    reverse,
    reverse_equivalent,
    set_removal,
    subword_removal,
    validate_dow,
)
from .patterns import (
    InapplicableError,
    MaximalSubword,
    ReductionTrace,
    Step,
    is_repeat_word,
    is_return_word,
    maximal_subwords,
    reduce_op1,
    reduce_op2,
    validate_trace,
)
from .nesting import (
    NestingResult,
    NestingSolver,
    is_one_reducible,
    is_one_reducible_via_pattern,
    nesting_index,
    verify_letter_removal_bound,
)
from .diagrams import (
    ChordDiagram,
    CircleGraph,
    chord_diagram,
    chords_cross,
    circle_graph,
    contains_c12,
    contains_cnm,
    generate,
    graphs_isomorphic,
    is_cluster_graph,
)
from .enumeration import enumerate_ascending, min_size_for_ni, tally_nesting

__version__ = "0.1.0"

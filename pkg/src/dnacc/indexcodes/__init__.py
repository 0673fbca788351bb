"""(l, M, d) index-correcting codes."""
from .bridge import messages_from_code
from .construction import construct_coset, construct_extend, extension_steps, log2_exact
from .linear import (
    Coset,
    LinearInnerCode,
    coset_partition,
    hamming_code,
    inner_code_by_name,
    parity_code,
    repetition_code,
)
from .matrix_io import format_matrix, parse_matrix, parse_rows, read_matrix, read_rows, write_matrix
from .search import colouring_bound, confusability_graph, index_space_size, search_exact_F, search_greedy
from .tuples import IndexCode, IndexTuple, Validation, min_index_distance, validate_code

__all__ = [
    "messages_from_code",
    "construct_coset", "construct_extend", "extension_steps", "log2_exact",
    "Coset", "LinearInnerCode", "coset_partition", "hamming_code", "inner_code_by_name",
    "parity_code", "repetition_code",
    "format_matrix", "parse_matrix", "parse_rows", "read_matrix", "read_rows", "write_matrix",
    "colouring_bound", "confusability_graph", "index_space_size", "search_exact_F", "search_greedy",
    "IndexCode", "IndexTuple", "Validation", "min_index_distance", "validate_code",
]

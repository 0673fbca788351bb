"""Binary words, strands, messages and the size of the message space."""
from .bits import BitVector, all_words, hamming, hamming_ball, popcount, popcount_array
from .counting import distinct_space_size, iter_messages, message_redundancy, space_size
from .message import (
    DataMultiset,
    Message,
    Strand,
    SystemParams,
    data_multiset,
    data_set,
    indices_of,
    is_distinct_data,
    make_message,
    message_from_pairs,
)

__all__ = [
    "BitVector", "all_words", "hamming", "hamming_ball", "popcount", "popcount_array",
    "distinct_space_size", "iter_messages", "message_redundancy", "space_size",
    "DataMultiset", "Message", "Strand", "SystemParams", "data_multiset", "data_set",
    "indices_of", "is_distinct_data", "make_message", "message_from_pairs",
]

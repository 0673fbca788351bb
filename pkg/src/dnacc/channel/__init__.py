"""The (tau, e_i, e_d)_K channel, its outputs, oracles and decoders."""
from .decoder import brute_force_decode, plurality_decode
from .enumeration import enumerate_outputs, noisy_reads, output_count_estimate
from .model import ChannelParams, ReadPool, Regime
from .oracles import (
    DccCheck,
    Disjointness,
    Guarantee,
    is_dcc_brute,
    is_dcc_by_distance,
    outputs_disjoint,
    split_by_multiset,
)
from .sampler import sample_output

__all__ = [
    "brute_force_decode", "plurality_decode",
    "enumerate_outputs", "noisy_reads", "output_count_estimate",
    "ChannelParams", "ReadPool", "Regime",
    "DccCheck", "Disjointness", "Guarantee", "is_dcc_brute", "is_dcc_by_distance",
    "outputs_disjoint", "split_by_multiset",
    "sample_output",
]

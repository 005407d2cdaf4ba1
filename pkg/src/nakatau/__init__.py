"""Tau-tilting theory, exceptional sequences and mutation for Nakayama algebras."""

from .algebra import (
    Algebra,
    Component,
    IndModule,
    Pair,
    SignedInd,
    format_list,
    format_signed,
    hom_dim,
    hom_windows,
    load_algebra,
    named_algebra,
    parse_list,
    parse_signed,
    tau,
    validate_algebra,
)
from .errors import DomainError
from .mutation import classify_pair, mutate_at, mutate_pair, mutation_graph, orbit
from .reduction import e_map, e_map_inverse, jasso, v_map
from .sequences import psi, psi_inverse, tf_orders
from .tilting import bongartz, cobongartz, tau_tilting_pairs

__all__ = [
    "Algebra", "Component", "IndModule", "Pair", "SignedInd", "DomainError",
    "format_list", "format_signed", "hom_dim", "hom_windows", "load_algebra",
    "named_algebra", "parse_list", "parse_signed", "tau", "validate_algebra",
    "classify_pair", "mutate_at", "mutate_pair", "mutation_graph", "orbit",
    "e_map", "e_map_inverse", "jasso", "v_map", "psi", "psi_inverse", "tf_orders",
    "bongartz", "cobongartz", "tau_tilting_pairs",
]

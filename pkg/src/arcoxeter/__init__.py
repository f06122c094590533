"""Auslander-Reiten quivers of ADE quivers built inside the Coxeter complex."""
from .rootsys import DynkinType, RootSystem, build_root_system
from .weyl import WeylElement, coset_adjacent, min_coset_rep, min_double_coset_rep, word_to_element
from .words import CommClass, ReducedWord, census, is_convex, normal_form, root_order
from .quiverform import (
    Orientation,
    adapted_class,
    adapted_word,
    coxeter_element,
    is_adapted,
    level_size,
    ringel_form,
)
from .chamber import chamber_weights, conjecture_sweep, level_structure, linearity_witness
from .arq import ARQuiver, arq_from_cosets, arq_from_ringel, arq_from_word, is_alternating, readings

__version__ = "0.1.0"

__all__ = [
    "ARQuiver",
    "CommClass",
    "DynkinType",
    "Orientation",
    "ReducedWord",
    "RootSystem",
    "WeylElement",
    "adapted_class",
    "adapted_word",
    "arq_from_cosets",
    "arq_from_ringel",
    "arq_from_word",
    "build_root_system",
    "census",
    "chamber_weights",
    "conjecture_sweep",
    "coset_adjacent",
    "coxeter_element",
    "is_adapted",
    "is_alternating",
    "is_convex",
    "level_size",
    "level_structure",
    "linearity_witness",
    "min_coset_rep",
    "min_double_coset_rep",
    "normal_form",
    "readings",
    "ringel_form",
    "root_order",
    "word_to_element",
]

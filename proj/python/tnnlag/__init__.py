"""Exact computations on the totally nonnegative Lagrangian Grassmannian.

Numbers cross the boundary as ``fractions.Fraction``; matrices accept ints,
Fractions and ``"p/q"`` strings.
"""

from ._tnnlag import (
    Perm,
    Point,
    TnnlagError,
    bruhat_leq,
    closure_witness,
    construct,
    construction_point,
    covers,
    enumerate,
    perm_from_necklace,
    poset,
    positivity_flow,
    random_point,
    random_sym_point,
    remove_sym_bridge,
    sigma,
    top_cell,
)

__all__ = [
    "Perm",
    "Point",
    "TnnlagError",
    "bruhat_leq",
    "closure_witness",
    "construct",
    "construction_point",
    "covers",
    "enumerate",
    "perm_from_necklace",
    "poset",
    "positivity_flow",
    "random_point",
    "random_sym_point",
    "remove_sym_bridge",
    "sigma",
    "top_cell",
]

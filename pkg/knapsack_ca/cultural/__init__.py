"""
Cultural algorithm: belief space plus the influence/acceptance loop.
"""

from .algorithm import ca_step, influence_select_parents, run_ca, solve_ca
from .belief_space import BeliefSnapshot, BeliefSpace, accept, belief_capacity, init_belief_space

__all__ = [
    "BeliefSpace",
    "BeliefSnapshot",
    "belief_capacity",
    "init_belief_space",
    "accept",
    "influence_select_parents",
    "ca_step",
    "run_ca",
    "solve_ca",
]

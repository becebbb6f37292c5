"""
Knapsack problem representation, fitness evaluation and instance I/O.
"""

from .fitness import dim_damping, evaluate, penalty_coefficient, total_value, total_weight, violation
from .generator import generate_random_instance
from .instance_io import parse_instance, read_instance, serialize_instance, write_instance
from .problem import EvaluatedSolution, FitnessMode, Instance, Solution

__all__ = [
    "Instance",
    "Solution",
    "EvaluatedSolution",
    "FitnessMode",
    "total_value",
    "total_weight",
    "violation",
    "dim_damping",
    "penalty_coefficient",
    "evaluate",
    "parse_instance",
    "serialize_instance",
    "read_instance",
    "write_instance",
    "generate_random_instance",
]

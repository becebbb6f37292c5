"""
knapsack_ca: a cultural algorithm and GA baseline for the 0-1 knapsack
problem, with exact oracles and a multi-run benchmark harness.
"""

__version__ = "0.1.0"

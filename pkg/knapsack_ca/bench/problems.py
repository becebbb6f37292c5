"""
Benchmark instances: the ten classic small problems P1-P10 and the recipe
for the eight random large problems P11-P18.
"""

from knapsack_ca.knapsack.generator import generate_random_instance
from knapsack_ca.knapsack.problem import Instance

# name -> (weights, values, capacity, optimum)
_BUILTIN: dict[str, tuple[list[float], list[float], float, float]] = {
    "P1": (
        [95, 4, 60, 32, 23, 72, 80, 62, 65, 46],
        [55, 10, 47, 5, 4, 50, 8, 61, 85, 87],
        269,
        295,
    ),
    "P2": (
        [92, 4, 43, 83, 84, 68, 92, 82, 6, 44, 32, 18, 56, 83, 25, 96, 70, 48, 14, 58],
        [44, 46, 90, 72, 91, 40, 75, 35, 8, 54, 78, 40, 77, 15, 61, 17, 75, 29, 75, 63],
        878,
        1024,
    ),
    "P3": ([6, 5, 9, 7], [9, 11, 13, 15], 20, 35),
    "P4": ([2, 4, 6, 7], [6, 10, 12, 13], 11, 23),
    "P5": (
        [
            56.358531, 80.874050, 47.987304, 89.596240, 74.660482,
            85.894345, 51.353496, 1.498459, 36.445204, 16.589862,
            44.569231, 0.466933, 37.788018, 57.118442, 60.716575,
        ],
        [
            0.125126, 19.330424, 58.500931, 35.029145, 82.284005,
            17.410810, 71.050142, 30.399487, 9.140294, 14.731285,
            98.852504, 11.908322, 0.891140, 53.166295, 60.176397,
        ],
        375,
        481.0694,
    ),
    # Results tables print 51 here; exhaustive search gives 52
    "P6": ([30, 25, 20, 18, 17, 11, 5, 2, 1, 1], [20, 18, 17, 15, 15, 10, 5, 3, 1, 1], 60, 52),
    "P7": ([31, 10, 20, 19, 4, 3, 6], [70, 20, 39, 37, 7, 5, 10], 50, 107),
    "P8": (
        [983, 982, 981, 980, 979, 978, 488, 976, 972, 486, 486, 972,
         972, 485, 485, 969, 966, 483, 964, 963, 961, 958, 959],
        [981, 980, 979, 978, 977, 976, 487, 974, 970, 485, 485, 970,
         970, 484, 484, 976, 974, 482, 962, 961, 959, 958, 857],
        10000,
        9767,
    ),
    "P9": ([15, 20, 17, 8, 31], [33, 24, 36, 37, 12], 80, 130),
    "P10": (
        [84, 83, 43, 4, 44, 6, 82, 92, 25, 83, 56, 18, 58, 14, 48, 70, 96, 32, 68, 92],
        [91, 72, 90, 46, 55, 8, 35, 75, 61, 15, 77, 40, 63, 75, 29, 75, 17, 78, 40, 44],
        879,
        1025,
    ),
}

# Random-suite instance seeds start this far above the bench base seed
INSTANCE_SEED_OFFSET = 1000

# (n, W) for P11..P18
RANDOM_SUITE_RECIPES: list[tuple[int, int]] = [
    (100, 1100),
    (200, 1500),
    (300, 1700),
    (500, 2000),
    (800, 5000),
    (1000, 10000),
    (1200, 14000),
    (1500, 16000),
]


def builtin_problems() -> list[Instance]:
    """P1-P10 with their published optima."""
    return [
        Instance.from_items(weights, values, capacity, known_optimum=optimum, name=name)
        for name, (weights, values, capacity, optimum) in _BUILTIN.items()
    ]


def builtin_problem(name: str) -> Instance:
    key = name.strip().upper()
    if key not in _BUILTIN:
        raise KeyError(f"Unknown builtin problem '{name}' (expected P1..P10)")
    weights, values, capacity, optimum = _BUILTIN[key]
    return Instance.from_items(weights, values, capacity, known_optimum=optimum, name=key)


def random_suite(seed: int) -> list[Instance]:
    """
    P11-P18: random instances with values in 50..100 and weights in 5..20.

    Instance i (0-based) is generated from seed + INSTANCE_SEED_OFFSET + i, so
    one seed fixes the whole suite without sharing a stream with run i of a
    bench on the same base seed.
    """
    return [
        generate_random_instance(n, capacity, seed + INSTANCE_SEED_OFFSET + i, name=f"P{11 + i}")
        for i, (n, capacity) in enumerate(RANDOM_SUITE_RECIPES)
    ]

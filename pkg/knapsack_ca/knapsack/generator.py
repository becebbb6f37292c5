import numpy as np

from knapsack_ca.knapsack.problem import Instance
from knapsack_ca.logger import setup_logger

logger = setup_logger("knapsack.generator")

# Inclusive integer ranges of the large random benchmarks
VALUE_RANGE = (50, 100)
WEIGHT_RANGE = (5, 20)


def generate_random_instance(n: int, capacity: float, seed: int, name: str | None = None) -> Instance:
    """
    Draw a random instance: values uniform on {50..100}, weights uniform on {5..20}.

    Integer draws keep the instance within reach of the DP oracle. The same
    (n, capacity, seed) always yields the same instance.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if capacity <= 0:
        raise ValueError(f"capacity must be positive, got {capacity}")

    rng = np.random.default_rng(seed)
    values = rng.integers(VALUE_RANGE[0], VALUE_RANGE[1] + 1, size=n)
    weights = rng.integers(WEIGHT_RANGE[0], WEIGHT_RANGE[1] + 1, size=n)

    inst = Instance(weights.astype(np.float64), values.astype(np.float64), float(capacity), name=name)
    logger.debug(f"Generated {inst!r} from seed {seed}")
    return inst

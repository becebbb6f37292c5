from dataclasses import dataclass, fields, replace
from enum import Enum
from typing import Any, Mapping, Optional

from knapsack_ca.exceptions import ConfigError
from knapsack_ca.knapsack.problem import FitnessMode


class RateScheduleKind(str, Enum):
    ADAPTIVE = "adaptive"
    STATIC = "static"


class MutationScheme(str, Enum):
    PER_GENE = "per_gene"
    PER_CHROMOSOME = "per_chromosome"


def _enum(kind: type[Enum], value: Any, field_name: str) -> Enum:
    if isinstance(value, kind):
        return value
    try:
        return kind(str(value).strip().lower().replace("-", "_"))
    except ValueError:
        choices = ", ".join(member.value for member in kind)
        raise ConfigError(f"{field_name} must be one of {choices}, got {value!r}") from None


@dataclass(frozen=True)
class EvolutionConfig:
    """Parameters of one GA or CA run; the defaults are the published settings."""

    population_size: int = 100
    max_iterations: int = 50
    base_crossover_rate: float = 0.9
    base_mutation_rate: float = 0.1
    fitness_mode: FitnessMode = FitnessMode.PENALIZED
    seed: int = 0
    elitism_count: int = 1
    rate_schedule: RateScheduleKind = RateScheduleKind.ADAPTIVE
    mutation_rate_override: Optional[float] = None
    mutation_scheme: MutationScheme = MutationScheme.PER_GENE
    # Belief space (CA only)
    belief_fraction: float = 0.10
    min_difference_fraction: float = 0.5

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, "fitness_mode", FitnessMode.parse(self.fitness_mode))
        except ValueError as e:
            raise ConfigError(str(e)) from e
        object.__setattr__(self, "rate_schedule", _enum(RateScheduleKind, self.rate_schedule, "rate_schedule"))
        object.__setattr__(self, "mutation_scheme", _enum(MutationScheme, self.mutation_scheme, "mutation_scheme"))

        if self.population_size < 2:
            raise ConfigError(f"population_size must be at least 2, got {self.population_size}")
        if self.max_iterations < 1:
            raise ConfigError(f"max_iterations must be at least 1, got {self.max_iterations}")
        if not 0.0 < self.base_crossover_rate <= 1.0:
            raise ConfigError(f"base_crossover_rate must lie in (0, 1], got {self.base_crossover_rate}")
        if not 0.0 <= self.base_mutation_rate < 1.0:
            raise ConfigError(f"base_mutation_rate must lie in [0, 1), got {self.base_mutation_rate}")
        if not 0 <= self.elitism_count < self.population_size:
            raise ConfigError(
                f"elitism_count must lie in [0, population_size), got {self.elitism_count}"
            )
        if self.mutation_rate_override is not None and not 0.0 <= self.mutation_rate_override <= 1.0:
            raise ConfigError(f"mutation_rate_override must lie in [0, 1], got {self.mutation_rate_override}")
        if not 0.0 < self.belief_fraction <= 1.0:
            raise ConfigError(f"belief_fraction must lie in (0, 1], got {self.belief_fraction}")
        if self.min_difference_fraction < 0.0:
            raise ConfigError(f"min_difference_fraction must be non-negative, got {self.min_difference_fraction}")

    @classmethod
    def from_mapping(cls, config: Mapping[str, Any], **overrides: Any) -> "EvolutionConfig":
        """
        Build a config from the loaded YAML (evolution and cultural sections).

        Overrides whose value is None are ignored, so unset CLI flags fall
        through to the file values.
        """
        known = {f.name for f in fields(cls)}
        values: dict[str, Any] = {}
        for section in ("evolution", "cultural"):
            for key, value in (config.get(section) or {}).items():
                if key not in known:
                    raise ConfigError(f"Unknown key '{section}.{key}'")
                values[key] = value
        for key, value in overrides.items():
            if key not in known:
                raise ConfigError(f"Unknown parameter '{key}'")
            if value is not None:
                values[key] = value
        return cls(**values)

    def with_seed(self, seed: int) -> "EvolutionConfig":
        return replace(self, seed=seed)

"""
Problem representation for the 0-1 knapsack.

All types are immutable after construction: numpy arrays are copied and
flagged read-only, so instances and solutions can be shared between runs.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Optional, Sequence

import numpy as np

from knapsack_ca.exceptions import InvalidInstanceError


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


class FitnessMode(str, Enum):
    """How an overweight selection is scored."""

    PENALIZED = "penalized"
    ZERO_IF_INVALID = "zero_if_invalid"

    @classmethod
    def parse(cls, value: "str | FitnessMode") -> "FitnessMode":
        if isinstance(value, cls):
            return value
        aliases = {"penalty": cls.PENALIZED, "zero": cls.ZERO_IF_INVALID}
        key = str(value).strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError as e:
            raise ValueError(f"Unknown fitness mode '{value}'") from e


@dataclass(frozen=True, eq=False)
class Instance:
    """A knapsack problem: n items with positive weights and values, and a capacity W."""

    weights: np.ndarray
    values: np.ndarray
    capacity: float
    known_optimum: Optional[float] = None
    name: Optional[str] = None

    def __post_init__(self) -> None:
        weights = np.asarray(self.weights, dtype=np.float64)
        values = np.asarray(self.values, dtype=np.float64)

        if weights.ndim != 1 or values.ndim != 1:
            raise InvalidInstanceError("weights and values must be one-dimensional")
        if weights.size == 0:
            raise InvalidInstanceError("an instance needs at least one item")
        if weights.size != values.size:
            raise InvalidInstanceError(
                f"weights and values differ in length ({weights.size} != {values.size})"
            )
        if not np.all(np.isfinite(weights)) or not np.all(weights > 0):
            raise InvalidInstanceError("every weight must be a positive finite number")
        if not np.all(np.isfinite(values)) or not np.all(values > 0):
            raise InvalidInstanceError("every value must be a positive finite number")
        if not np.isfinite(self.capacity) or self.capacity <= 0:
            raise InvalidInstanceError(f"capacity must be positive, got {self.capacity}")

        object.__setattr__(self, "weights", _frozen(weights))
        object.__setattr__(self, "values", _frozen(values))
        object.__setattr__(self, "capacity", float(self.capacity))
        if self.known_optimum is not None:
            object.__setattr__(self, "known_optimum", float(self.known_optimum))

    @classmethod
    def from_items(
        cls,
        weights: Sequence[float],
        values: Sequence[float],
        capacity: float,
        known_optimum: Optional[float] = None,
        name: Optional[str] = None,
    ) -> "Instance":
        return cls(np.asarray(weights, dtype=np.float64), np.asarray(values, dtype=np.float64),
                   capacity, known_optimum, name)

    @property
    def n(self) -> int:
        return int(self.weights.size)

    @property
    def has_integer_weights(self) -> bool:
        """True when every weight and the capacity are whole numbers (the DP precondition)."""
        return bool(np.all(self.weights == np.floor(self.weights))) and float(self.capacity).is_integer()

    def with_optimum(self, value: Optional[float]) -> "Instance":
        return replace(self, known_optimum=value)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        return (
            np.array_equal(self.weights, other.weights)
            and np.array_equal(self.values, other.values)
            and self.capacity == other.capacity
            and self.known_optimum == other.known_optimum
            and self.name == other.name
        )

    def __hash__(self) -> int:
        return hash((self.weights.tobytes(), self.values.tobytes(), self.capacity, self.known_optimum, self.name))

    def __repr__(self) -> str:
        label = self.name or "unnamed"
        return f"Instance({label}, n={self.n}, W={self.capacity:g}, optimum={self.known_optimum})"


@dataclass(frozen=True, eq=False)
class Solution:
    """A fixed-length bit vector; bit i set means item i is packed."""

    bits: np.ndarray

    def __post_init__(self) -> None:
        bits = np.asarray(self.bits)
        if bits.ndim != 1:
            raise ValueError("a solution is a one-dimensional bit vector")
        if bits.dtype != np.bool_:
            if bits.size and not np.all((bits == 0) | (bits == 1)):
                raise ValueError("solution bits must be 0 or 1")
            bits = bits.astype(np.bool_)
        object.__setattr__(self, "bits", _frozen(bits))

    @classmethod
    def from_bits(cls, bits: Iterable[int | bool]) -> "Solution":
        return cls(np.fromiter((bool(b) for b in bits), dtype=np.bool_))

    @classmethod
    def zeros(cls, n: int) -> "Solution":
        return cls(np.zeros(n, dtype=np.bool_))

    @classmethod
    def ones(cls, n: int) -> "Solution":
        return cls(np.ones(n, dtype=np.bool_))

    @property
    def n(self) -> int:
        return int(self.bits.size)

    def count_selected(self) -> int:
        return int(np.count_nonzero(self.bits))

    def selected_indices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self.bits)]

    def hamming(self, other: "Solution") -> int:
        return int(np.count_nonzero(self.bits != other.bits))

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Solution):
            return NotImplemented
        return np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash(self.bits.tobytes())

    def __repr__(self) -> str:
        text = self.to_string()
        if len(text) > 40:
            text = f"{text[:37]}..."
        return f"Solution({text})"


@dataclass(frozen=True)
class EvaluatedSolution:
    """A solution with its raw value, weight, capacity violation and fitness."""

    solution: Solution
    total_value: float
    total_weight: float
    violation: float
    fitness: float

    @property
    def bits(self) -> np.ndarray:
        return self.solution.bits

    @property
    def feasible(self) -> bool:
        return self.violation == 0.0

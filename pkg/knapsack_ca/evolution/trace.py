from dataclasses import dataclass, field
from typing import Optional

import pandas as pd

TRACE_COLUMNS = ["iteration", "best_so_far", "p_c", "p_m", "belief_min", "belief_max"]


@dataclass(frozen=True)
class TraceRecord:
    iteration: int
    best_so_far: float
    p_c: float
    p_m: float
    belief_min: Optional[float] = None
    belief_max: Optional[float] = None
    # Whether the incumbent behind best_so_far fits the knapsack; not exported
    feasible: bool = True


@dataclass
class ConvergenceTrace:
    """Per-generation best-so-far fitness and rates; generation 0 is the initial population."""

    records: list[TraceRecord] = field(default_factory=list)

    def append(self, record: TraceRecord) -> None:
        """
        Add the next generation's record.

        Best-so-far may only fall at the generation where the incumbent first
        becomes feasible; any other drop raises ValueError.
        """
        if self.records:
            last = self.records[-1]
            if record.iteration != last.iteration + 1:
                raise ValueError(f"trace iterations must be consecutive, got {record.iteration} after {last.iteration}")
            first_feasible = record.feasible and not last.feasible
            if record.best_so_far < last.best_so_far and not first_feasible:
                raise ValueError(
                    f"best-so-far fell from {last.best_so_far:g} to {record.best_so_far:g} at iteration {record.iteration}"
                )
        self.records.append(record)

    def best_values(self) -> list[float]:
        return [r.best_so_far for r in self.records]

    @property
    def final_best(self) -> float:
        return self.records[-1].best_so_far

    @property
    def feasible_from_start(self) -> bool:
        """True when generation 0 already had a feasible incumbent, so the trace must be monotone."""
        return bool(self.records) and self.records[0].feasible

    def is_monotone(self) -> bool:
        values = self.best_values()
        return all(b >= a for a, b in zip(values, values[1:]))

    def to_frame(self) -> pd.DataFrame:
        df = pd.DataFrame(
            [
                (r.iteration, r.best_so_far, r.p_c, r.p_m, r.belief_min, r.belief_max)
                for r in self.records
            ],
            columns=TRACE_COLUMNS,
        )
        return df.astype({"iteration": "int64", "best_so_far": "float64", "p_c": "float64",
                          "p_m": "float64", "belief_min": "float64", "belief_max": "float64"})

    def __len__(self) -> int:
        return len(self.records)

"""
Published reference results, bundled for side-by-side context only.

These numbers come from other implementations on other hardware and with
unknown seeds (and, for P11-P18, unknown instances). They are never used as
pass/fail targets.
"""

from pathlib import Path
from typing import Optional

import pandas as pd

from knapsack_ca.logger import setup_logger

logger = setup_logger("bench.literature")

LITERATURE_PATH = Path(__file__).parent / "literature.csv"


def literature_results(instances: Optional[list[str]] = None) -> pd.DataFrame:
    """
    Columns: instance, method, best, worst, average, median, avg_time_s.

    avg_time_s is empty for P11-P18, where no times were published.
    """
    df = pd.read_csv(
        LITERATURE_PATH,
        dtype={"instance": str, "method": str},
    ).astype({"best": "float64", "worst": "float64", "average": "float64", "median": "float64", "avg_time_s": "float64"})
    if instances is not None:
        df = df[df["instance"].isin(instances)].reset_index(drop=True)
    logger.debug(f"Loaded {len(df)} published result rows")
    return df

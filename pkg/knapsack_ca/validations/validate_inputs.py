from typing import Optional

import pandas as pd
from pandera.errors import SchemaErrors

from knapsack_ca.exceptions import InstanceParseError
from knapsack_ca.logger import setup_logger
from knapsack_ca.validations.input_schemas import items_schema

logger = setup_logger("validation.input")


def validate_items(df: pd.DataFrame, source: Optional[str] = None) -> pd.DataFrame:
    """
    Validate a parsed item table (line, weight, value).

    Unlike a data feed, an instance with a bad item is unusable, so the first
    failing row aborts parsing with its source line instead of being dropped.
    """
    logger.debug(f"Starting item validation on {len(df)} rows")
    try:
        validated_df = items_schema.validate(df, lazy=True)
        logger.debug("Item validation passed")
        return validated_df

    except SchemaErrors as err:
        failed = err.failure_cases
        logger.warning(f"Item validation failed: {len(failed)} issues")
        logger.warning(f"Errors summary:\n{failed.groupby(['column', 'check']).size()}")

        failed_indices = failed["index"].dropna().unique()
        if len(failed_indices) > 0:
            first = df.loc[sorted(failed_indices)[0]]
            column = failed.loc[failed["index"] == first.name, "column"].iloc[0]
            raise InstanceParseError(
                f"item {column} must be a positive finite number, got {first[column]!r}",
                line=int(first["line"]),
                source=source,
            ) from err

        raise InstanceParseError(f"item table is malformed: {failed.iloc[0]['check']}", source=source) from err

import pandas as pd
from pandera.errors import SchemaErrors
from pandera.pandas import DataFrameSchema

from knapsack_ca.logger import setup_logger
from knapsack_ca.validations.output_schemas import belief_schema, monotone_trace_schema, stats_schema, trace_schema

logger = setup_logger("validation.output")


def _validate(df: pd.DataFrame, schema: DataFrameSchema, what: str) -> pd.DataFrame:
    """
    Validate a result table before it is written.

    Result tables are never trimmed: any failing row aborts the write.
    """
    logger.debug(f"Starting {what} validation on {len(df)} rows")
    try:
        validated_df = schema.validate(df, lazy=True)
        logger.debug(f"{what.capitalize()} validation passed")
        return validated_df

    except SchemaErrors as err:
        failed = err.failure_cases
        logger.error(f"{what.capitalize()} validation failed with {len(failed)} issues")
        logger.error(f"Failure summary:\n{failed.groupby(['column', 'check'], dropna=False).size()}")
        raise ValueError(f"{what} table failed validation ({len(failed)} issues); nothing written") from err


def validate_stats(df: pd.DataFrame) -> pd.DataFrame:
    return _validate(df, stats_schema, "stats")


def validate_trace(df: pd.DataFrame, monotone: bool = False) -> pd.DataFrame:
    """With `monotone`, best_so_far must also be nondecreasing."""
    return _validate(df, monotone_trace_schema if monotone else trace_schema, "trace")


def validate_beliefs(df: pd.DataFrame) -> pd.DataFrame:
    return _validate(df, belief_schema, "belief snapshot")

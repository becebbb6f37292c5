from pandera.pandas import Check, Column, DataFrameSchema

# Slack for comparing aggregates of identical floats (mean of equal values can drift by an ulp)
_TOL = 1e-9


def _le(lower: str, upper: str) -> Check:
    return Check(
        lambda df: df[lower] <= df[upper] + _TOL * df[upper].abs().clip(lower=1.0),
        error=f"{lower} <= {upper}",
    )


stats_schema = DataFrameSchema(
    {
        # Identification
        "instance": Column(str, nullable=False),
        "algorithm": Column(str, Check.isin(["GA", "CA", "greedy", "oracle"]), nullable=False),
        "runs": Column(int, Check.ge(1), nullable=False),

        # Per-run best statistics
        "best": Column(float, nullable=False),
        "worst": Column(float, nullable=False),
        "average": Column(float, nullable=False),
        "median": Column(float, nullable=False),
        "std_dev": Column(float, Check.ge(0), nullable=False),

        # Empty when timing is omitted or the optimum is unknown
        "avg_time_s": Column(float, Check.ge(0), nullable=True),
        "optimum": Column(float, nullable=True),
    },
    checks=[
        _le("worst", "median"),
        _le("median", "best"),
        _le("worst", "average"),
        _le("average", "best"),
    ],
    strict=True,
    ordered=True,
)


trace_schema = DataFrameSchema(
    {
        "iteration": Column(
            int,
            [Check.ge(0), Check(lambda s: s.is_monotonic_increasing and s.is_unique, error="strictly increasing")],
            nullable=False,
        ),
        "best_so_far": Column(float, nullable=False),
        "p_c": Column(float, Check.between(0, 1), nullable=False),
        "p_m": Column(float, Check.between(0, 1), nullable=False),

        # GA traces leave the belief columns empty
        "belief_min": Column(float, nullable=True),
        "belief_max": Column(float, nullable=True),
    },
    checks=[
        Check(
            lambda df: df["belief_min"].isna() | df["belief_max"].isna() | (df["belief_min"] <= df["belief_max"]),
            error="belief_min <= belief_max",
        ),
    ],
    strict=True,
    ordered=True,
)


belief_schema = DataFrameSchema(
    {
        "iteration": Column(int, Check.ge(0), nullable=False),
        "elite_count": Column(int, Check.ge(1), nullable=False),
        "elite_fitness": Column(str, nullable=False),
        "gene_frequency": Column(str, nullable=False),
    },
    strict=True,
    ordered=True,
)


# Traces whose generation 0 was already feasible never lose best-so-far
monotone_trace_schema = trace_schema.update_column(
    "best_so_far",
    checks=[Check(lambda s: s.is_monotonic_increasing, error="best_so_far nondecreasing")],
)

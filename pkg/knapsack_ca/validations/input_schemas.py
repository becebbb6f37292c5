import numpy as np
from pandera.pandas import Check, Column, DataFrameSchema


is_finite = Check(lambda s: np.isfinite(s), error="finite")


items_schema = DataFrameSchema(
    {
        # Source line of the item, kept for diagnostics
        "line": Column(int, Check.ge(1), nullable=False),

        # Item data (both strictly positive and finite)
        "weight": Column(float, [Check.gt(0), is_finite], nullable=False),
        "value": Column(float, [Check.gt(0), is_finite], nullable=False),
    },
    strict=True,
    ordered=True,
)

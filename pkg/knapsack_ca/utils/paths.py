"""
Output path helpers.

Per-run file names are built in one place so that concurrent runs never
share a file and repeated invocations overwrite the same names.
"""

import re
from pathlib import Path


def _safe_stem(label: str) -> str:
    stem = re.sub(r"[^A-Za-z0-9._-]+", "_", label.strip())
    return stem.strip("._") or "unnamed"


def build_trace_path(trace_dir: str | Path, instance_name: str, algorithm: str, seed: int) -> Path:
    """
    Path of the trace CSV for one (instance, algorithm, seed) run.

    Example:
        build_trace_path("traces", "P11", "CA", 7)
        -> Path("traces/P11_CA_seed7.csv")
    """
    return Path(trace_dir) / f"{_safe_stem(instance_name)}_{_safe_stem(algorithm)}_seed{seed}.csv"


def ensure_parent(path: str | Path) -> Path:
    """Create the parent directory of `path` if missing and return it as a Path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path

"""
Shared utilities.

Keep helpers here small and dependency-free.
"""

from .paths import build_trace_path, ensure_parent

__all__ = ["build_trace_path", "ensure_parent"]

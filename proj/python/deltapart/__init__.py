"""Set partitions with a minimum block size: pruned enumeration, exact counts,
and a naive generate-and-test oracle."""

from ._core import (
    PruneResult,
    SearchState,
    SearchStats,
    all_partitions,
    bell_number,
    count,
    enumerate_partitions,
    naive_delta_partitions,
    parse_blocks,
    parse_rgs,
    partitions,
    render_blocks,
    render_rgs,
)

__all__ = [
    "PruneResult",
    "SearchState",
    "SearchStats",
    "all_partitions",
    "bell_number",
    "count",
    "enumerate_partitions",
    "naive_delta_partitions",
    "parse_blocks",
    "parse_rgs",
    "partitions",
    "render_blocks",
    "render_rgs",
]

"""tracelab: synthetic reasoning benchmarks and token-level trace analysis."""

__version__ = "0.1.0"

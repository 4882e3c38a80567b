"""
Utilities package for the rating engine.

This package contains the CSV parsers and the result serializers used by the command line.
"""

from .parsers import detect_format, parse_rounds_csv, parse_aggregated_csv, parse_digraph_csv
from .serializers import ResultSerializer, TraceSerializer, ProblemSerializer

__all__ = [
    "detect_format",
    "parse_rounds_csv",
    "parse_aggregated_csv",
    "parse_digraph_csv",
    "ResultSerializer",
    "TraceSerializer",
    "ProblemSerializer"
]

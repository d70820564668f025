"""Collects one line per acceptance criterion for the end-of-run summary."""

LINES: dict[int, str] = {}

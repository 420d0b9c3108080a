"""Codes for n x L binary arrays: tail-erasure correction, per-row deletion
correction, and the combined model, plus redundancy bounds and exhaustive
verification harnesses."""

__version__ = "0.1.0"

"""Exact arithmetic for i-, k- and d-congruent rational right trapezoids."""
from .model import InvalidTrapezoid, TrapezoidD, TrapezoidI, TrapezoidK

__all__ = ["InvalidTrapezoid", "TrapezoidD", "TrapezoidI", "TrapezoidK"]

"""Toric-ideal Groebner bases and standard pairs for min-cost flow on
acyclic tournament graphs."""

__version__ = "0.1.0"

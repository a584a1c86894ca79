"""Invariants of rational surface singularities given by plumbing graphs:
fundamental cycles, Milnor open books, Legendrian surgery diagrams and
Dehn-twist monodromy words."""

__version__ = "0.1.0"

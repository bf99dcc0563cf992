"""Rational closure and preferential entailment for conditional knowledge bases."""

__version__ = "0.1.0"

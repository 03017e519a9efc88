"""Exact decision procedures for tamed and compatible almost complex
structures on oriented 4-dimensional Lie algebras."""

__version__ = "0.1.0"

"""Sylow numbers below p^2: classification, closed forms and brute-force checks."""

__version__ = "0.1.0"

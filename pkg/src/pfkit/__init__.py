"""Reconstruct and analyze Picard-Fuchs operators from period expansions."""

__version__ = "0.1.0"

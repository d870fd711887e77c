"""Exact and numerical checks of q-bracket identities for hook-length statistics."""

__version__ = "0.1.0"

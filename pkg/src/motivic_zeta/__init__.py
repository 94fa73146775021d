"""Motivic zeta functions of snc-degenerations: exact poles, skeleta and monodromy."""

__version__ = "0.1.0"
__all__ = ["__version__"]

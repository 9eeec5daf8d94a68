"""Exact computations with plane curves over Q(w, a), w^2 + w + 1 = 0, a^3 = 2."""

__version__ = "0.1.0"

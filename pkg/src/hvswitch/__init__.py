"""hv-convex switching components, squared spirals and their census."""

__version__ = "0.1.0"

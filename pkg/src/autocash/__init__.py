"""Meta-learned classification algorithm recommendation with GA tuning."""

__version__ = "0.1.0"

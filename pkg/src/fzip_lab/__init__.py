"""fzip-lab: exact small-field computations for 1-truncated displays,
the Cartier/p-curvature calculus, and the Katz condition."""

__version__ = "0.1.0"
